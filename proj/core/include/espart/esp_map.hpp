#pragma once

#include <vector>

#include "espart/partition.hpp"

namespace espart {

// Image of lambda under the k-th elementary symmetric partition map, kept
// sparse: the map holds one entry per distinct product value, so memory is
// bounded by the number of distinct values rather than by C(length, k).
// Throws errc::undefined when length(lambda) < k.
MultiplicityMap pre_k_multiplicities(const Partition& lambda, unsigned k);

// The same image expanded to a weakly decreasing partition of C(length, k)
// parts.
Partition pre_k(const Partition& lambda, unsigned k);

// (e_1(lambda), ..., e_l(lambda)): the unsigned coefficients of the monic
// polynomial with the parts as roots. Throws errc::empty_partition.
std::vector<Int> elementary_values(const Partition& lambda);

}  // namespace espart
