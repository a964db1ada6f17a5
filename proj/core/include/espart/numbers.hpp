#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace espart {

// All part values, multiplicities, counts and series coefficients are exact
// unbounded integers. Image parts are products of up to k parts, so even
// small inputs escape any fixed width.
using Int = boost::multiprecision::cpp_int;

// C(n, k); zero when k < 0 or k > n.
Int binomial(const Int& n, const Int& k);

// Floor of the square root. v must be nonnegative.
Int isqrt(const Int& v);

// Deterministic trial division; exact at any magnitude this project meets.
bool is_prime(const Int& v);

// Divisors of v >= 1 in increasing order, including 1 and v.
std::vector<Int> divisor_list(const Int& v);

// Order-sensitive 64-bit mixing, stable across runs and platforms.
std::uint64_t hash_mix(std::uint64_t h, std::uint64_t x);
std::uint64_t hash_int(std::uint64_t h, const Int& v);

// Parse a decimal integer (optional sign). Throws errc::config_invalid.
Int parse_int(const std::string& text);

}  // namespace espart
