#include "espart/esp_map.hpp"

#include <string>

#include "espart/error.hpp"

namespace espart {

namespace {

struct ValueGroup {
  Int value;
  unsigned mult;
};

// Depth-first walk over exponent vectors (b_1, ..., b_t), 0 <= b_i <= m_i,
// sum b_i = budget. Each full vector contributes prod C(m_i, b_i) copies of
// the product value prod d_i^{b_i}.
void accumulate(const std::vector<ValueGroup>& groups,
                const std::vector<unsigned>& suffix_capacity, std::size_t i,
                unsigned budget, const Int& product, const Int& ways,
                MultiplicityMap& acc) {
  if (budget == 0) {
    acc.add(product, ways);
    return;
  }
  if (i == groups.size() || suffix_capacity[i] < budget) return;
  const auto& [value, mult] = groups[i];
  Int power = 1;
  Int comb = 1;
  const unsigned top = mult < budget ? mult : budget;
  for (unsigned b = 0; b <= top; ++b) {
    if (b > 0) {
      power *= value;
      comb = comb * (mult - b + 1) / b;
    }
    accumulate(groups, suffix_capacity, i + 1, budget - b, product * power,
               ways * comb, acc);
  }
}

}  // namespace

MultiplicityMap pre_k_multiplicities(const Partition& lambda, unsigned k) {
  if (k < 1) fail(errc::config_invalid, "pre_k requires k >= 1");
  if (lambda.length() < k)
    fail(errc::undefined, "pre_" + std::to_string(k) +
                              " is undefined: partition has " +
                              std::to_string(lambda.length()) + " part(s)");
  std::vector<ValueGroup> groups;
  for (const auto& [value, count] : lambda.to_multiplicities().entries())
    groups.push_back({value, static_cast<unsigned>(count)});
  std::vector<unsigned> suffix_capacity(groups.size() + 1, 0);
  for (std::size_t i = groups.size(); i-- > 0;)
    suffix_capacity[i] = suffix_capacity[i + 1] + groups[i].mult;

  MultiplicityMap image;
  accumulate(groups, suffix_capacity, 0, k, 1, 1, image);
  return image;
}

Partition pre_k(const Partition& lambda, unsigned k) {
  return pre_k_multiplicities(lambda, k).to_partition();
}

std::vector<Int> elementary_values(const Partition& lambda) {
  if (lambda.empty())
    fail(errc::empty_partition, "elementary_values of the empty partition");
  // Incremental expansion of prod (x + lambda_i); e[r] is the coefficient of
  // x^(len-r), which is e_r of the parts seen so far.
  std::vector<Int> e(lambda.length() + 1, 0);
  e[0] = 1;
  std::size_t used = 0;
  for (const Int& part : lambda.parts()) {
    ++used;
    for (std::size_t r = used; r >= 1; --r) e[r] += part * e[r - 1];
  }
  return std::vector<Int>(e.begin() + 1, e.end());
}

}  // namespace espart
