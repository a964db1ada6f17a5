#include "espart/numbers.hpp"

#include <cctype>

#include "espart/error.hpp"

namespace espart {

const char* errc_name(errc code) {
  switch (code) {
    case errc::undefined: return "UNDEFINED";
    case errc::outside_class: return "OUTSIDE_CLASS";
    case errc::not_in_image: return "NOT_IN_IMAGE";
    case errc::non_prime: return "NON_PRIME";
    case errc::unsupported_method: return "UNSUPPORTED_METHOD";
    case errc::not_distinct: return "NOT_DISTINCT";
    case errc::empty_partition: return "EMPTY_PARTITION";
    case errc::too_short: return "TOO_SHORT";
    case errc::non_unit: return "NON_UNIT";
    case errc::malformed: return "MALFORMED";
    case errc::malformed_bfile: return "MALFORMED_BFILE";
    case errc::config_invalid: return "CONFIG_INVALID";
  }
  return "UNKNOWN";
}

int exit_code(errc code) {
  switch (code) {
    case errc::undefined: return 10;
    case errc::outside_class: return 11;
    case errc::not_in_image: return 12;
    case errc::malformed_bfile: return 15;
    default: return 14;  // CONFIG_INVALID and other usage-class failures
  }
}

Int binomial(const Int& n, const Int& k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Int kk = k;
  if (n - k < kk) kk = n - k;
  Int result = 1;
  // result * (n-i) is divisible by (i+1) at every step.
  for (Int i = 0; i < kk; ++i) {
    result *= n - i;
    result /= i + 1;
  }
  return result;
}

Int isqrt(const Int& v) {
  if (v < 0) fail(errc::config_invalid, "isqrt of a negative value");
  return boost::multiprecision::sqrt(v);
}

bool is_prime(const Int& v) {
  if (v < 2) return false;
  if (v < 4) return true;
  if (v % 2 == 0 || v % 3 == 0) return false;
  const Int root = isqrt(v);
  for (Int d = 5; d <= root; d += 6) {
    if (v % d == 0 || v % (d + 2) == 0) return false;
  }
  return true;
}

std::vector<Int> divisor_list(const Int& v) {
  if (v < 1) fail(errc::config_invalid, "divisor_list requires a positive value");
  std::vector<Int> low, high;
  const Int root = isqrt(v);
  for (Int d = 1; d <= root; ++d) {
    if (v % d == 0) {
      low.push_back(d);
      if (d * d != v) high.push_back(v / d);
    }
  }
  for (auto it = high.rbegin(); it != high.rend(); ++it) low.push_back(*it);
  return low;
}

std::uint64_t hash_mix(std::uint64_t h, std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL + h;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t hash_int(std::uint64_t h, const Int& v) {
  h = hash_mix(h, v < 0 ? 2u : 1u);
  Int m = v < 0 ? Int(-v) : v;
  if (m == 0) return hash_mix(h, 0);
  const Int mask = 0xffffffffffffffffULL;
  while (m > 0) {
    h = hash_mix(h, static_cast<std::uint64_t>(Int(m & mask)));
    m >>= 64;
  }
  return h;
}

Int parse_int(const std::string& text) {
  if (text.empty()) fail(errc::config_invalid, "empty integer token");
  std::size_t start = (text[0] == '+' || text[0] == '-') ? 1 : 0;
  if (start == text.size())
    fail(errc::config_invalid, "bad integer token '" + text + "'");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      fail(errc::config_invalid, "bad integer token '" + text + "'");
  }
  return Int(text);
}

}  // namespace espart
