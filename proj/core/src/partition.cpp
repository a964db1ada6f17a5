#include "espart/partition.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <limits>
#include <sstream>

#include "espart/error.hpp"

namespace espart {

Partition::Partition(std::vector<Int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1)
      fail(errc::malformed, "partition parts must be positive");
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
      fail(errc::malformed, "partition parts must be weakly decreasing");
  }
}

Partition Partition::from_unsorted(std::vector<Int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<Int>());
  return Partition(std::move(parts));
}

Int Partition::size() const {
  Int total = 0;
  for (const Int& p : parts_) total += p;
  return total;
}

Int Partition::multiplicity(const Int& value) const {
  auto range = std::equal_range(parts_.begin(), parts_.end(), value,
                                std::greater<Int>());
  return Int(range.second - range.first);
}

MultiplicityMap Partition::to_multiplicities() const {
  MultiplicityMap m;
  std::size_t i = 0;
  while (i < parts_.size()) {
    std::size_t j = i;
    while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
    m.add(parts_[i], Int(j - i));
    i = j;
  }
  return m;
}

std::string Partition::str() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out << ',';
    out << parts_[i];
  }
  return out.str();
}

Partition Partition::parse(std::string_view text) {
  std::vector<Int> parts;
  std::size_t pos = 0;
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
      s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
      s.remove_suffix(1);
    return s;
  };
  std::string_view rest = trim(text);
  if (rest.empty()) return Partition{};
  while (true) {
    std::size_t comma = rest.find(',', pos);
    std::string_view token =
        trim(comma == std::string_view::npos ? rest.substr(pos)
                                             : rest.substr(pos, comma - pos));
    Int value = parse_int(std::string(token));
    if (value < 1)
      fail(errc::config_invalid, "partition parts must be positive");
    if (!parts.empty() && parts.back() < value)
      fail(errc::config_invalid,
           "partition parts must be weakly decreasing: '" +
               std::string(text) + "'");
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

bool reverse_lex_less(const Partition& a, const Partition& b) {
  return std::lexicographical_compare(b.parts().begin(), b.parts().end(),
                                      a.parts().begin(), a.parts().end());
}

void MultiplicityMap::add(const Int& value, const Int& count) {
  if (value < 1) fail(errc::malformed, "part values must be positive");
  if (count < 0) fail(errc::malformed, "multiplicities must be nonnegative");
  if (count == 0) return;
  auto [it, inserted] = entries_.try_emplace(value, count);
  if (!inserted) it->second += count;
}

Int MultiplicityMap::count(const Int& value) const {
  auto it = entries_.find(value);
  return it == entries_.end() ? Int(0) : it->second;
}

Int MultiplicityMap::total_parts() const {
  Int total = 0;
  for (const auto& [value, count] : entries_) total += count;
  return total;
}

Int MultiplicityMap::weight() const {
  Int total = 0;
  for (const auto& [value, count] : entries_) total += value * count;
  return total;
}

Partition MultiplicityMap::to_partition() const {
  std::vector<Int> parts;
  for (auto it = entries_.rbegin(); it != entries_.rend(); ++it) {
    if (it->second > std::numeric_limits<std::size_t>::max() / 2)
      throw std::length_error("partition too large to materialize");
    auto count = static_cast<std::size_t>(it->second);
    parts.insert(parts.end(), count, it->first);
  }
  return Partition(std::move(parts));
}

std::uint64_t MultiplicityMap::fingerprint() const {
  std::uint64_t h = 0x243f6a8885a308d3ULL;
  for (const auto& [value, count] : entries_) {
    h = hash_int(h, value);
    h = hash_int(h, count);
  }
  return h;
}

std::string MultiplicityMap::str() const {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (auto it = entries_.rbegin(); it != entries_.rend(); ++it) {
    if (!first) out << ", ";
    out << it->first << ':' << it->second;
    first = false;
  }
  out << '}';
  return out.str();
}

bool is_power_of_two(const Int& v) {
  if (v < 1) return false;
  return (v & (v - 1)) == 0;
}

bool FamilySelector::contains(const Partition& p) const {
  if (p.length() < min_length) return false;
  switch (family) {
    case Family::all:
      return true;
    case Family::binary:
      return std::all_of(p.parts().begin(), p.parts().end(), is_power_of_two);
    case Family::odd:
      return std::all_of(p.parts().begin(), p.parts().end(),
                         [](const Int& v) { return v % 2 == 1; });
    case Family::distinct:
      for (std::size_t i = 0; i + 1 < p.length(); ++i)
        if (p.parts()[i] == p.parts()[i + 1]) return false;
      return true;
  }
  return false;
}

std::string FamilySelector::str() const {
  std::string name;
  switch (family) {
    case Family::all: name = "ALL"; break;
    case Family::binary: name = "BINARY"; break;
    case Family::odd: name = "ODD"; break;
    case Family::distinct: name = "DISTINCT"; break;
  }
  if (min_length > 0) name += ",minLength=" + std::to_string(min_length);
  return name;
}

bool in_s_k(const Partition& lambda, unsigned k) {
  if (k < 1) fail(errc::config_invalid, "in_s_k requires k >= 1");
  const Int ones = lambda.multiplicity(1);
  if (ones >= k) return true;
  if (ones + 1 != k) return false;
  std::size_t i = 0;
  const auto& parts = lambda.parts();
  while (i < parts.size()) {
    if (is_prime(parts[i])) return true;
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    i = j;
  }
  return false;
}

}  // namespace espart
