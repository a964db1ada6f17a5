#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "espart/numbers.hpp"

namespace espart {

class MultiplicityMap;

// A weakly decreasing finite sequence of positive integers. The empty
// sequence is the unique partition of 0.
class Partition {
 public:
  Partition() = default;
  // parts must already be weakly decreasing and positive.
  explicit Partition(std::vector<Int> parts);
  static Partition from_unsorted(std::vector<Int> parts);

  const std::vector<Int>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  Int size() const;

  // m_lambda(value): how many parts equal value.
  Int multiplicity(const Int& value) const;
  MultiplicityMap to_multiplicities() const;

  // Text form: comma-separated parts ("4,3,2,2"); "" is the empty partition.
  std::string str() const;
  static Partition parse(std::string_view text);

  bool operator==(const Partition&) const = default;

 private:
  std::vector<Int> parts_;
};

// a strictly before b in reverse-lexicographic (enumeration) order.
bool reverse_lex_less(const Partition& a, const Partition& b);

// Sparse view of a partition: part value -> multiplicity, no zero entries.
class MultiplicityMap {
 public:
  MultiplicityMap() = default;

  // Adds count parts of the given value; count 0 is a no-op.
  void add(const Int& value, const Int& count);
  Int count(const Int& value) const;
  const std::map<Int, Int>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  Int total_parts() const;  // sum of counts
  Int weight() const;       // sum of value * count

  Partition to_partition() const;

  // Stable 64-bit digest of the sorted (value, count) list.
  std::uint64_t fingerprint() const;

  std::string str() const;  // "{12:1, 8:2, ...}" largest value first

  bool operator==(const MultiplicityMap&) const = default;
  bool operator<(const MultiplicityMap& other) const {
    return entries_ < other.entries_;
  }

 private:
  std::map<Int, Int> entries_;
};

enum class Family { all, binary, odd, distinct };

// Selects one of the partition families used throughout, with an optional
// lower bound on the number of parts.
struct FamilySelector {
  Family family = Family::all;
  std::size_t min_length = 0;

  bool contains(const Partition& p) const;
  std::string str() const;
};

bool is_power_of_two(const Int& v);

// Membership in S_k: at least k parts equal to 1, or exactly k-1 of them
// plus at least one prime part.
bool in_s_k(const Partition& lambda, unsigned k);

}  // namespace espart
