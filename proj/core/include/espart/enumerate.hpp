#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "espart/partition.hpp"

namespace espart {

// Streams the partitions of n in a family in reverse-lexicographic order
// (larger part sequences first), one partition per next() call.
// Single-consumer. An enumerator restricted to a fixed largest part yields
// exactly the slice of the stream with that leading part; the slices over
// all largest parts tile the stream, which is what the harness shards on.
class PartitionEnumerator {
 public:
  explicit PartitionEnumerator(unsigned n, FamilySelector family = {},
                               std::optional<Int> fixed_largest = std::nullopt);

  std::optional<Partition> next();

 private:
  bool advance_();
  void complete_();
  Int first_candidate_(const Int& cap, const Int& rem) const;
  Int next_candidate_(const Int& below, const Int& rem) const;
  void push_(const Int& v);
  Int pop_();

  unsigned n_;
  FamilySelector family_;
  std::optional<Int> fixed_largest_;
  std::vector<Int> parts_;
  Int remaining_ = 0;
  bool started_ = false;
  bool done_ = false;
  bool at_empty_ = false;
};

void for_each_partition(unsigned n, const FamilySelector& family,
                        const std::function<void(const Partition&)>& visit);

std::vector<Partition> enumerate_partitions(unsigned n,
                                            FamilySelector family = {});

// p(n) by Euler's pentagonal-number recurrence. Independent of the
// enumerator; the two are cross-checked in the tests.
Int partition_count(unsigned n);

}  // namespace espart
