#include "espart/enumerate.hpp"

#include <cassert>
#include <mutex>

#include "espart/error.hpp"

namespace espart {

namespace {

// Largest value of the family's part alphabet that is <= x (0 when none).
// DISTINCT uses the full alphabet; distinctness is enforced by the cap.
Int family_floor(Family family, const Int& x) {
  if (x < 1) return 0;
  switch (family) {
    case Family::all:
    case Family::distinct:
      return x;
    case Family::odd:
      return (x % 2 == 1) ? x : x - 1;
    case Family::binary: {
      const auto bit = boost::multiprecision::msb(x);
      return Int(1) << bit;
    }
  }
  return 0;
}

// For DISTINCT: after choosing v, the tail must fit rem - v into pairwise
// distinct parts below v, whose maximum total is v(v-1)/2.
bool distinct_feasible(const Int& v, const Int& rem) {
  return rem - v <= v * (v - 1) / 2;
}

}  // namespace

PartitionEnumerator::PartitionEnumerator(unsigned n, FamilySelector family,
                                         std::optional<Int> fixed_largest)
    : n_(n), family_(family), fixed_largest_(std::move(fixed_largest)) {}

void PartitionEnumerator::push_(const Int& v) {
  remaining_ -= v;
  parts_.push_back(v);
}

Int PartitionEnumerator::pop_() {
  Int v = parts_.back();
  parts_.pop_back();
  remaining_ += v;
  return v;
}

Int PartitionEnumerator::first_candidate_(const Int& cap, const Int& rem) const {
  Int v = family_floor(family_.family, cap < rem ? cap : rem);
  if (family_.family == Family::distinct) {
    while (v >= 1 && !distinct_feasible(v, rem)) --v;
  }
  return v < 1 ? Int(0) : v;
}

Int PartitionEnumerator::next_candidate_(const Int& below, const Int& rem) const {
  Int v;
  switch (family_.family) {
    case Family::all:
    case Family::distinct:
      v = below - 1;
      break;
    case Family::odd:
      v = below - 2;
      break;
    case Family::binary:
      v = below / 2;
      break;
  }
  if (v < 1) return 0;
  // Feasibility only shrinks as v does, so the first failure ends the level.
  if (family_.family == Family::distinct && !distinct_feasible(v, rem))
    return 0;
  return v;
}

void PartitionEnumerator::complete_() {
  while (remaining_ > 0) {
    Int cap = parts_.empty() ? remaining_
              : family_.family == Family::distinct ? Int(parts_.back() - 1)
                                                   : parts_.back();
    Int v = first_candidate_(cap, remaining_);
    assert(v >= 1 && "greedy completion must always succeed");
    push_(v);
  }
}

bool PartitionEnumerator::advance_() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    remaining_ = n_;
    if (n_ == 0) {
      if (fixed_largest_) {
        done_ = true;
        return false;
      }
      at_empty_ = true;
      return true;
    }
    if (fixed_largest_) {
      const Int& v = *fixed_largest_;
      bool ok = v >= 1 && v <= remaining_ &&
                family_floor(family_.family, v) == v &&
                (family_.family != Family::distinct ||
                 distinct_feasible(v, remaining_));
      if (!ok) {
        done_ = true;
        return false;
      }
      push_(v);
      complete_();
      return true;
    }
    Int v = first_candidate_(remaining_, remaining_);
    if (v == 0) {
      done_ = true;
      return false;
    }
    push_(v);
    complete_();
    return true;
  }
  if (at_empty_) {
    at_empty_ = false;
    done_ = true;
    return false;
  }
  while (!parts_.empty()) {
    Int v = pop_();
    if (fixed_largest_ && parts_.empty()) break;  // the fixed root cannot move
    Int w = next_candidate_(v, remaining_);
    if (w != 0) {
      push_(w);
      complete_();
      return true;
    }
  }
  done_ = true;
  return false;
}

std::optional<Partition> PartitionEnumerator::next() {
  while (advance_()) {
    if (parts_.size() >= family_.min_length) return Partition(parts_);
  }
  return std::nullopt;
}

void for_each_partition(unsigned n, const FamilySelector& family,
                        const std::function<void(const Partition&)>& visit) {
  PartitionEnumerator stream(n, family);
  while (auto p = stream.next()) visit(*p);
}

std::vector<Partition> enumerate_partitions(unsigned n, FamilySelector family) {
  std::vector<Partition> out;
  PartitionEnumerator stream(n, family);
  while (auto p = stream.next()) out.push_back(std::move(*p));
  return out;
}

Int partition_count(unsigned n) {
  static std::vector<Int> cache{1};
  static std::mutex mutex;
  std::scoped_lock lock(mutex);
  while (cache.size() <= n) {
    const auto m = static_cast<unsigned>(cache.size());
    Int total = 0;
    for (unsigned j = 1;; ++j) {
      const unsigned g1 = j * (3 * j - 1) / 2;
      if (g1 > m) break;
      const bool plus = j % 2 == 1;
      if (plus) total += cache[m - g1]; else total -= cache[m - g1];
      const unsigned g2 = j * (3 * j + 1) / 2;
      if (g2 <= m) {
        if (plus) total += cache[m - g2]; else total -= cache[m - g2];
      }
    }
    cache.push_back(total);
  }
  return cache[n];
}

}  // namespace espart
