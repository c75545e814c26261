#pragma once

// Internal building blocks shared by the search engine, the census and the verifiers.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "pleth/classify.hpp"
#include "pleth/partition.hpp"

namespace pleth::detail {

template <class F>
void forEachIndex(std::size_t n, Execution exec, F&& body) {
  if (exec == Execution::Parallel) {
    const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 32)
    for (std::ptrdiff_t i = 0; i < count; ++i) body(static_cast<std::size_t>(i));
  } else {
    for (std::size_t i = 0; i < n; ++i) body(i);
  }
}

// Content and hook counts of a partition, independent of the degree.
struct Profile {
  int length = 0;
  int first = 0;
  std::vector<int> contentCount;  // index c + length - 1
  std::vector<int> hookCount;     // index h
};

Profile makeProfile(const Partition& p);

// The content/hook key at degree ell flattened to (value, multiplicity) pairs in
// ascending value order. Equal packed keys are exactly equal difference multisets.
using PackedKey = std::vector<std::int32_t>;
void packedKey(const Profile& profile, int ell, PackedKey& out);

struct KeyEntry {
  std::uint32_t index = 0;  // position in the canonical partition list
  std::int32_t ell = 0;
  PackedKey key;
};

// Sorts by key then (index, ell) and returns [begin, end) ranges of equal keys of size >= 2.
std::vector<std::pair<std::size_t, std::size_t>> groupEqualKeys(std::vector<KeyEntry>& entries);

// partitionsUpTo sorted into the canonical graded order.
std::vector<Partition> canonicalPartitions(int maxSize);

}  // namespace pleth::detail
