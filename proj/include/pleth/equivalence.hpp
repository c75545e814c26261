#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pleth/partition.hpp"

namespace pleth {

// Signed multiset X/Z over the positive integers: keys of X count +1, keys of Z count -1.
class DiffMultiset {
 public:
  DiffMultiset() = default;

  void add(int key, int multiplicity);
  template <class Map>
  void addAll(const Map& m, int sign, int shift = 0) {
    for (const auto& [k, v] : m) add(k + shift, sign * v);
  }
  DiffMultiset& operator+=(const DiffMultiset& o);
  DiffMultiset& operator-=(const DiffMultiset& o);
  DiffMultiset shifted(int k) const;

  const std::map<int, int>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  bool operator==(const DiffMultiset&) const = default;

 private:
  std::map<int, int> entries_;
};

// "k:m" pairs in ascending key order joined by ";"; empty string for the empty multiset.
std::string serialize(const DiffMultiset& d);

struct EquivalenceRecord {
  Partition lambda;
  int ell = 0;
  Partition mu;
  int m = 0;
  int d = 0;
  int twiceD = 0;  // 2D where D = -b(lambda) + b(mu)
  bool prime = false;
  std::vector<std::string> labels;
  bool operator==(const EquivalenceRecord&) const = default;
};

DiffMultiset contentHookKey(const Partition& lambda, int ell);
DiffMultiset pyramidKey(const Partition& lambda, int ell);

// Some(d) with d = b(lambda) - b(mu) iff the two plethysms are isomorphic.
// With validate set, the pyramid and polynomial routes are recomputed and any
// disagreement raises InternalDisagreement.
std::optional<int> isEquivalent(const Partition& lambda, int ell, const Partition& mu, int m, bool validate = false);
bool isPrime(const Partition& lambda, int ell, const Partition& mu, int m);

// Verified record without labels, or nullopt when not equivalent.
std::optional<EquivalenceRecord> makeRecord(const Partition& lambda, int ell, const Partition& mu, int m);
// Re-checks every invariant of a record (equivalence, d, 2D, prime flag).
bool checkRecord(const EquivalenceRecord& r);

EquivalenceRecord compose(const EquivalenceRecord& r1, const EquivalenceRecord& r2);
EquivalenceRecord columnRemovalRecord(const Partition& lambda);

int liftDivisor(const EquivalenceRecord& r);
bool liftsToSubgroup(const EquivalenceRecord& r, int d);
bool liftsToGL(const EquivalenceRecord& r);

std::optional<int> infiniteFamilyCriterion(const Partition& lambda, const Partition& mu);
// 2 d(lambda); the statistic itself may be a half-integer.
int twiceDStatistic(const Partition& lambda, int ell);

}  // namespace pleth
