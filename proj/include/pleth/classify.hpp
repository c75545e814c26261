#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pleth/equivalence.hpp"
#include "pleth/partition.hpp"

namespace pleth {

enum class Execution { Serial, Parallel };

// Worker threads used by Execution::Parallel; n <= 0 keeps the runtime default.
void setThreadCount(int n);
int threadCount();

enum class ShapeFamily {
  All,
  // Two-row non-hooks, two-column non-hooks and proper hooks.
  Table1,
};

struct SearchBounds {
  int maxSize = 8;
  int maxEll = 6;
  int maxM = 6;
  bool primeOnly = false;
  bool equalDegreeOnly = false;
  bool includeSelf = false;
  ShapeFamily family = ShapeFamily::All;
  // Upper bound on the number of (lambda, ell) keys held in memory at once.
  std::uint64_t workLimit = 4'000'000;
};

// All equivalences inside the bounds, verified, labelled and sorted by
// (lambda, ell, mu, m) with (lambda, ell) < (mu, m) in the graded order.
std::vector<EquivalenceRecord> searchEquivalences(const SearchBounds& bounds, Execution exec = Execution::Parallel);
// Quadratic reference: isEquivalent on every pair of (lambda, ell) entries.
std::vector<EquivalenceRecord> bruteForceEquivalences(const SearchBounds& bounds);

std::vector<std::string> labelRecord(const EquivalenceRecord& r);
bool qualifiesForTable1(const Partition& p);
// lambda at degree x is obtained by adding columns of length x + 1 to a rectangle
// (a'^b') with b' <= x and (a', b', x - b' + 1) a permutation of (a, b, y - b + 1),
// where (a^b) sits at degree y.
bool matchesRectangleTheorem(const Partition& lambda, int x, const Partition& rect, int y);
// The catalogue row letter(s) whose relation the record instantiates, in either orientation.
std::vector<char> table1Rows(const Partition& lambda, int ell, const Partition& mu, int m);

std::pair<Partition, Partition> exceptionalFamily(int k, int ell);
bool isExceptional(const Partition& lambda, const Partition& mu, int ell);

struct CensusReport {
  int maxSize = 0;
  int ellLow = 1;
  int ellHigh = 0;
  bool sameSizeOnly = false;
  std::uint64_t total = 0;
  std::map<int, std::uint64_t> histogram;
  std::vector<EquivalenceRecord> records;  // sorted; unordered pairs counted once
};

// Exceptional equal-degree equivalences between partitions of size at most maxSize.
// maxEll = 0 selects 2 * maxSize - 2, beyond which no exceptional pair can exist.
CensusReport exceptionalCensus(int maxSize, int maxEll = 0, bool sameSizeOnly = false,
                               Execution exec = Execution::Parallel);

struct VerifyOptions {
  int maxSize = 12;
  int maxEll = 0;  // 0 selects a theorem specific default
  int maxK = 3;
  int minK = 1;  // smallest staircase for the solitary check
  int minEll = 5;
  Execution exec = Execution::Parallel;
  std::uint64_t workLimit = 4'000'000;
};

struct VerificationReport {
  std::string theorem;
  bool passed = true;
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  std::vector<std::string> counterexamples;  // first few only
  std::string window;
};

const std::vector<std::string>& theoremNames();
VerificationReport verifyTheorem(const std::string& name, const VerifyOptions& options);

}  // namespace pleth
