#include "pleth/classify.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <unordered_map>

#include "kernels.hpp"
#include "pleth/errors.hpp"
#include "pleth/irreducible.hpp"
#include "pleth/specialize.hpp"

namespace pleth {

using detail::forEachIndex;
using detail::KeyEntry;
using detail::PackedKey;
using detail::Profile;

namespace {

bool recordLess(const EquivalenceRecord& x, const EquivalenceRecord& y) {
  if (x.lambda != y.lambda) return x.lambda < y.lambda;
  if (x.ell != y.ell) return x.ell < y.ell;
  if (x.mu != y.mu) return x.mu < y.mu;
  return x.m < y.m;
}

// The partition with the given parts, or the empty partition when they do not form one.
Partition makeOrEmpty(const std::vector<int>& parts) {
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (parts[i] < 0 || (i > 0 && parts[i] > parts[i - 1])) return {};
  return Partition(parts);
}

Partition hookShape(int arm, int leg) {
  if (arm < 0 || leg < 0) return {};
  std::vector<int> parts{arm + 1};
  parts.insert(parts.end(), static_cast<std::size_t>(leg), 1);
  return Partition(parts);
}

// (2^a, 1^b)
Partition twoColumn(int a, int b) {
  if (a < 0 || b < 0) return {};
  std::vector<int> parts(static_cast<std::size_t>(a), 2);
  parts.insert(parts.end(), static_cast<std::size_t>(b), 1);
  return Partition(parts);
}

bool isTwoRow(const Partition& p) { return p.length() == 2; }
bool isEqualTwoRow(const Partition& p) { return p.length() == 2 && p.part(1) == p.part(2); }

// Parses p as (2^a, 1^b); nullopt when p has a part above 2.
std::optional<std::pair<int, int>> asTwoColumn(const Partition& p) {
  if (p.first() > 2) return std::nullopt;
  int a = 0, b = 0;
  for (int x : p.parts()) (x == 2 ? a : b) += 1;
  return std::make_pair(a, b);
}

bool isAllTwos(const Partition& p) {
  auto tc = asTwoColumn(p);
  return tc && tc->second == 0 && tc->first > 0;
}

bool complementPair(const Partition& lambda, const Partition& mu, int ell) {
  if (lambda.empty() || mu.empty()) return false;
  return (lambda.length() <= ell + 1 && complementInBox(lambda, ell + 1) == mu) ||
         (mu.length() <= ell + 1 && complementInBox(mu, ell + 1) == lambda);
}

// Each matcher tests one oriented instance: L at degree x and M at degree y.
using RowMatcher = bool (*)(const Partition& L, int x, const Partition& M, int y);

bool rowA(const Partition& L, int x, const Partition& M, int y) { return L == M && isProperHook(L) && x == y; }

bool rowB(const Partition& L, int x, const Partition& M, int y) {
  if (!isProperHook(L)) return false;
  const int a = L.first() - 1, b = L.length() - 1;
  return M == hookShape(b, a) && y == x + a - b;
}

bool rowC(const Partition& L, int x, const Partition& M, int y) { return L == M && isTwoRowNonHook(L) && x == y; }

bool rowD(const Partition& L, int x, const Partition& M, int y) {
  return isEqualTwoRow(L) && isEqualTwoRow(M) && x == M.first() + 1 && y == L.first() + 1;
}

bool rowE(const Partition& L, int x, const Partition& M, int y) {
  if (!isTwoRow(L) || x != 2 || y != 2) return false;
  return M == makeOrEmpty({L.part(1), L.part(1) - L.part(2)});
}

bool rowF(const Partition& L, int x, const Partition& M, int y) {
  return !L.empty() && L == makeOrEmpty({2 * x, x + 2}) && M == makeOrEmpty({2 * x - 2, x - 2}) && y == x + 2;
}

bool rowG(const Partition& L, int x, const Partition& M, int y) { return L == M && isTwoColumnNonHook(L) && x == y; }

bool rowH(const Partition& L, int x, const Partition& M, int y) {
  if (!isAllTwos(L) || !isAllTwos(M)) return false;
  const int a = L.length(), c = M.length();
  return (x == a - 1 && y == c - 1) || (x == a + c - 1 && y == x);
}

bool rowI(const Partition& L, int x, const Partition& M, int y) {
  auto l = asTwoColumn(L), m = asTwoColumn(M);
  if (!l || !m || l->second != m->second) return false;
  return x == y && x == l->first + l->second + m->first - 1;
}

bool rowJ(const Partition& L, int x, const Partition& M, int y) {
  if (!isTwoRow(L)) return false;
  const int a = L.part(1), b = L.part(2);
  if (x != a - b + 1) return false;
  return (M == hookShape(a - b, b) && y == a) || (M == hookShape(b, a - b) && y == 2 * (a - b));
}

bool rowK(const Partition& L, int x, const Partition& M, int y) {
  if (L.empty() || L != makeOrEmpty({3 * x - 3, 2 * x - 1})) return false;
  return (M == hookShape(x, x - 2) && y == 3 * x - 4) || (M == hookShape(x - 2, x) && y == 3 * x - 2);
}

bool rowL(const Partition& L, int x, const Partition& M, int y) {
  auto l = asTwoColumn(L);
  if (!l) return false;
  return M == twoColumn(1, l->second) && x == y && x == l->first + l->second;
}

bool rowM(const Partition& L, int x, const Partition& M, int y) {
  auto l = asTwoColumn(L);
  if (!l) return false;
  const int a = l->first, c = l->second;
  return M == Partition({c + 1, 1}) && x == a + c && y == a + 1;
}

bool rowN(const Partition& L, int x, const Partition& M, int y) {
  if (!isEqualTwoRow(L)) return false;
  const int a = L.first();
  return M == twoColumn(a, 0) && y == x + a - 2;
}

bool rowO(const Partition& L, int x, const Partition& M, int y) {
  if (!isEqualTwoRow(L) || !isAllTwos(M)) return false;
  const int a = L.first(), b = M.length();
  return x == b + 1 && y == a + b - 1;
}

bool rowP(const Partition& L, int x, const Partition& M, int y) {
  return L == Partition({6, 5}) && M == twoColumn(4, 3) && x == 3 && y == 7;
}

constexpr std::pair<char, RowMatcher> kRows[] = {
    {'a', rowA}, {'b', rowB}, {'c', rowC}, {'d', rowD}, {'e', rowE}, {'f', rowF}, {'g', rowG}, {'h', rowH},
    {'i', rowI}, {'j', rowJ}, {'k', rowK}, {'l', rowL}, {'m', rowM}, {'n', rowN}, {'o', rowO}, {'p', rowP},
};

std::vector<Partition> familyPool(int maxSize, ShapeFamily family) {
  std::vector<Partition> all = detail::canonicalPartitions(maxSize);
  if (family == ShapeFamily::All) return all;
  std::vector<Partition> out;
  for (auto& p : all)
    if (qualifiesForTable1(p)) out.push_back(std::move(p));
  return out;
}

std::vector<Profile> profilesOf(const std::vector<Partition>& pool, Execution exec) {
  std::vector<Profile> out(pool.size());
  forEachIndex(pool.size(), exec, [&](std::size_t i) { out[i] = detail::makeProfile(pool[i]); });
  return out;
}

int lowestDegree(const Partition& p, bool primeOnly) { return std::max(1, primeOnly ? p.length() : p.length() - 1); }

// Builds the entries for every partition at every degree in [lo(p), hi], one slot per entry.
std::vector<KeyEntry> buildEntries(const std::vector<Partition>& pool, const std::vector<Profile>& profiles, int ellLo,
                                   int ellHi, bool primeOnly, std::uint64_t workLimit, Execution exec) {
  std::vector<std::size_t> offset(pool.size() + 1, 0);
  for (std::size_t i = 0; i < pool.size(); ++i) {
    const int lo = std::max(ellLo, lowestDegree(pool[i], primeOnly));
    offset[i + 1] = offset[i] + static_cast<std::size_t>(std::max(0, ellHi - lo + 1));
  }
  if (offset.back() > workLimit)
    throw CapExceeded("search needs " + std::to_string(offset.back()) + " keys, above the work limit " +
                          std::to_string(workLimit),
                      offset.back());
  std::vector<KeyEntry> entries(offset.back());
  forEachIndex(pool.size(), exec, [&](std::size_t i) {
    const int lo = std::max(ellLo, lowestDegree(pool[i], primeOnly));
    std::size_t slot = offset[i];
    for (int ell = lo; ell <= ellHi; ++ell, ++slot) {
      KeyEntry& e = entries[slot];
      e.index = static_cast<std::uint32_t>(i);
      e.ell = ell;
      detail::packedKey(profiles[i], ell, e.key);
    }
  });
  return entries;
}

EquivalenceRecord verifiedRecord(const Partition& lambda, int ell, const Partition& mu, int m) {
  auto r = makeRecord(lambda, ell, mu, m);
  if (!r)
    throw InternalDisagreement("grouped pair failed to verify: " + toString(lambda) + " at " + std::to_string(ell) +
                               " and " + toString(mu) + " at " + std::to_string(m));
  r->labels = labelRecord(*r);
  return *r;
}

bool inWindow(int ell, int m, const SearchBounds& b) {
  return (ell <= b.maxEll && m <= b.maxM) || (m <= b.maxEll && ell <= b.maxM);
}

std::vector<EquivalenceRecord> recordsFromGroups(const std::vector<Partition>& pool, std::vector<KeyEntry>& entries,
                                                 const SearchBounds& bounds, Execution exec) {
  const auto groups = detail::groupEqualKeys(entries);
  std::vector<std::vector<EquivalenceRecord>> perGroup(groups.size());
  forEachIndex(groups.size(), exec, [&](std::size_t g) {
    const auto [begin, end] = groups[g];
    for (std::size_t i = begin; i < end; ++i)
      for (std::size_t j = i + 1; j < end; ++j) {
        const KeyEntry& x = entries[i];
        const KeyEntry& y = entries[j];
        if (bounds.equalDegreeOnly && x.ell != y.ell) continue;
        if (!inWindow(x.ell, y.ell, bounds)) continue;
        perGroup[g].push_back(verifiedRecord(pool[x.index], x.ell, pool[y.index], y.ell));
      }
  });
  std::vector<EquivalenceRecord> out;
  for (auto& v : perGroup) std::move(v.begin(), v.end(), std::back_inserter(out));
  return out;
}

void requireBounds(const SearchBounds& b) {
  if (b.maxSize < 1 || b.maxEll < 1 || b.maxM < 1)
    throw DomainError("search bounds must have maxSize, maxEll and maxM at least 1");
}

void addSelfRecords(const std::vector<Partition>& pool, const SearchBounds& b, std::vector<EquivalenceRecord>& out) {
  const int hi = std::min(b.maxEll, b.maxM);
  for (const auto& p : pool)
    for (int ell = lowestDegree(p, b.primeOnly); ell <= hi; ++ell) out.push_back(verifiedRecord(p, ell, p, ell));
}

}  // namespace

bool qualifiesForTable1(const Partition& p) {
  return isTwoRowNonHook(p) || isTwoColumnNonHook(p) || isProperHook(p);
}

std::vector<char> table1Rows(const Partition& lambda, int ell, const Partition& mu, int m) {
  std::vector<char> out;
  for (const auto& [letter, match] : kRows)
    if (match(lambda, ell, mu, m) || match(mu, m, lambda, ell)) out.push_back(letter);
  return out;
}

bool matchesRectangleTheorem(const Partition& lambda, int x, const Partition& rect, int y) {
  if (rect.empty() || !isRectangle(rect)) return false;
  const int a = rect.first(), b = rect.length();
  if (y < b || x < lambda.length() - 1) return false;
  const int c = y - b + 1;
  const Partition base = lambda.length() == x + 1 ? removeFullColumns(lambda) : lambda;
  if (base.empty() || !isRectangle(base)) return false;
  const int a2 = base.first(), b2 = base.length();
  if (b2 > x) return false;
  std::array<int, 3> want{a, b, c}, got{a2, b2, x - b2 + 1};
  std::sort(want.begin(), want.end());
  std::sort(got.begin(), got.end());
  return want == got;
}

std::vector<std::string> labelRecord(const EquivalenceRecord& r) {
  std::vector<std::string> labels;
  const bool identity = r.lambda == r.mu && r.ell == r.m;
  if (identity) labels.emplace_back("identity");

  if (r.lambda != r.mu && !r.lambda.empty() && r.mu == conjugate(r.lambda) && infiniteFamilyCriterion(r.lambda, r.mu)) {
    const int k = r.ell - (r.lambda.length() - 1);
    if (k >= 0 && k == r.m - (r.mu.length() - 1)) labels.emplace_back("conjugate-family");
  }

  const bool complement = r.ell == r.m && r.lambda != r.mu && complementPair(r.lambda, r.mu, r.ell);
  if (complement) labels.emplace_back("complement");

  if (!identity && (matchesRectangleTheorem(r.lambda, r.ell, r.mu, r.m) ||
                    matchesRectangleTheorem(r.mu, r.m, r.lambda, r.ell)))
    labels.emplace_back("rectangle");

  if (!identity && qualifiesForTable1(r.lambda) && qualifiesForTable1(r.mu))
    for (char row : table1Rows(r.lambda, r.ell, r.mu, r.m)) labels.push_back(std::string("table1-(") + row + ")");

  if (!r.prime) {
    const Partition left = r.ell == r.lambda.length() - 1 ? removeFullColumns(r.lambda) : r.lambda;
    const Partition right = r.m == r.mu.length() - 1 ? removeFullColumns(r.mu) : r.mu;
    const bool bothTrivial = left.empty() && right.empty();
    if (bothTrivial || (!left.empty() && !right.empty() && isEquivalent(left, r.ell, right, r.m)))
      labels.emplace_back("column-removal-composite");
  }

  if (r.prime && r.ell == r.m && r.lambda != r.mu && !complement) labels.emplace_back("exceptional");
  if (labels.empty()) labels.emplace_back("unclassified");
  return labels;
}

std::vector<EquivalenceRecord> searchEquivalences(const SearchBounds& bounds, Execution exec) {
  requireBounds(bounds);
  const std::vector<Partition> pool = familyPool(bounds.maxSize, bounds.family);
  const std::vector<Profile> profiles = profilesOf(pool, exec);
  std::vector<EquivalenceRecord> out;
  if (bounds.equalDegreeOnly) {
    const int hi = std::min(bounds.maxEll, bounds.maxM);
    for (int ell = 1; ell <= hi; ++ell) {
      auto entries = buildEntries(pool, profiles, ell, ell, bounds.primeOnly, bounds.workLimit, exec);
      auto records = recordsFromGroups(pool, entries, bounds, exec);
      std::move(records.begin(), records.end(), std::back_inserter(out));
    }
  } else {
    const int hi = std::max(bounds.maxEll, bounds.maxM);
    auto entries = buildEntries(pool, profiles, 1, hi, bounds.primeOnly, bounds.workLimit, exec);
    out = recordsFromGroups(pool, entries, bounds, exec);
  }
  if (bounds.includeSelf) addSelfRecords(pool, bounds, out);
  std::sort(out.begin(), out.end(), recordLess);
  return out;
}

std::vector<EquivalenceRecord> bruteForceEquivalences(const SearchBounds& bounds) {
  requireBounds(bounds);
  const std::vector<Partition> pool = familyPool(bounds.maxSize, bounds.family);
  const int hi = std::max(bounds.maxEll, bounds.maxM);
  std::vector<std::pair<std::size_t, int>> points;
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (int ell = lowestDegree(pool[i], bounds.primeOnly); ell <= hi; ++ell) points.emplace_back(i, ell);
  std::vector<EquivalenceRecord> out;
  for (std::size_t s = 0; s < points.size(); ++s)
    for (std::size_t t = s + 1; t < points.size(); ++t) {
      const auto [i, ell] = points[s];
      const auto [j, m] = points[t];
      if (bounds.equalDegreeOnly && ell != m) continue;
      if (!inWindow(ell, m, bounds)) continue;
      if (auto r = makeRecord(pool[i], ell, pool[j], m)) {
        r->labels = labelRecord(*r);
        out.push_back(std::move(*r));
      }
    }
  if (bounds.includeSelf) addSelfRecords(pool, bounds, out);
  std::sort(out.begin(), out.end(), recordLess);
  return out;
}

std::pair<Partition, Partition> exceptionalFamily(int k, int ell) {
  if (k < 0) throw DomainError("exceptionalFamily: k must be non-negative");
  if (ell < 5) throw DomainError("exceptionalFamily: ell must be at least 5");
  switch (ell) {
    case 5:
      return {Partition({8 + 5 * k, 7 + 4 * k, 2 + 2 * k, 2 + k}), Partition({8 + 5 * k, 6 + 4 * k, 3 + 2 * k, k})};
    case 6:
      return {Partition({6 + k, 4 + k, 3 + k, 3 + k, 3}), Partition({6 + k, 3 + k, 3 + k, 3, 1})};
    case 7:
      return {Partition({6 + k, 4 + k, 4 + k, 3 + k, 3 + k, 3}), Partition({6 + k, 3 + k, 3 + k, 3, 1, 1})};
    default:
      break;
  }
  std::vector<int> lambda{5 + k, 4 + k, 3 + k, 3 + k, 3 + k, 3 + k, 3};
  lambda.insert(lambda.end(), static_cast<std::size_t>(ell - 8), 1);
  std::vector<int> mu{5 + k};
  mu.insert(mu.end(), static_cast<std::size_t>(ell - 8), 3 + k);
  mu.insert(mu.end(), {2 + k, 2 + k, 2, 1});
  return {Partition(lambda), Partition(mu)};
}

bool isExceptional(const Partition& lambda, const Partition& mu, int ell) {
  if (ell < 1 || lambda.empty() || mu.empty()) return false;
  if (lambda.length() > ell || mu.length() > ell) return false;
  if (lambda == mu || complementPair(lambda, mu, ell)) return false;
  return isEquivalent(lambda, ell, mu, ell).has_value();
}

CensusReport exceptionalCensus(int maxSize, int maxEll, bool sameSizeOnly, Execution exec) {
  if (maxSize < 1) throw DomainError("exceptionalCensus: maxSize must be positive");
  CensusReport report;
  report.maxSize = maxSize;
  report.ellLow = 1;
  report.ellHigh = maxEll > 0 ? maxEll : std::max(1, 2 * maxSize - 2);
  report.sameSizeOnly = sameSizeOnly;
  const std::vector<Partition> all = detail::canonicalPartitions(maxSize);
  const std::vector<Profile> allProfiles = profilesOf(all, exec);
  for (int ell = report.ellLow; ell <= report.ellHigh; ++ell) {
    std::vector<std::uint32_t> members;
    for (std::size_t i = 0; i < all.size(); ++i)
      if (all[i].length() <= ell) members.push_back(static_cast<std::uint32_t>(i));
    std::vector<KeyEntry> entries(members.size());
    forEachIndex(members.size(), exec, [&](std::size_t s) {
      entries[s].index = members[s];
      entries[s].ell = ell;
      detail::packedKey(allProfiles[members[s]], ell, entries[s].key);
    });
    const auto groups = detail::groupEqualKeys(entries);
    std::vector<std::vector<EquivalenceRecord>> perGroup(groups.size());
    forEachIndex(groups.size(), exec, [&](std::size_t g) {
      const auto [begin, end] = groups[g];
      for (std::size_t i = begin; i < end; ++i)
        for (std::size_t j = i + 1; j < end; ++j) {
          const Partition& lambda = all[entries[i].index];
          const Partition& mu = all[entries[j].index];
          if (sameSizeOnly && lambda.size() != mu.size()) continue;
          if (complementPair(lambda, mu, ell)) continue;
          perGroup[g].push_back(verifiedRecord(lambda, ell, mu, ell));
        }
    });
    for (auto& v : perGroup)
      for (auto& r : v) {
        ++report.histogram[ell];
        ++report.total;
        report.records.push_back(std::move(r));
      }
  }
  std::sort(report.records.begin(), report.records.end(), recordLess);
  return report;
}

// ---------------------------------------------------------------------------
// Verifiers

namespace {

class Collector {
 public:
  explicit Collector(VerificationReport& r) : report_(r) {}
  void check(bool ok, const std::string& what) {
    ++report_.checked;
    if (ok) return;
    report_.passed = false;
    ++report_.failures;
    if (report_.counterexamples.size() < 10) report_.counterexamples.push_back(what);
  }

 private:
  VerificationReport& report_;
};

std::string describe(const Partition& l, int ell, const Partition& m, int em) {
  return "(" + toString(l) + ")@" + std::to_string(ell) + " ~ (" + toString(m) + ")@" + std::to_string(em);
}

std::string describe(const EquivalenceRecord& r) { return describe(r.lambda, r.ell, r.mu, r.m); }

std::string windowText(int maxSize, int maxEll, const std::string& extra = {}) {
  std::string s = "|lambda| <= " + std::to_string(maxSize) + ", degrees 1.." + std::to_string(maxEll);
  if (!extra.empty()) s += ", " + extra;
  return s;
}

int exhaustiveDegree(int maxSize) { return std::max(1, 2 * maxSize - 2); }

PackedKey keyOf(const Partition& p, int ell) {
  PackedKey k;
  detail::packedKey(detail::makeProfile(p), ell, k);
  return k;
}

struct KeyHash {
  std::size_t operator()(const PackedKey& k) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto v : k) h = (h ^ static_cast<std::uint32_t>(v)) * 1099511628211ull;
    return h;
  }
};

void verifyConjugates(const VerifyOptions& o, VerificationReport& rep) {
  const int maxEll = o.maxEll > 0 ? o.maxEll : exhaustiveDegree(o.maxSize);
  rep.window = windowText(o.maxSize, maxEll);
  Collector c(rep);
  for (const auto& lambda : detail::canonicalPartitions(o.maxSize)) {
    const Partition mu = conjugate(lambda);
    if (mu == lambda) continue;
    const bool condition = infiniteFamilyCriterion(lambda, mu).has_value();
    std::unordered_map<PackedKey, std::vector<int>, KeyHash> byKey;
    for (int m = std::max(1, mu.length() - 1); m <= maxEll; ++m) byKey[keyOf(mu, m)].push_back(m);
    std::set<std::pair<int, int>> found, expected;
    for (int ell = std::max(1, lambda.length() - 1); ell <= maxEll; ++ell) {
      auto it = byKey.find(keyOf(lambda, ell));
      if (it != byKey.end())
        for (int m : it->second) found.emplace(ell, m);
    }
    if (condition)
      for (int k = 0;; ++k) {
        const int ell = lambda.length() - 1 + k, m = mu.length() - 1 + k;
        if (ell > maxEll || m > maxEll) break;
        if (ell >= 1 && m >= 1) expected.emplace(ell, m);
      }
    std::string msg = toString(lambda) + (condition ? " satisfies" : " fails") + " the conjugate condition; found";
    for (auto [ell, m] : found) msg += " (" + std::to_string(ell) + "," + std::to_string(m) + ")";
    c.check(found == expected, msg);
  }
}

SearchBounds windowBounds(const VerifyOptions& o, int maxEll) {
  SearchBounds b;
  b.maxSize = o.maxSize;
  b.maxEll = maxEll;
  b.maxM = maxEll;
  b.workLimit = o.workLimit;
  return b;
}

void verifyMultiplePairs(const VerifyOptions& o, VerificationReport& rep) {
  const int maxEll = o.maxEll > 0 ? o.maxEll : exhaustiveDegree(o.maxSize);
  rep.window = windowText(o.maxSize, maxEll);
  Collector c(rep);
  struct Counts {
    int pairs = 0, prime = 0, equalDegree = 0;
  };
  std::map<std::pair<Partition, Partition>, Counts> counts;
  for (const auto& r : searchEquivalences(windowBounds(o, maxEll), o.exec)) {
    auto key = r.lambda < r.mu ? std::make_pair(r.lambda, r.mu) : std::make_pair(r.mu, r.lambda);
    Counts& n = counts[key];
    ++n.pairs;
    n.prime += r.prime ? 1 : 0;
    n.equalDegree += r.ell == r.m ? 1 : 0;
  }
  for (const auto& [pair, n] : counts) {
    const auto& [lambda, mu] = pair;
    const bool conjugateFamily = mu == conjugate(lambda) && infiniteFamilyCriterion(lambda, mu).has_value();
    const bool same = lambda == mu;
    const std::string who = toString(lambda) + " and " + toString(mu);
    if (n.pairs >= 3) c.check(same || conjugateFamily, who + ": " + std::to_string(n.pairs) + " pairs");
    if (n.prime >= 2) c.check(same || conjugateFamily, who + ": " + std::to_string(n.prime) + " prime pairs");
    if (n.equalDegree >= 2) c.check(same, who + ": " + std::to_string(n.equalDegree) + " equal-degree pairs");
  }
}

void verifyComplements(const VerifyOptions& o, VerificationReport& rep) {
  const int maxEll = o.maxEll > 0 ? o.maxEll : exhaustiveDegree(o.maxSize);
  rep.window = windowText(o.maxSize, maxEll, "box heights up to " + std::to_string(maxEll + 1));
  Collector c(rep);
  const auto pool = detail::canonicalPartitions(o.maxSize);
  std::vector<VerificationReport> parts(pool.size());
  forEachIndex(pool.size(), o.exec, [&](std::size_t i) {
    const Partition& lambda = pool[i];
    Collector local(parts[i]);
    for (int r = lambda.length(); r <= maxEll + 1; ++r) {
      const Partition comp = complementInBox(lambda, r);
      if (comp.empty()) continue;
      const int lo = std::max({1, lambda.length() - 1, comp.length() - 1});
      for (int ell = lo; ell <= maxEll; ++ell) {
        const bool eq = isEquivalent(lambda, ell, comp, ell).has_value();
        const bool predicted = r == ell + 1 || lambda == comp;
        local.check(eq == predicted, toString(lambda) + " against its complement in height " + std::to_string(r) +
                                         " at degree " + std::to_string(ell) + (eq ? ": equivalent" : ": not equivalent"));
      }
    }
  });
  for (const auto& p : parts) {
    rep.checked += p.checked;
    rep.failures += p.failures;
    rep.passed = rep.passed && p.passed;
    for (const auto& s : p.counterexamples)
      if (rep.counterexamples.size() < 10) rep.counterexamples.push_back(s);
  }
}

void verifyRectangles(const VerifyOptions& o, VerificationReport& rep) {
  const int maxEll = o.maxEll > 0 ? o.maxEll : exhaustiveDegree(o.maxSize);
  rep.window = windowText(o.maxSize, maxEll, "a, b, c <= " + std::to_string(o.maxK));
  Collector c(rep);
  for (int a = 1; a <= o.maxK; ++a)
    for (int b = 1; b <= o.maxK; ++b)
      for (int cc = 1; cc <= o.maxK; ++cc) {
        const Partition R = rectangle(a, b);
        const int deg = b + cc - 1;
        c.check(isEquivalent(R, deg, rectangle(cc, b), a + b - 1).has_value(),
                describe(R, deg, rectangle(cc, b), a + b - 1));
        c.check(isEquivalent(R, deg, rectangle(b, cc), a + cc - 1).has_value(),
                describe(R, deg, rectangle(b, cc), a + cc - 1));
        c.check(isEquivalent(R, deg, rectangle(b, a), a + cc - 1).has_value(),
                describe(R, deg, rectangle(b, a), a + cc - 1));
      }
  for (const auto& r : searchEquivalences(windowBounds(o, maxEll), o.exec)) {
    const bool lambdaRect = isRectangle(r.lambda) && r.ell >= r.lambda.length();
    const bool muRect = isRectangle(r.mu) && r.m >= r.mu.length();
    if (!lambdaRect && !muRect) continue;
    const bool ok = (muRect && matchesRectangleTheorem(r.lambda, r.ell, r.mu, r.m)) ||
                    (lambdaRect && matchesRectangleTheorem(r.mu, r.m, r.lambda, r.ell));
    c.check(ok, describe(r) + " is not described by column padding and permutation");
  }
}

bool oneRowRule(const Partition& lambda, int ell, int a, int cdeg) {
  const Partition base = lambda.length() == ell + 1 ? removeFullColumns(lambda) : lambda;
  const std::pair<Partition, int> options[] = {
      {Partition({a}), cdeg},          {rectangle(1, a), a + cdeg - 1}, {Partition({cdeg}), a},
      {rectangle(1, cdeg), a + cdeg - 1}, {rectangle(a, cdeg), cdeg},     {rectangle(cdeg, a), a},
  };
  for (const auto& [p, deg] : options)
    if (base == p && ell == deg) return true;
  return false;
}

void verifyOneRow(const VerifyOptions& o, VerificationReport& rep) {
  const int maxEll = o.maxEll > 0 ? o.maxEll : exhaustiveDegree(o.maxSize);
  rep.window = windowText(o.maxSize, maxEll, "one-row partitions (a) at degree c with a, c <= " + std::to_string(maxEll));
  Collector c(rep);
  std::unordered_map<PackedKey, std::vector<std::pair<int, int>>, KeyHash> rows;
  for (int a = 1; a <= maxEll; ++a)
    for (int cdeg = 1; cdeg <= maxEll; ++cdeg) rows[keyOf(Partition({a}), cdeg)].emplace_back(a, cdeg);
  for (const auto& lambda : detail::canonicalPartitions(o.maxSize))
    for (int ell = std::max(1, lambda.length() - 1); ell <= maxEll; ++ell) {
      auto it = rows.find(keyOf(lambda, ell));
      std::set<std::pair<int, int>> found;
      if (it != rows.end()) found.insert(it->second.begin(), it->second.end());
      for (int a = 1; a <= maxEll; ++a)
        for (int cdeg = 1; cdeg <= maxEll; ++cdeg) {
          const bool eq = found.count({a, cdeg}) > 0;
          if (!eq && !oneRowRule(lambda, ell, a, cdeg)) continue;
          c.check(eq == oneRowRule(lambda, ell, a, cdeg),
                  describe(lambda, ell, Partition({a}), cdeg) + (eq ? " equivalent" : " predicted but absent"));
        }
    }
}

void verifyIrreducible(const VerifyOptions& o, VerificationReport& rep) {
  const int maxEll = o.maxEll > 0 ? o.maxEll : 8;
  rep.window = windowText(o.maxSize, maxEll);
  Collector c(rep);
  for (const auto& lambda : detail::canonicalPartitions(o.maxSize))
    for (int ell = std::max(1, lambda.length() - 1); ell <= maxEll; ++ell) {
      const auto predicate = irreduciblePartitionPredicate(lambda, ell);
      const int n = ell * lambda.size() - 2 * minWeight(lambda);
      bool irreducible;
      if (n == 0) {
        const QPolynomial s = schurSpecHCF(lambda, ell);
        irreducible = s.minExponent() == s.maxExponent();
      } else {
        irreducible = isEquivalent(lambda, ell, Partition({n}), 1).has_value();
      }
      const bool structural = isEllIrreducible(SkewShape(lambda), ell);
      c.check(predicate.has_value() == irreducible && structural == irreducible &&
                  (!predicate || *predicate == n),
              toString(lambda) + " at degree " + std::to_string(ell));
    }
}

void verifyTable1(const VerifyOptions& o, VerificationReport& rep) {
  const int maxEll = o.maxEll > 0 ? o.maxEll : exhaustiveDegree(o.maxSize);
  rep.window = windowText(o.maxSize, maxEll, "two-row, two-column and proper hook shapes, prime pairs");
  Collector c(rep);
  SearchBounds b = windowBounds(o, maxEll);
  b.primeOnly = true;
  b.family = ShapeFamily::Table1;
  for (const auto& r : searchEquivalences(b, o.exec)) {
    const bool labelled = std::any_of(r.labels.begin(), r.labels.end(),
                                      [](const std::string& s) { return s.rfind("table1-", 0) == 0; });
    c.check(labelled, describe(r) + " matches no catalogue row");
  }
}

void verifyEqualDegree(const VerifyOptions& o, VerificationReport& rep) {
  const int maxEll = o.maxEll > 0 ? o.maxEll : 4;
  rep.window = windowText(o.maxSize, maxEll, "equal degrees, prime pairs");
  Collector c(rep);
  SearchBounds b = windowBounds(o, maxEll);
  b.primeOnly = true;
  b.equalDegreeOnly = true;
  for (const auto& r : searchEquivalences(b, o.exec))
    c.check(!isExceptional(r.lambda, r.mu, r.ell), describe(r) + " is exceptional");
}

Multiset expectedPyramidAtEight(int k) {
  Multiset out{{1, 4}, {2, 4}, {3, 2}, {4, 3}, {5, 3}, {6, 1}, {7, 1}};
  const Multiset moving{{1, 1}, {2, 1}, {3, 1}, {4, 1},  {5, 1},  {6, 3},  {7, 2},
                        {8, 3}, {9, 1}, {10, 1}, {11, 1}, {12, 1}, {13, 1}};
  for (const auto& [v, n] : moving) out[v + k] += n;
  return out;
}

void verifyExceptional(const VerifyOptions& o, VerificationReport& rep) {
  const int maxEll = o.maxEll > 0 ? o.maxEll : 12;
  const int minEll = std::max(5, o.minEll);
  rep.window = "k <= " + std::to_string(o.maxK) + ", degrees " + std::to_string(minEll) + ".." + std::to_string(maxEll);
  Collector c(rep);
  for (int k = 0; k <= o.maxK; ++k) {
    for (int ell = minEll; ell <= maxEll; ++ell) {
      const auto [lambda, mu] = exceptionalFamily(k, ell);
      c.check(isExceptional(lambda, mu, ell), describe(lambda, ell, mu, ell) + " is not exceptional");
    }
    if (minEll <= 8 && 8 <= maxEll) {
      const auto [lambda, mu] = exceptionalFamily(k, 8);
      const Multiset expected = expectedPyramidAtEight(k);
      c.check(pyramid(lambda, 8).entries == expected, "pyramid multiset of " + toString(lambda) + " at degree 8");
      c.check(pyramid(complementInBox(mu, 9), 8).entries == expected,
              "pyramid multiset of the complement of " + toString(mu) + " at degree 8");
    }
  }
}

void verifySolitary(const VerifyOptions& o, VerificationReport& rep) {
  const int maxEll = o.maxEll > 0 ? o.maxEll : 12;
  rep.window = "staircases " + std::to_string(o.minK) + ".." + std::to_string(o.maxK) + ", |mu| <= " + std::to_string(o.maxSize) +
               ", degrees up to " + std::to_string(maxEll);
  Collector c(rep);
  std::unordered_map<PackedKey, std::vector<std::pair<int, int>>, KeyHash> targets;  // key -> (k, ell)
  for (int k = std::max(1, o.minK); k <= o.maxK; ++k)
    for (int ell = k; ell <= maxEll; ++ell) targets[keyOf(staircase(k), ell)].emplace_back(k, ell);

  const auto pool = detail::canonicalPartitions(o.maxSize);
  const auto profiles = profilesOf(pool, o.exec);
  struct Hit {
    std::size_t index;
    int m, k, ell;
  };
  std::vector<std::vector<Hit>> hits(pool.size());
  forEachIndex(pool.size(), o.exec, [&](std::size_t i) {
    PackedKey key;
    for (int m = pool[i].length(); m <= maxEll; ++m) {
      detail::packedKey(profiles[i], m, key);
      auto it = targets.find(key);
      if (it == targets.end()) continue;
      for (auto [k, ell] : it->second) hits[i].push_back({i, m, k, ell});
    }
  });
  std::set<std::tuple<int, int, Partition>> seen;
  for (const auto& list : hits)
    for (const auto& h : list) {
      const Partition delta = staircase(h.k);
      const Partition& mu = pool[h.index];
      if (mu == delta && h.m == h.ell) continue;
      const bool ok = h.m == h.ell && h.ell > h.k && mu == complementInBox(delta, h.ell + 1);
      c.check(ok, describe(delta, h.ell, mu, h.m));
      if (ok) seen.emplace(h.k, h.ell, mu);
    }
  for (int k = std::max(1, o.minK); k <= o.maxK; ++k)
    for (int ell = k + 1; ell <= maxEll; ++ell) {
      const Partition comp = complementInBox(staircase(k), ell + 1);
      if (comp.size() > o.maxSize) continue;
      c.check(seen.count({k, ell, comp}) > 0, "missing complement " + describe(staircase(k), ell, comp, ell));
    }
}

}  // namespace

const std::vector<std::string>& theoremNames() {
  static const std::vector<std::string> names{"conjugates", "multiple-pairs", "complements", "rectangles",
                                              "one-row",    "irreducible",    "table1",      "equal-degree",
                                              "exceptional", "solitary"};
  return names;
}

VerificationReport verifyTheorem(const std::string& name, const VerifyOptions& options) {
  if (options.maxSize < 1) throw DomainError("verifyTheorem: maxSize must be positive");
  if (options.maxK < 0) throw DomainError("verifyTheorem: maxK must be non-negative");
  VerificationReport rep;
  rep.theorem = name;
  if (name == "conjugates") verifyConjugates(options, rep);
  else if (name == "multiple-pairs") verifyMultiplePairs(options, rep);
  else if (name == "complements") verifyComplements(options, rep);
  else if (name == "rectangles") verifyRectangles(options, rep);
  else if (name == "one-row") verifyOneRow(options, rep);
  else if (name == "irreducible") verifyIrreducible(options, rep);
  else if (name == "table1") verifyTable1(options, rep);
  else if (name == "equal-degree") verifyEqualDegree(options, rep);
  else if (name == "exceptional") verifyExceptional(options, rep);
  else if (name == "solitary") verifySolitary(options, rep);
  else throw DomainError("unknown theorem '" + name + "'");
  return rep;
}

}  // namespace pleth
