#include <doctest.h>

#include "oracle.hpp"
#include "pleth/equivalence.hpp"
#include "pleth/errors.hpp"
#include "pleth/specialize.hpp"

using namespace pleth;

namespace {

DiffMultiset keyFrom(std::initializer_list<std::pair<int, int>> entries) {
  DiffMultiset d;
  for (auto [k, m] : entries) d.add(k, m);
  return d;
}

// Equivalence decided from brute-force specializations alone.
std::optional<int> oracleEquivalent(const Partition& l, int ell, const Partition& m, int em) {
  int s = 0;
  if (!oracle::sameUpToShift(oracle::ssytGF(l, ell), oracle::ssytGF(m, em), s)) return std::nullopt;
  return s;
}

}  // namespace

TEST_CASE("content/hook key examples") {
  for (int n = 1; n <= 5; ++n)
    for (int ell = 1; ell <= 5; ++ell) {
      DiffMultiset expected;
      for (int v = ell + 1; v <= n + ell; ++v) expected.add(v, 1);
      for (int v = 1; v <= n; ++v) expected.add(v, -1);
      CHECK(contentHookKey(Partition({n}), ell) == expected);
    }
  CHECK(contentHookKey(Partition({1}), 1) == keyFrom({{2, 1}, {1, -1}}));
  DiffMultiset direct;
  for (const auto& [c, k] : oracle::contentsByBoxes({2, 1})) direct.add(c + 3, k);
  for (const auto& [h, k] : oracle::hooksByBoxes({2, 1})) direct.add(h, -k);
  CHECK(contentHookKey(Partition({2, 1}), 2) == direct);
  CHECK(serialize(direct) == "1:-2;2:1;4:1");
  CHECK_THROWS_AS(contentHookKey(rectangle(1, 4), 2), DomainError);
}

TEST_CASE("pyramid key examples") {
  CHECK(pyramidKey(Partition({8, 7, 2, 2}), 5) == pyramidKey(Partition({8, 6, 3}), 5));
  CHECK(pyramidKey(Partition{}, 4).empty());
  for (int n = 1; n <= 6; ++n) CHECK(pyramidKey(Partition({n}), 1) == keyFrom({{n + 1, 1}, {1, -1}}));
}

TEST_CASE("isEquivalent examples") {
  CHECK(isEquivalent(Partition({3}), 5, Partition({5}), 3, true) == 0);
  CHECK(isEquivalent(Partition({8, 7, 2, 2}), 5, Partition({8, 6, 3}), 5, true) == 5);
  for (int ell = 1; ell <= 5; ++ell)
    for (int m = 1; m <= 5; ++m)
      if (ell != m) CHECK_FALSE(isEquivalent(Partition({3, 1}), ell, Partition({3, 1}), m).has_value());
  CHECK_THROWS_AS(isEquivalent(rectangle(1, 4), 1, Partition({1}), 1), DomainError);
}

TEST_CASE("the three decision routes agree with brute-force specializations") {
  struct Point {
    Partition p;
    int ell;
    oracle::Poly gf;
  };
  std::vector<Point> points;
  for (const auto& rows : oracle::allPartitions(7))
    for (int ell = std::max(1, static_cast<int>(rows.size()) - 1); ell <= 5; ++ell)
      points.push_back({Partition(rows), ell, oracle::ssytGF(Partition(rows), ell)});
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i; j < points.size(); ++j) {
      const auto& a = points[i];
      const auto& b = points[j];
      int s = 0;
      const std::optional<int> expected =
          oracle::sameUpToShift(a.gf, b.gf, s) ? std::optional<int>(s) : std::nullopt;
      CHECK(isEquivalent(a.p, a.ell, b.p, b.ell, true) == expected);
    }
}

TEST_CASE("structural laws of equivalences") {
  std::vector<std::pair<Partition, int>> points;
  for (const auto& rows : oracle::allPartitions(10))
    for (int ell = std::max(1, static_cast<int>(rows.size()) - 1); ell <= 6; ++ell) points.emplace_back(Partition(rows), ell);
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i; j < points.size(); ++j) {
      const auto& [l, ell] = points[i];
      const auto& [m, em] = points[j];
      const auto r = makeRecord(l, ell, m, em);
      if (!r) continue;
      CHECK(checkRecord(*r));
      CHECK(r->d == minWeight(l) - minWeight(m));
      CHECK(r->twiceD == -ell * l.size() + em * m.size());
      if (l == m) CHECK(ell == em);
      if (r->prime) CHECK(l.first() + ell == m.first() + em);
      const Partition lr = l.length() == ell + 1 ? removeFullColumns(l) : l;
      const Partition mr = m.length() == em + 1 ? removeFullColumns(m) : m;
      CHECK(removableBoxCount(lr) == removableBoxCount(mr));
    }
}

TEST_CASE("complements are equivalent") {
  for (const auto& rows : oracle::allPartitions(12))
    for (int ell = std::max(1, static_cast<int>(rows.size()) - 1); ell <= 6; ++ell) {
      const Partition p(rows);
      const Partition c = complementInBox(p, ell + 1);
      if (c.empty()) continue;
      CHECK(isEquivalent(p, ell, c, ell).has_value());
    }
}

TEST_CASE("primality") {
  CHECK_FALSE(isPrime(Partition({3, 3}), 1, Partition({2}), 1));
  CHECK(isPrime(rectangle(3, 2), 2, rectangle(2, 3), 3));
  CHECK_FALSE(isPrime(Partition({5, 5, 2}), 2, Partition({3, 3}), 2));
}

TEST_CASE("composition and column removal") {
  const auto r1 = makeRecord(Partition({5, 5, 2}), 2, Partition({3, 3}), 2);
  const auto r2 = makeRecord(Partition({3, 3}), 2, Partition({2, 2, 2}), 3);
  REQUIRE(r1);
  REQUIRE(r2);
  const EquivalenceRecord c = compose(*r1, *r2);
  CHECK(c.lambda == Partition({5, 5, 2}));
  CHECK(c.mu == Partition({2, 2, 2}));
  CHECK(c.ell == 2);
  CHECK(c.m == 3);
  CHECK(c.d == r1->d + r2->d);
  const auto h1 = makeRecord(Partition({3}), 5, Partition({5}), 3);
  const auto h2 = makeRecord(Partition({5}), 3, Partition({3}), 5);
  const EquivalenceRecord self = compose(*h1, *h2);
  CHECK(self.lambda == self.mu);
  CHECK(self.d == 0);
  CHECK_THROWS_AS(compose(*r1, *h1), DomainError);

  const EquivalenceRecord cr = columnRemovalRecord(Partition({5, 5, 2}));
  CHECK(cr.mu == Partition({3, 3}));
  CHECK(cr.ell == 2);
  CHECK(columnRemovalRecord(Partition({4, 2, 1})).mu == Partition({3, 1}));
  CHECK(oracleEquivalent(Partition({4, 2, 1}), 2, Partition({3, 1}), 2).has_value());
  CHECK_THROWS_AS(columnRemovalRecord(rectangle(3, 2)), DomainError);
}

TEST_CASE("lifting divisors") {
  for (int n = 1; n <= 6; ++n)
    for (int ell = 1; ell <= 6; ++ell) {
      const auto r = makeRecord(Partition({n}), ell, Partition({ell}), n);
      REQUIRE(r);
      CHECK(liftsToGL(*r));
    }
  const auto e = makeRecord(Partition({8, 7, 2, 2}), 5, Partition({8, 6, 3}), 5);
  REQUIRE(e);
  CHECK(liftDivisor(*e) == (-5 * 19 + 5 * 17) / 2);
  CHECK(liftsToSubgroup(*e, 5));
  CHECK_FALSE(liftsToSubgroup(*e, 2));
  CHECK_FALSE(liftsToGL(*e));
}

TEST_CASE("infinite family criterion") {
  CHECK(infiniteFamilyCriterion(Partition({4, 2, 1}), Partition({4, 2, 1})) == 0);
  CHECK(infiniteFamilyCriterion(rectangle(3, 2), rectangle(2, 3)) == -1);
  // (3,1) and its conjugate (2,1,1) share hooks and their contents differ by a shift.
  CHECK(infiniteFamilyCriterion(Partition({3, 1}), Partition({2, 1, 1})) == -1);
  CHECK_FALSE(infiniteFamilyCriterion(Partition({4, 2}), Partition({2, 2, 1, 1})).has_value());
  // Cross-check: conjugate pairs failing the criterion have no equivalences for degrees up to 12.
  for (int ell = 1; ell <= 12; ++ell)
    for (int m = 3; m <= 12; ++m)
      CHECK_FALSE(isEquivalent(Partition({4, 2}), ell, Partition({2, 2, 1, 1}), m).has_value());
  // Both routes on every small pair.
  for (const auto& a : oracle::allPartitions(9))
    for (const auto& b : oracle::allPartitions(9)) {
      if (a.size() == 0 || b.size() == 0) continue;
      CHECK_NOTHROW(infiniteFamilyCriterion(Partition(a), Partition(b)));
    }
}

TEST_CASE("twice the d statistic") {
  for (int ell = 1; ell <= 5; ++ell) CHECK(twiceDStatistic(Partition{}, ell) == 0);
  CHECK(twiceDStatistic(Partition({2, 1}), 2) == 2 * 2);
  CHECK(twiceDStatistic(Partition({8, 7, 2, 2}), 5) == 5 * 19 - 2 * 17);
  for (const auto& rows : oracle::allPartitions(10))
    for (int ell = static_cast<int>(rows.size()); ell <= 6; ++ell) {
      const Partition p(rows);
      CHECK(twiceDStatistic(p, ell) == ell * p.size() - 2 * minWeight(p));
    }
}
