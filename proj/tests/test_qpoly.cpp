#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "pleth/errors.hpp"
#include "pleth/qpoly.hpp"
#include "pleth/specialize.hpp"

using namespace pleth;

namespace {
QPolynomial P(int lo, std::vector<long long> c) { return QPolynomial::fromInts(lo, c); }
}  // namespace

TEST_CASE("quantum integers") {
  CHECK(quantumInt(1) == QPolynomial::constant(1));
  CHECK(quantumInt(3) == P(0, {1, 1, 1}));
  CHECK(quantumInt(-2).isZero());
  CHECK(quantumInt(0).isZero());
  for (int m = 0; m <= 20; ++m)
    for (int n = 0; n <= 20; ++n) CHECK(quantumInt(m + n) == quantumInt(m) + quantumInt(n).shifted(m));
}

TEST_CASE("q-binomials") {
  CHECK(qBinomial(2, 1) == P(0, {1, 1}));
  CHECK(qBinomial(4, 2) == oracle::toQ(oracle::shift(oracle::subsetSumGF(4, 2), -1)));
  CHECK(qBinomial(3, 5).isZero());
  CHECK(qBinomial(7, 0) == QPolynomial::constant(1));
  for (int m = 0; m <= 20; ++m)
    for (int l = 0; l <= m; ++l) CHECK(qBinomial(m, l) == qBinomial(m, m - l));
  for (int n = 1; n <= 6; ++n)
    for (int l = 1; l <= 6; ++l) CHECK(qBinomial(n + l, l) == schurSpecHCF(Partition({n}), l));
}

TEST_CASE("scaled q-binomials count subsets by sum") {
  CHECK(scaledQBinomial(2, 1) == P(0, {1, 1}));
  CHECK(scaledQBinomial(3, 2) == oracle::toQ(oracle::subsetSumGF(3, 2)));
  CHECK(scaledQBinomial(5, 0) == QPolynomial::constant(1));
  for (int m = 0; m <= 12; ++m)
    for (int l = 0; l <= m; ++l) CHECK(scaledQBinomial(m, l) == oracle::toQ(oracle::subsetSumGF(m, l)));
}

TEST_CASE("ring arithmetic") {
  const QPolynomial a = P(0, {1, 1});
  CHECK(a * a == P(0, {1, 2, 1}));
  CHECK(a.shifted(-1) == P(-1, {1, 1}));
  CHECK(quantumInt(2) * quantumInt(3) == oracle::toQ(oracle::mul({{0, 1}, {1, 1}}, {{0, 1}, {1, 1}, {2, 1}})));
  CHECK((a - a).isZero());
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-5, 5), len(0, 5), lo(-3, 3);
  auto random = [&] {
    std::vector<long long> c(static_cast<std::size_t>(len(rng)));
    for (auto& x : c) x = coef(rng);
    return P(lo(rng), c);
  };
  for (int trial = 0; trial < 200; ++trial) {
    const QPolynomial x = random(), y = random(), z = random();
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x + y == y + x);
    CHECK(x * y == y * x);
  }
}

TEST_CASE("exact division") {
  CHECK(exactDivide(P(0, {-1, 0, 1}), P(0, {-1, 1})) == P(0, {1, 1}));
  CHECK(exactDivide(quantumInt(6), quantumInt(3)) == P(0, {1, 0, 0, 1}));
  CHECK_THROWS_AS(exactDivide(P(0, {1, 1}), P(0, {1, 1, 1})), DivisionNotExact);
  CHECK_THROWS_AS(exactDivide(P(0, {1}), QPolynomial()), DomainError);
  for (int m = 1; m <= 9; ++m) {
    const QPolynomial p = P(-2, {3, 0, -1, 4}) * quantumInt(m);
    CHECK(divQuantumInt(p, m) == P(-2, {3, 0, -1, 4}));
    CHECK(mulQuantumInt(P(-2, {3, 0, -1, 4}), m) == p);
  }
  CHECK_THROWS_AS(divQuantumInt(P(0, {1, 1}), 3), DivisionNotExact);
}

TEST_CASE("quantum ratio cancels before dividing") {
  CHECK(quantumRatio({{4, 1}, {3, 1}}, {{2, 1}, {1, 1}}) == qBinomial(4, 2));
  CHECK(quantumRatio({{5, 2}}, {{5, 2}}) == QPolynomial::constant(1));
}

TEST_CASE("symmetry checks") {
  auto r = symmetryChecks(P(0, {1, 1, 1}));
  CHECK(r.unimodal);
  CHECK(r.centerTimesTwo == 2);
  r = symmetryChecks(P(0, {1, 2, 0, 1}));
  CHECK_FALSE(r.unimodal);
  CHECK_FALSE(r.centerTimesTwo.has_value());
  // The (2,1), ell = 2 specialization from brute-force enumeration.
  r = symmetryChecks(oracle::toQ(oracle::ssytGF(Partition({2, 1}), 2)));
  CHECK(r.unimodal);
  CHECK(r.centerTimesTwo == 6);
  CHECK_THROWS_AS(symmetryChecks(QPolynomial()), DomainError);
}

TEST_CASE("determinants") {
  const QPolynomial q = P(1, {1});
  CHECK(polyMatrixDeterminant({{q}}) == q);
  CHECK(polyMatrixDeterminant({{QPolynomial::constant(1), q}, {q, QPolynomial::constant(1)}}) == P(0, {1, 0, -1}));
  // det(e_{1+j-i}) in two variables is h_2, checked against enumeration.
  PolyMatrix m(2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m[static_cast<std::size_t>(i)].push_back(scaledQBinomial(2, 1 + j - i));
  CHECK(polyMatrixDeterminant(m) == oracle::toQ(oracle::ssytGF(Partition({2}), 1)));
  // Bareiss path against cofactor expansion on a 6x6 integer matrix.
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coef(-3, 3);
  PolyMatrix big(6, std::vector<QPolynomial>(6));
  std::vector<std::vector<long long>> ints(6, std::vector<long long>(6));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      ints[i][j] = coef(rng);
      big[i][j] = QPolynomial::constant(ints[i][j]);
    }
  std::function<long long(std::vector<std::vector<long long>>)> det = [&](std::vector<std::vector<long long>> a) {
    const std::size_t n = a.size();
    if (n == 1) return a[0][0];
    long long s = 0;
    for (std::size_t c = 0; c < n; ++c) {
      std::vector<std::vector<long long>> minor;
      for (std::size_t r = 1; r < n; ++r) {
        std::vector<long long> row;
        for (std::size_t k = 0; k < n; ++k)
          if (k != c) row.push_back(a[r][k]);
        minor.push_back(row);
      }
      s += (c % 2 ? -1 : 1) * a[0][c] * det(minor);
    }
    return s;
  };
  CHECK(polyMatrixDeterminant(big) == QPolynomial::constant(det(ints)));
}

TEST_CASE("rendering") {
  CHECK(toString(P(-2, {3, 0, 3, 1})) == "3q^{-2} + 3 + q");
  CHECK(toString(QPolynomial()) == "0");
  CHECK(toString(P(0, {1, -2})) == "1 - 2q");
}
