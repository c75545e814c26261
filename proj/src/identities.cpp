#include "pleth/identities.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "pleth/errors.hpp"
#include "pleth/partition.hpp"
#include "pleth/specialize.hpp"
#include "pleth/tableaux.hpp"

namespace pleth {

namespace {

int choose2(int n) { return n * (n - 1) / 2; }
int choose3(int n) { return n * (n - 1) * (n - 2) / 6; }

void requirePositive(int a, int b, int c, const char* what) {
  if (a < 1 || b < 1 || c < 1) throw DomainError(std::string(what) + ": a, b, c must be positive");
}

void requireDeterminantSize(int a, int limit, const char* what) {
  if (a > limit)
    throw CapExceeded(std::string(what) + ": matrix size above " + std::to_string(limit), static_cast<std::uint64_t>(a));
}

}  // namespace

QPolynomial macmahonProduct(int a, int b, int c) {
  requirePositive(a, b, c, "macmahonProduct");
  if (static_cast<long long>(a) * b * c > 200)
    throw CapExceeded("macmahonProduct requires a*b*c <= 200", static_cast<std::uint64_t>(a) * b * c);
  // (q^x - 1)/(q^y - 1) = [x]_q / [y]_q, so only the exponent multisets matter.
  std::map<int, int> numerator, denominator;
  for (int i = 1; i <= a; ++i)
    for (int j = 1; j <= b; ++j)
      for (int k = 1; k <= c; ++k) {
        ++numerator[i + j + k - 1];
        ++denominator[i + j + k - 2];
      }
  return quantumRatio(std::move(numerator), std::move(denominator));
}

QPolynomial jacobiTrudiRectangle(int a, int b, int c) {
  requirePositive(a, b, c, "jacobiTrudiRectangle");
  requireDeterminantSize(a, 10, "jacobiTrudiRectangle");
  PolyMatrix m(static_cast<std::size_t>(a));
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < a; ++j) m[static_cast<std::size_t>(i)].push_back(scaledQBinomial(b + c, b + j - i));
  return polyMatrixDeterminant(m);
}

bool checkScaledDeterminants(int a, int b, int c) {
  requirePositive(a, b, c, "checkScaledDeterminants");
  requireDeterminantSize(a, 8, "checkScaledDeterminants");
  const QPolynomial lhs = macmahonProduct(a, b, c).shifted(a * choose2(b));
  PolyMatrix first(static_cast<std::size_t>(a)), second(static_cast<std::size_t>(a));
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < a; ++j) {
      first[static_cast<std::size_t>(i)].push_back(scaledQBinomial(b + c + j, b + j - i));
      second[static_cast<std::size_t>(i)].push_back(scaledQBinomial(b + c + i + j, b + j).shifted(-i * j));
    }
  const int bigA = choose2(a) * b - choose3(a + 1);
  const QPolynomial middle = polyMatrixDeterminant(first);
  const QPolynomial right = polyMatrixDeterminant(second).shifted(-bigA);
  return lhs == middle && middle == right;
}

bool checkBinomialDeterminant(int a, int b, int c) {
  requirePositive(a, b, c, "checkBinomialDeterminant");
  requireDeterminantSize(a, 8, "checkBinomialDeterminant");
  PolyMatrix n(static_cast<std::size_t>(a));
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < a; ++j)
      n[static_cast<std::size_t>(i)].push_back(qBinomial(b + c + i + j, b + j).shifted(-i * j));
  int squares = 0;
  for (int i = 1; i < a; ++i) squares += i * i;
  return macmahonProduct(a, b, c) == polyMatrixDeterminant(n).shifted(squares);
}

bool checkBinomialDeterminantAtOne(int a, int b, int c) {
  using boost::multiprecision::cpp_rational;
  requirePositive(a, b, c, "checkBinomialDeterminantAtOne");
  requireDeterminantSize(a, 8, "checkBinomialDeterminantAtOne");
  cpp_rational product = 1;
  for (int i = 1; i <= a; ++i)
    for (int j = 1; j <= b; ++j)
      for (int k = 1; k <= c; ++k) product *= cpp_rational(i + j + k - 1, i + j + k - 2);
  auto binomial = [](int n, int k) {
    BigInt r = 1;
    for (int t = 1; t <= k; ++t) r = r * (n - k + t) / t;
    return r;
  };
  std::vector<std::vector<cpp_rational>> m(static_cast<std::size_t>(a));
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < a; ++j) m[static_cast<std::size_t>(i)].push_back(cpp_rational(binomial(b + c + i + j, b + j)));
  // Gaussian elimination over the rationals.
  cpp_rational det = 1;
  const std::size_t n = m.size();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m[pivot][k] == 0) ++pivot;
    if (pivot == n) return product == 0;
    if (pivot != k) {
      std::swap(m[pivot], m[k]);
      det = -det;
    }
    det *= m[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const cpp_rational factor = m[i][k] / m[k][k];
      for (std::size_t j = k; j < n; ++j) m[i][j] -= factor * m[k][j];
    }
  }
  return det == product;
}

bool checkChuVandermonde(int m, int r, int ell) {
  if (m < 0 || r < 0 || ell < 0) throw DomainError("checkChuVandermonde: arguments must be non-negative");
  if (m > 10 || r > 10) throw CapExceeded("checkChuVandermonde requires m, r <= 10", static_cast<std::uint64_t>(std::max(m, r)));
  const QPolynomial lhs = scaledQBinomial(m + r, ell + r);
  QPolynomial columns, rows;
  for (int k = 0; k <= r; ++k) {
    const QPolynomial common = scaledQBinomial(r, k) * scaledQBinomial(m, ell + r - k);
    columns += common.shifted(m * k);
    rows += common.shifted(r * (ell + r - k));
  }
  return lhs == columns && lhs == rows;
}

bool checkSSYTtoPP(int a, int b, int c) {
  requirePositive(a, b, c, "checkSSYTtoPP");
  const QPolynomial byEnumeration = planePartitionGFByEnumeration(a, b, c);
  return schurSpecHCF(rectangle(a, b), b + c - 1).shifted(-a * choose2(b)) == byEnumeration;
}

}  // namespace pleth
