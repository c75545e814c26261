#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pleth {

// Arbitrary precision integer; small values are stored inline without allocation.
using BigInt = boost::multiprecision::cpp_int;

// Laurent polynomial in q with exact integer coefficients, stored densely.
// Canonical form: the first and last stored coefficients are non-zero; the zero
// polynomial has no coefficients and minimum exponent 0.
class QPolynomial {
 public:
  QPolynomial() = default;
  QPolynomial(int minExponent, std::vector<BigInt> coeffs);

  static QPolynomial constant(const BigInt& c) { return monomial(c, 0); }
  static QPolynomial monomial(const BigInt& c, int exponent);
  static QPolynomial fromInts(int minExponent, const std::vector<long long>& coeffs);

  bool isZero() const { return coeffs_.empty(); }
  int minExponent() const { return min_; }
  // Meaningless for the zero polynomial.
  int maxExponent() const { return min_ + static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  BigInt coefficient(int exponent) const;
  BigInt evaluateAtOne() const;

  QPolynomial shifted(int e) const;
  QPolynomial operator-() const;

  QPolynomial& operator+=(const QPolynomial& o);
  QPolynomial& operator-=(const QPolynomial& o);
  QPolynomial& operator*=(const QPolynomial& o);

  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);
  bool operator==(const QPolynomial& o) const = default;

 private:
  void normalize();

  int min_ = 0;
  std::vector<BigInt> coeffs_;
};

QPolynomial quantumInt(int m);
QPolynomial qBinomial(int m, int ell);
QPolynomial scaledQBinomial(int m, int ell);
// p * [m]_q and the exact quotient p / [m]_q (DivisionNotExact otherwise); linear time.
QPolynomial mulQuantumInt(const QPolynomial& p, int m);
QPolynomial divQuantumInt(const QPolynomial& p, int m);
// Product of [x]_q over numerator / denominator multisets (value -> multiplicity).
// Common factors are cancelled first; the remaining quotient must be exact.
QPolynomial quantumRatio(std::map<int, int> numerator, std::map<int, int> denominator);

// n = d * quotient, or DivisionNotExact.
QPolynomial exactDivide(const QPolynomial& n, const QPolynomial& d);

struct SymmetryReport {
  bool unimodal = false;
  std::optional<long long> centerTimesTwo;
};
SymmetryReport symmetryChecks(const QPolynomial& p);

using PolyMatrix = std::vector<std::vector<QPolynomial>>;
QPolynomial polyMatrixDeterminant(const PolyMatrix& m);

// Ascending exponents, e.g. "q^{-2} + 3 + q".
std::string toString(const QPolynomial& p);

}  // namespace pleth
