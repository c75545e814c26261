#include "pleth/qpoly.hpp"

#include <algorithm>
#include <sstream>

#include "pleth/errors.hpp"

namespace pleth {

QPolynomial::QPolynomial(int minExponent, std::vector<BigInt> coeffs)
    : min_(minExponent), coeffs_(std::move(coeffs)) {
  normalize();
}

QPolynomial QPolynomial::monomial(const BigInt& c, int exponent) {
  return QPolynomial(exponent, std::vector<BigInt>{c});
}

QPolynomial QPolynomial::fromInts(int minExponent, const std::vector<long long>& coeffs) {
  std::vector<BigInt> big(coeffs.begin(), coeffs.end());
  return QPolynomial(minExponent, std::move(big));
}

void QPolynomial::normalize() {
  std::size_t lo = 0;
  while (lo < coeffs_.size() && coeffs_[lo] == 0) ++lo;
  if (lo == coeffs_.size()) {
    coeffs_.clear();
    min_ = 0;
    return;
  }
  std::size_t hi = coeffs_.size();
  while (coeffs_[hi - 1] == 0) --hi;
  coeffs_.erase(coeffs_.begin() + static_cast<std::ptrdiff_t>(hi), coeffs_.end());
  coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lo));
  min_ += static_cast<int>(lo);
}

BigInt QPolynomial::coefficient(int exponent) const {
  if (isZero() || exponent < min_ || exponent > maxExponent()) return 0;
  return coeffs_[exponent - min_];
}

BigInt QPolynomial::evaluateAtOne() const {
  BigInt s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

QPolynomial QPolynomial::shifted(int e) const {
  QPolynomial out = *this;
  if (!out.isZero()) out.min_ += e;
  return out;
}

QPolynomial QPolynomial::operator-() const {
  QPolynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& o) {
  if (o.isZero()) return *this;
  if (isZero()) return *this = o;
  const int lo = std::min(min_, o.min_);
  const int hi = std::max(maxExponent(), o.maxExponent());
  std::vector<BigInt> out(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[min_ - lo + i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[o.min_ - lo + i] += o.coeffs_[i];
  min_ = lo;
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& o) { return *this += -o; }

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
  if (a.isZero() || b.isZero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return QPolynomial(a.min_ + b.min_, std::move(out));
}

QPolynomial& QPolynomial::operator*=(const QPolynomial& o) { return *this = *this * o; }

QPolynomial quantumInt(int m) {
  if (m <= 0) return {};
  return QPolynomial(0, std::vector<BigInt>(static_cast<std::size_t>(m), BigInt(1)));
}

QPolynomial qBinomial(int m, int ell) {
  if (m < 0) throw DomainError("qBinomial: negative top argument");
  if (ell < 0 || ell > m) return {};
  ell = std::min(ell, m - ell);
  QPolynomial num = QPolynomial::constant(1);
  QPolynomial den = QPolynomial::constant(1);
  for (int i = 0; i < ell; ++i) {
    num *= quantumInt(m - i);
    den *= quantumInt(i + 1);
  }
  try {
    return exactDivide(num, den);
  } catch (const DivisionNotExact&) {
    throw InternalDisagreement("qBinomial: quantum factorial quotient is not a polynomial");
  }
}

QPolynomial scaledQBinomial(int m, int ell) {
  if (ell < 0 || m < 0 || ell > m) return {};
  return qBinomial(m, ell).shifted(ell * (ell - 1) / 2);
}

QPolynomial exactDivide(const QPolynomial& n, const QPolynomial& d) {
  if (d.isZero()) throw DomainError("exactDivide: division by the zero polynomial");
  if (n.isZero()) return {};
  const auto& D = d.coeffs();
  std::vector<BigInt> rem = n.coeffs();
  if (rem.size() < D.size()) throw DivisionNotExact();
  const std::size_t qlen = rem.size() - D.size() + 1;
  std::vector<BigInt> quot(qlen);
  const BigInt& lead = D.back();
  for (std::size_t k = qlen; k-- > 0;) {
    BigInt& top = rem[k + D.size() - 1];
    if (top == 0) continue;
    BigInt r;
    boost::multiprecision::divide_qr(top, lead, quot[k], r);
    if (r != 0) throw DivisionNotExact();
    for (std::size_t j = 0; j < D.size(); ++j) rem[k + j] -= quot[k] * D[j];
  }
  for (const auto& c : rem)
    if (c != 0) throw DivisionNotExact();
  return QPolynomial(n.minExponent() - d.minExponent(), std::move(quot));
}

SymmetryReport symmetryChecks(const QPolynomial& p) {
  if (p.isZero()) throw DomainError("symmetryChecks: zero polynomial");
  const auto& c = p.coeffs();
  SymmetryReport out;
  std::size_t i = 0;
  while (i + 1 < c.size() && c[i] <= c[i + 1]) ++i;
  while (i + 1 < c.size() && c[i] >= c[i + 1]) ++i;
  out.unimodal = (i + 1 == c.size());
  if (std::equal(c.begin(), c.end(), c.rbegin()))
    out.centerTimesTwo = static_cast<long long>(p.minExponent()) + p.maxExponent();
  return out;
}

namespace {

QPolynomial cofactorDeterminant(const PolyMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return QPolynomial::constant(1);
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  QPolynomial total;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].isZero()) continue;
    PolyMatrix minor(n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) minor[i - 1].push_back(m[i][k]);
    QPolynomial term = m[0][j] * cofactorDeterminant(minor);
    if (j % 2 == 0)
      total += term;
    else
      total -= term;
  }
  return total;
}

// Fraction-free elimination over Z[q]; every division is exact.
QPolynomial bareissDeterminant(PolyMatrix m) {
  const std::size_t n = m.size();
  bool negate = false;
  QPolynomial prevPivot = QPolynomial::constant(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].isZero()) {
      std::size_t swapRow = k + 1;
      while (swapRow < n && m[swapRow][k].isZero()) ++swapRow;
      if (swapRow == n) return {};
      std::swap(m[k], m[swapRow]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = exactDivide(m[k][k] * m[i][j] - m[i][k] * m[k][j], prevPivot);
      m[i][k] = {};
    }
    prevPivot = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

}  // namespace

QPolynomial polyMatrixDeterminant(const PolyMatrix& input) {
  const std::size_t n = input.size();
  for (const auto& row : input)
    if (row.size() != n) throw DomainError("polyMatrixDeterminant: matrix is not square");
  if (n > 12) throw DomainError("polyMatrixDeterminant: size above 12");
  // Clear negative powers row by row so elimination runs over ordinary polynomials.
  PolyMatrix m = input;
  int totalShift = 0;
  for (auto& row : m) {
    int lowest = 0;
    bool any = false;
    for (const auto& e : row)
      if (!e.isZero()) {
        lowest = any ? std::min(lowest, e.minExponent()) : e.minExponent();
        any = true;
      }
    if (!any) return {};
    for (auto& e : row) e = e.shifted(-lowest);
    totalShift += lowest;
  }
  QPolynomial det = n <= 4 ? cofactorDeterminant(m) : bareissDeterminant(std::move(m));
  return det.shifted(totalShift);
}

std::string toString(const QPolynomial& p) {
  if (p.isZero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    BigInt c = p.coeffs()[i];
    if (c == 0) continue;
    const int e = p.minExponent() + static_cast<int>(i);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (c < 0) c = -c;
    if (e == 0) {
      out << c;
    } else {
      if (c != 1) out << c;
      out << 'q';
      if (e != 1) out << "^{" << e << '}';
    }
    first = false;
  }
  return out.str();
}

}  // namespace pleth

namespace pleth {

QPolynomial mulQuantumInt(const QPolynomial& p, int m) {
  if (m <= 0 || p.isZero()) return {};
  const auto& c = p.coeffs();
  const std::size_t n = c.size();
  std::vector<BigInt> out(n + static_cast<std::size_t>(m) - 1);
  BigInt window = 0;
  for (std::size_t k = 0; k < out.size(); ++k) {
    if (k < n) window += c[k];
    if (k >= static_cast<std::size_t>(m)) window -= c[k - static_cast<std::size_t>(m)];
    out[k] = window;
  }
  return QPolynomial(p.minExponent(), std::move(out));
}

QPolynomial divQuantumInt(const QPolynomial& p, int m) {
  if (m <= 0) throw DomainError("divQuantumInt: division by a zero quantum integer");
  if (p.isZero() || m == 1) return p;
  const auto& c = p.coeffs();
  const std::size_t step = static_cast<std::size_t>(m);
  if (c.size() < step) throw DivisionNotExact();
  // p / [m] = p (1 - q) / (1 - q^m): first differences, then a stride-m running sum.
  std::vector<BigInt> r(c.size() - step + 1);
  for (std::size_t k = 0; k < r.size(); ++k) {
    r[k] = c[k];
    if (k > 0) r[k] -= c[k - 1];
    if (k >= step) r[k] += r[k - step];
  }
  QPolynomial q(p.minExponent(), std::move(r));
  if (mulQuantumInt(q, m) != p) throw DivisionNotExact();
  return q;
}

QPolynomial quantumRatio(std::map<int, int> numerator, std::map<int, int> denominator) {
  for (auto& [value, count] : denominator) {
    auto it = numerator.find(value);
    if (it == numerator.end()) continue;
    const int common = std::min(count, it->second);
    count -= common;
    it->second -= common;
  }
  QPolynomial out = QPolynomial::constant(1);
  for (const auto& [value, count] : numerator)
    for (int i = 0; i < count; ++i) out = mulQuantumInt(out, value);
  for (const auto& [value, count] : denominator)
    for (int i = 0; i < count; ++i) out = divQuantumInt(out, value);
  return out;
}

}  // namespace pleth
