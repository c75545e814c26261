#include "pleth/specialize.hpp"

#include "pleth/errors.hpp"
#include "pleth/irreducible.hpp"

namespace pleth {

QPolynomial schurSpecHCF(const Partition& lambda, int ell) {
  if (ell < 0) throw DomainError("schurSpecHCF: negative ell");
  Multiset shiftedContents;
  for (const auto& [c, mult] : contentMultiset(lambda)) {
    // [x]_q = 0 for x <= 0, so the whole product vanishes.
    if (c + ell + 1 <= 0) return {};
    shiftedContents[c + ell + 1] += mult;
  }
  try {
    return quantumRatio(std::move(shiftedContents), hookMultiset(lambda)).shifted(minWeight(lambda));
  } catch (const DivisionNotExact&) {
    throw InternalDisagreement("hook content quotient is not a polynomial for " + toString(lambda));
  }
}

QPolynomial schurSpecPyramid(const Partition& lambda, int ell) {
  if (ell < 0 || ell < lambda.length() - 1) throw DomainError("schurSpecPyramid: ell < len(lambda) - 1");
  Multiset denominator;
  for (int i = 1; i <= ell; ++i) denominator[i] = ell + 1 - i;
  try {
    return quantumRatio(pyramid(lambda, ell).entries, std::move(denominator)).shifted(minWeight(lambda));
  } catch (const DivisionNotExact&) {
    throw InternalDisagreement("pyramid quotient is not a polynomial for " + toString(lambda));
  }
}

QPolynomial skewSpec(const SkewShape& shape, int ell, const OracleLimits& limits) {
  if (shape.empty()) return QPolynomial::constant(1);
  return weightEnumerator(properReduction(shape), ell, limits);
}

QCharacter qCharacter(const Partition& lambda, int ell) {
  const QPolynomial p = schurSpecHCF(lambda, ell);
  if (p.isZero()) return {};
  std::vector<BigInt> coeffs(2 * p.coeffs().size() - 1);
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) coeffs[2 * i] = p.coeffs()[i];
  return {QPolynomial(2 * p.minExponent() - ell * lambda.size(), std::move(coeffs))};
}

}  // namespace pleth
