#pragma once

#include "pleth/partition.hpp"
#include "pleth/qpoly.hpp"
#include "pleth/tableaux.hpp"

namespace pleth {

// Q-character of an SL2 representation in the variable Q = q^{1/2}; stored with
// integer exponents, palindromic about 0.
struct QCharacter {
  QPolynomial poly;
  bool operator==(const QCharacter&) const = default;
};

// s_lambda(1, q, ..., q^ell) by the hook content formula. Zero when ell < len(lambda) - 1.
QPolynomial schurSpecHCF(const Partition& lambda, int ell);
// The same specialization from the pyramid multiset. Requires ell >= len(lambda) - 1.
QPolynomial schurSpecPyramid(const Partition& lambda, int ell);
// Skew specialization by tableau enumeration of the proper reduction.
QPolynomial skewSpec(const SkewShape& shape, int ell, const OracleLimits& limits = {});
QCharacter qCharacter(const Partition& lambda, int ell);

}  // namespace pleth
