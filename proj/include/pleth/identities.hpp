#pragma once

#include "pleth/qpoly.hpp"

namespace pleth {

// Generating function of plane partitions in an a x b x c box as a product of
// quantum integer ratios.
QPolynomial macmahonProduct(int a, int b, int c);
// Dual Jacobi-Trudi determinant for the rectangle (a^b) specialised at b + c - 1.
QPolynomial jacobiTrudiRectangle(int a, int b, int c);

// Both determinant forms of the scaled plane partition generating function.
bool checkScaledDeterminants(int a, int b, int c);
// The q-binomial determinant form with the factor q^{1^2 + ... + (a-1)^2}.
bool checkBinomialDeterminant(int a, int b, int c);
// Evaluation of the same identity at q = 1, computed with plain binomials.
bool checkBinomialDeterminantAtOne(int a, int b, int c);
// Both column and row versions of the Chu-Vandermonde identity for scaled q-binomials.
bool checkChuVandermonde(int m, int r, int ell);
// The rectangle specialisation against brute-force plane partition enumeration.
bool checkSSYTtoPP(int a, int b, int c);

}  // namespace pleth
