#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pleth/tableaux.hpp"

namespace pleth {

struct ShapeClass {
  enum class Kind { SkewRectangle, OneNearRectangle, EllNearRectangle, Other };
  Kind kind = Kind::Other;
  int ell = 0;
  int width = 0;          // OneNearRectangle: number of length-1 columns
  int specialColumn = 0;  // EllNearRectangle: the column z (1-based)
  int specialLength = 0;  // EllNearRectangle: c_z, either 1 or ell
  bool operator==(const ShapeClass&) const = default;
};

std::string toString(const ShapeClass& c);

// Strips full-width leading rows and full-height leading columns until the shape is proper.
SkewShape properReduction(const SkewShape& shape);
bool isProper(const SkewShape& shape);
std::vector<int> columnLengths(const SkewShape& shape);
ShapeClass classifyShape(const SkewShape& shape, int ell);

// Structural decision. The proper reduction is cut at empty columns; each piece must be
// a skew ell-rectangle or ell-near rectangle, and at most one piece may be a near rectangle.
// Shapes without empty columns reduce to the plain rectangle/near-rectangle test.
bool isEllIrreducible(const SkewShape& shape, int ell);
// Definition-level decision: the specialization is q^b (1 + q + ... + q^n).
bool isEllIrreducibleOracle(const SkewShape& shape, int ell, const OracleLimits& limits = {});
// Some(n) iff the plethysm with partition lambda over Sym^ell is Sym^n.
std::optional<int> irreduciblePartitionPredicate(const Partition& lambda, int ell);

}  // namespace pleth
