#include "pleth/irreducible.hpp"

#include "pleth/errors.hpp"
#include "pleth/specialize.hpp"

namespace pleth {

std::string toString(const ShapeClass& c) {
  switch (c.kind) {
    case ShapeClass::Kind::SkewRectangle:
      return "skew " + std::to_string(c.ell) + "-rectangle";
    case ShapeClass::Kind::OneNearRectangle:
      return "skew 1-near rectangle of width " + std::to_string(c.width);
    case ShapeClass::Kind::EllNearRectangle:
      return "skew " + std::to_string(c.ell) + "-near rectangle (column " + std::to_string(c.specialColumn) +
             " has length " + std::to_string(c.specialLength) + ")";
    case ShapeClass::Kind::Other:
      break;
  }
  return "other";
}

namespace {

Partition dropFirstRow(const Partition& p) {
  if (p.empty()) return p;
  return Partition(std::vector<int>(p.parts().begin() + 1, p.parts().end()));
}

Partition dropFirstColumn(const Partition& p) {
  std::vector<int> out;
  for (int x : p.parts())
    if (x > 1) out.push_back(x - 1);
  return Partition(std::move(out));
}

// Maximal runs of non-empty columns of a proper shape. No row crosses an empty
// column, so fillings of the pieces are independent and the specialization factors.
std::vector<SkewShape> splitAtEmptyColumns(const SkewShape& shape) {
  const Partition oc = conjugate(shape.outer());
  const Partition ic = conjugate(shape.inner());
  std::vector<SkewShape> pieces;
  std::vector<int> outerCols, innerCols;
  auto flush = [&] {
    if (outerCols.empty()) return;
    pieces.push_back(properReduction(SkewShape(conjugate(Partition(outerCols)), conjugate(Partition(innerCols)))));
    outerCols.clear();
    innerCols.clear();
  };
  for (int j = 1; j <= shape.outer().first(); ++j) {
    if (oc.part(j) == ic.part(j)) {
      flush();
      continue;
    }
    outerCols.push_back(oc.part(j));
    innerCols.push_back(ic.part(j));
  }
  flush();
  return pieces;
}

}  // namespace

bool isProper(const SkewShape& shape) {
  return shape.outer().first() > shape.inner().first() && shape.outer().length() > shape.inner().length();
}

SkewShape properReduction(const SkewShape& shape) {
  if (shape.empty()) throw DomainError("properReduction: empty skew shape");
  Partition outer = shape.outer();
  Partition inner = shape.inner();
  while (true) {
    if (outer.first() == inner.first()) {
      outer = dropFirstRow(outer);
      inner = dropFirstRow(inner);
    } else if (outer.length() == inner.length()) {
      outer = dropFirstColumn(outer);
      inner = dropFirstColumn(inner);
    } else {
      break;
    }
  }
  return SkewShape(std::move(outer), std::move(inner));
}

std::vector<int> columnLengths(const SkewShape& shape) {
  if (!isProper(shape)) throw DomainError("columnLengths: skew shape is not proper");
  const Partition oc = conjugate(shape.outer());
  const Partition ic = conjugate(shape.inner());
  std::vector<int> c;
  for (int j = 1; j <= shape.outer().first(); ++j) c.push_back(oc.part(j) - ic.part(j));
  return c;
}

ShapeClass classifyShape(const SkewShape& shape, int ell) {
  const std::vector<int> c = columnLengths(shape);
  const int p = static_cast<int>(c.size());
  ShapeClass out;
  out.ell = ell;
  auto all = [&](int value) {
    for (int x : c)
      if (x != value) return false;
    return true;
  };
  if (all(ell + 1)) {
    out.kind = ShapeClass::Kind::SkewRectangle;
    return out;
  }
  if (ell == 1) {
    int y = 0;
    while (y < p && c[y] == 2) ++y;
    int end = y;
    while (end < p && c[end] == 1) ++end;
    bool rest = true;
    for (int j = end; j < p; ++j) rest = rest && c[j] == 2;
    if (end > y && rest) {
      const Partition oc = conjugate(shape.outer());
      bool flat = true;
      for (int j = y + 1; j < end; ++j) flat = flat && oc.part(j + 1) == oc.part(y + 1);
      if (flat) {
        out.kind = ShapeClass::Kind::OneNearRectangle;
        out.width = end - y;
      }
    }
    return out;
  }
  if (ell >= 2) {
    int odd = -1;
    for (int j = 0; j < p; ++j) {
      if (c[j] == ell + 1) continue;
      if (odd >= 0) return out;
      odd = j;
    }
    if (odd >= 0 && (c[odd] == 1 || c[odd] == ell)) {
      out.kind = ShapeClass::Kind::EllNearRectangle;
      out.specialColumn = odd + 1;
      out.specialLength = c[odd];
    }
  }
  return out;
}

bool isEllIrreducible(const SkewShape& shape, int ell) {
  if (ell < 0) throw DomainError("isEllIrreducible: negative ell");
  if (shape.empty()) return true;
  // A product of specializations is a single run only when every factor but one is a monomial.
  int runs = 0;
  for (const SkewShape& piece : splitAtEmptyColumns(properReduction(shape))) {
    const ShapeClass::Kind kind = classifyShape(piece, ell).kind;
    if (kind == ShapeClass::Kind::Other) return false;
    if (kind != ShapeClass::Kind::SkewRectangle) ++runs;
  }
  return runs <= 1;
}

bool isEllIrreducibleOracle(const SkewShape& shape, int ell, const OracleLimits& limits) {
  const QPolynomial p = skewSpec(shape, ell, limits);
  if (p.isZero()) return false;
  for (const auto& coeff : p.coeffs())
    if (coeff != 1) return false;
  return true;
}

std::optional<int> irreduciblePartitionPredicate(const Partition& lambda, int ell) {
  if (ell < 1) throw DomainError("irreduciblePartitionPredicate: ell must be at least 1");
  const int n = ell * lambda.size() - 2 * minWeight(lambda);
  if (lambda.empty()) return n;
  if (ell == 1) {
    if (lambda.length() <= 2) return n;
    return std::nullopt;
  }
  const int p = lambda.first();
  std::vector<int> full(static_cast<std::size_t>(ell) + 1, p);
  std::vector<int> topHeavy(static_cast<std::size_t>(ell) + 1, p - 1);
  topHeavy[0] = p;
  std::vector<int> bottomShort(static_cast<std::size_t>(ell) + 1, p);
  bottomShort.back() = p - 1;
  for (const auto& candidate : {full, topHeavy, bottomShort})
    if (lambda == Partition(candidate)) return n;
  return std::nullopt;
}

}  // namespace pleth
