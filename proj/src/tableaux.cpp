#include "pleth/tableaux.hpp"

#include <algorithm>
#include <string>

#include "pleth/errors.hpp"

namespace pleth {

SkewShape::SkewShape(Partition outer, Partition inner) : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (inner_.length() > outer_.length()) throw DomainError("skew shape: inner partition has more rows than outer");
  for (int i = 1; i <= inner_.length(); ++i)
    if (inner_.part(i) > outer_.part(i)) throw DomainError("skew shape: inner partition not contained in outer");
}

std::vector<Box> SkewShape::boxes() const {
  std::vector<Box> out;
  out.reserve(static_cast<std::size_t>(size()));
  const Partition oc = conjugate(outer_);
  const Partition ic = conjugate(inner_);
  for (int j = 1; j <= outer_.first(); ++j)
    for (int i = ic.part(j) + 1; i <= oc.part(j); ++i) out.push_back({i, j});
  return out;
}

SkewShape parseSkewShape(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return SkewShape(parsePartition(text));
  try {
    return SkewShape(parsePartition(text.substr(0, slash)), parsePartition(text.substr(slash + 1)));
  } catch (const DomainError& e) {
    throw ParseError(std::string("invalid skew shape: ") + e.what());
  }
}

std::string toString(const SkewShape& s) {
  if (s.inner().empty()) return toString(s.outer());
  return toString(s.outer()) + "/" + toString(s.inner());
}

Tableau::Tableau(SkewShape shape, int bound) : shape_(std::move(shape)), bound_(bound) {
  int total = 0;
  for (int i = 1; i <= shape_.outer().length(); ++i) {
    offsets_.push_back(total);
    total += shape_.outer().part(i) - shape_.inner().part(i);
  }
  entries_.assign(static_cast<std::size_t>(total), 0);
}

std::size_t Tableau::index(Box b) const {
  if (!shape_.contains(b)) throw DomainError("tableau: box outside the shape");
  return static_cast<std::size_t>(offsets_[b.row - 1] + (b.col - shape_.inner().part(b.row) - 1));
}

int Tableau::at(Box b) const { return entries_[index(b)]; }
void Tableau::set(Box b, int value) { entries_[index(b)] = value; }

int Tableau::weight() const {
  int w = 0;
  for (int x : entries_) w += x;
  return w;
}

bool Tableau::isSemistandard() const {
  for (const Box& b : shape_.boxes()) {
    const int v = at(b);
    if (v < 0 || v > bound_) return false;
    if (shape_.contains({b.row, b.col + 1}) && at({b.row, b.col + 1}) < v) return false;
    if (shape_.contains({b.row + 1, b.col}) && at({b.row + 1, b.col}) <= v) return false;
  }
  return true;
}

std::vector<std::vector<int>> Tableau::rows() const {
  std::vector<std::vector<int>> out;
  for (int i = 1; i <= shape_.outer().length(); ++i) {
    std::vector<int> row;
    for (int j = shape_.inner().part(i) + 1; j <= shape_.outer().part(i); ++j) row.push_back(at({i, j}));
    out.push_back(std::move(row));
  }
  return out;
}

namespace {

// Depth-first filling in column-major box order. For each box the admissible
// range is [max(left, above + 1), ell - boxesBelowInColumn].
template <class Visit>
void forEachFilling(const SkewShape& shape, int ell, const OracleLimits& limits, Visit&& visit) {
  if (shape.size() > limits.maxBoxes)
    throw CapExceeded("tableau oracle refuses shapes with more than " + std::to_string(limits.maxBoxes) + " boxes",
                      static_cast<std::uint64_t>(shape.size()));
  const std::vector<Box> bx = shape.boxes();
  const std::size_t n = bx.size();
  if (n == 0) {
    std::vector<int> none;
    visit(none, 0);
    return;
  }
  const Partition oc = conjugate(shape.outer());
  std::vector<int> left(n, -1), above(n, -1), upper(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t m = 0; m < k; ++m) {
      if (bx[m].row == bx[k].row && bx[m].col == bx[k].col - 1) left[k] = static_cast<int>(m);
      if (bx[m].col == bx[k].col && bx[m].row == bx[k].row - 1) above[k] = static_cast<int>(m);
    }
    upper[k] = ell - (oc.part(bx[k].col) - bx[k].row);
    if (upper[k] < 0) return;  // a column is longer than ell + 1
  }
  std::vector<int> value(n, 0);
  std::uint64_t count = 0;
  auto lowerBound = [&](std::size_t k) {
    int lo = 0;
    if (left[k] >= 0) lo = std::max(lo, value[left[k]]);
    if (above[k] >= 0) lo = std::max(lo, value[above[k]] + 1);
    return lo;
  };
  std::size_t k = 0;
  value[0] = lowerBound(0);
  int weight = value[0];
  while (true) {
    if (value[k] > upper[k]) {
      // exhausted this box, backtrack
      weight -= value[k];
      if (k == 0) return;
      --k;
      ++value[k];
      ++weight;
      continue;
    }
    if (k + 1 == n) {
      if (++count > limits.maxTableaux)
        throw CapExceeded("tableau count exceeds the oracle cap of " + std::to_string(limits.maxTableaux), count);
      visit(value, weight);
      ++value[k];
      ++weight;
      continue;
    }
    ++k;
    value[k] = lowerBound(k);
    weight += value[k];
  }
}

}  // namespace

void enumerateSSYT(const SkewShape& shape, int ell, const std::function<void(const Tableau&)>& visit,
                   const OracleLimits& limits) {
  const std::vector<Box> bx = shape.boxes();
  Tableau t(shape, ell);
  forEachFilling(shape, ell, limits, [&](const std::vector<int>& values, int) {
    for (std::size_t k = 0; k < bx.size(); ++k) t.set(bx[k], values[k]);
    visit(t);
  });
}

std::uint64_t countSSYT(const SkewShape& shape, int ell, const OracleLimits& limits) {
  std::uint64_t count = 0;
  forEachFilling(shape, ell, limits, [&](const std::vector<int>&, int) { ++count; });
  return count;
}

QPolynomial weightEnumerator(const SkewShape& shape, int ell, const OracleLimits& limits) {
  std::vector<std::uint64_t> byWeight;
  forEachFilling(shape, ell, limits, [&](const std::vector<int>&, int w) {
    if (static_cast<std::size_t>(w) >= byWeight.size()) byWeight.resize(static_cast<std::size_t>(w) + 1, 0);
    ++byWeight[static_cast<std::size_t>(w)];
  });
  std::vector<BigInt> coeffs(byWeight.begin(), byWeight.end());
  return QPolynomial(0, std::move(coeffs));
}

Tableau minWeightTableau(const SkewShape& shape, int ell) {
  Tableau t(shape, ell);
  const Partition ic = conjugate(shape.inner());
  for (const Box& b : shape.boxes()) {
    const int v = b.row - ic.part(b.col) - 1;
    if (v > ell) throw DomainError("minWeightTableau: a column is longer than ell + 1");
    t.set(b, v);
  }
  return t;
}

int skewMinWeight(const SkewShape& shape) {
  const Partition oc = conjugate(shape.outer());
  const Partition ic = conjugate(shape.inner());
  int w = 0;
  for (int j = 1; j <= shape.outer().first(); ++j) {
    const int c = oc.part(j) - ic.part(j);
    w += c * (c - 1) / 2;
  }
  return w;
}

namespace {

bool isBumpable(const Tableau& t, Box b) {
  const int v = t.at(b) + 1;
  if (v > t.bound()) return false;
  const SkewShape& s = t.shape();
  if (s.contains({b.row, b.col + 1}) && t.at({b.row, b.col + 1}) < v) return false;
  if (s.contains({b.row + 1, b.col}) && t.at({b.row + 1, b.col}) <= v) return false;
  return true;
}

}  // namespace

std::vector<Box> bumpableBoxes(const Tableau& t) {
  std::vector<Box> out;
  for (const Box& b : t.shape().boxes())
    if (isBumpable(t, b)) out.push_back(b);
  std::sort(out.begin(), out.end());
  return out;
}

Tableau bump(const Tableau& t, Box b) {
  if (!t.shape().contains(b)) throw DomainError("bump: box outside the shape");
  if (!isBumpable(t, b)) throw DomainError("bump: box is not bumpable");
  Tableau out = t;
  out.set(b, t.at(b) + 1);
  return out;
}

Tableau complementTableau(const Tableau& t, int r) {
  const SkewShape& s = t.shape();
  if (!s.inner().empty()) throw DomainError("complementTableau: shape must be a partition");
  const Partition& lambda = s.outer();
  if (r < 1 || lambda.length() > r) throw DomainError("complementTableau: partition has more than r parts");
  if (!t.isSemistandard()) throw DomainError("complementTableau: tableau is not semistandard");
  const int a = lambda.first();
  const Partition lc = conjugate(lambda);
  std::vector<std::vector<int>> cols(static_cast<std::size_t>(a));
  for (int j = 1; j <= a; ++j) {
    const int src = a + 1 - j;
    std::vector<bool> used(static_cast<std::size_t>(r), false);
    for (int i = 1; i <= lc.part(src); ++i) {
      const int v = t.at({i, src});
      if (v >= r) throw DomainError("complementTableau: entry is not below r");
      used[static_cast<std::size_t>(v)] = true;
    }
    for (int v = 0; v < r; ++v)
      if (!used[static_cast<std::size_t>(v)]) cols[static_cast<std::size_t>(j - 1)].push_back(v);
  }
  Tableau out(SkewShape(complementInBox(lambda, r)), r - 1);
  for (int j = 1; j <= a; ++j) {
    const auto& col = cols[static_cast<std::size_t>(j - 1)];
    for (std::size_t i = 0; i < col.size(); ++i) out.set({static_cast<int>(i) + 1, j}, col[i]);
  }
  return out;
}

void enumeratePlanePartitions(int a, int b, int c, const std::function<void(const PlanePartition&)>& visit) {
  if (a < 0 || b < 0 || c < 0) throw DomainError("plane partitions: negative box dimension");
  if (static_cast<long long>(a) * b * c > 64)
    throw CapExceeded("plane partition enumeration requires a*b*c <= 64", static_cast<std::uint64_t>(a) * b * c);
  PlanePartition pp(static_cast<std::size_t>(b), std::vector<int>(static_cast<std::size_t>(a), 0));
  const int cells = a * b;
  std::function<void(int)> fill = [&](int k) {
    if (k == cells) {
      visit(pp);
      return;
    }
    const int i = k / a, j = k % a;
    int hi = c;
    if (j > 0) hi = std::min(hi, pp[i][j - 1]);
    if (i > 0) hi = std::min(hi, pp[i - 1][j]);
    for (int v = 0; v <= hi; ++v) {
      pp[i][j] = v;
      fill(k + 1);
    }
    pp[i][j] = 0;
  };
  fill(0);
}

QPolynomial planePartitionGFByEnumeration(int a, int b, int c) {
  std::vector<BigInt> byWeight;
  enumeratePlanePartitions(a, b, c, [&](const PlanePartition& pp) {
    std::size_t w = 0;
    for (const auto& row : pp)
      for (int x : row) w += static_cast<std::size_t>(x);
    if (w >= byWeight.size()) byWeight.resize(w + 1);
    byWeight[w] += 1;
  });
  return QPolynomial(0, std::move(byWeight));
}

}  // namespace pleth
