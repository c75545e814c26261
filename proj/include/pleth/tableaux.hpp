#pragma once

#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

#include "pleth/partition.hpp"
#include "pleth/qpoly.hpp"

namespace pleth {

// Box set [outer] minus [inner]. A straight shape has inner = empty.
class SkewShape {
 public:
  SkewShape() = default;
  SkewShape(Partition outer, Partition inner = {});

  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }
  int size() const { return outer_.size() - inner_.size(); }
  bool empty() const { return size() == 0; }
  bool contains(Box b) const { return outer_.contains(b) && !inner_.contains(b); }
  // Column-major order: columns left to right, each column top to bottom.
  std::vector<Box> boxes() const;
  bool operator==(const SkewShape&) const = default;

 private:
  Partition outer_;
  Partition inner_;
};

// "outer/inner" or a bare partition.
SkewShape parseSkewShape(std::string_view text);
std::string toString(const SkewShape& s);

// A filling of a skew shape with entries in {0, ..., bound}.
class Tableau {
 public:
  Tableau(SkewShape shape, int bound);

  const SkewShape& shape() const { return shape_; }
  int bound() const { return bound_; }
  int at(Box b) const;
  void set(Box b, int value);
  int weight() const;
  bool isSemistandard() const;
  // Entries row by row, each row left to right over the boxes of the shape.
  std::vector<std::vector<int>> rows() const;
  bool operator==(const Tableau&) const = default;

 private:
  std::size_t index(Box b) const;

  SkewShape shape_;
  int bound_;
  std::vector<int> offsets_;  // start of each row in entries_
  std::vector<int> entries_;
};

struct OracleLimits {
  int maxBoxes = 25;
  std::uint64_t maxTableaux = 10'000'000;
};

// Calls visit for every semistandard tableau with entries in {0..ell}, in
// lexicographic order of the column-major entry sequence. Throws CapExceeded
// when the shape or the running count exceeds the limits.
void enumerateSSYT(const SkewShape& shape, int ell, const std::function<void(const Tableau&)>& visit,
                   const OracleLimits& limits = {});
std::uint64_t countSSYT(const SkewShape& shape, int ell, const OracleLimits& limits = {});
QPolynomial weightEnumerator(const SkewShape& shape, int ell, const OracleLimits& limits = {});

Tableau minWeightTableau(const SkewShape& shape, int ell);
int skewMinWeight(const SkewShape& shape);
std::vector<Box> bumpableBoxes(const Tableau& t);
Tableau bump(const Tableau& t, Box b);
Tableau complementTableau(const Tableau& t, int r);

// Plane partitions with at most b rows, at most a columns and entries at most c,
// stored as b x a arrays padded with zeros.
using PlanePartition = std::vector<std::vector<int>>;
void enumeratePlanePartitions(int a, int b, int c, const std::function<void(const PlanePartition&)>& visit);
QPolynomial planePartitionGFByEnumeration(int a, int b, int c);

}  // namespace pleth
