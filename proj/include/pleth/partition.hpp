#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace pleth {

// Sorted value -> multiplicity map. Used for hook, content and pyramid multisets.
using Multiset = std::map<int, int>;

struct Box {
  int row = 0;  // 1-based
  int col = 0;  // 1-based
  auto operator<=>(const Box&) const = default;
};

// A weakly decreasing sequence of positive integers. Trailing zeros are
// stripped on construction, so equality is structural.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  // 1-based part access; zero beyond the length.
  int part(int i) const { return (i >= 1 && i <= length()) ? parts_[i - 1] : 0; }
  int first() const { return parts_.empty() ? 0 : parts_.front(); }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const { return size_; }
  bool empty() const { return parts_.empty(); }
  bool contains(Box b) const { return b.row >= 1 && b.col >= 1 && b.col <= part(b.row); }

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  // Graded order: size first, then lexicographic on parts.
  std::strong_ordering operator<=>(const Partition& o) const;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

struct DurfeeStats {
  int rank = 0;
  int southRank = 0;
  int eastRank = 0;
  Partition southPartition;
  Partition eastPartition;
};

struct Pyramid {
  std::vector<std::vector<int>> rows;
  Multiset entries;
};

Partition parsePartition(std::string_view text);
// Comma separated parts, "[]" for the empty partition. Round-trips through parsePartition.
std::string toString(const Partition& p);
// Compact form using exponents for repeated parts, e.g. "5,4,3^5,1^6".
std::string toCompactString(const Partition& p);

Partition conjugate(const Partition& p);
Partition complementInBox(const Partition& p, int r);
Partition removeFullColumns(const Partition& p);
Partition rectangle(int width, int height);
Partition staircase(int k);

Multiset hookMultiset(const Partition& p);
Multiset contentMultiset(const Partition& p);
int minWeight(const Partition& p);
std::vector<int> differences(const Partition& p, int ell);
Pyramid pyramid(const Partition& p, int ell);
DurfeeStats durfeeStats(const Partition& p);
int removableBoxCount(const Partition& p);
std::vector<Box> boxes(const Partition& p);

bool isRectangle(const Partition& p);
bool isProperHook(const Partition& p);
bool isTwoRowNonHook(const Partition& p);
bool isTwoColumnNonHook(const Partition& p);

// All partitions of n in reverse lexicographic order, starting with (n).
std::vector<Partition> partitionsOf(int n);
// All non-empty partitions with size at most maxSize, sizes ascending.
std::vector<Partition> partitionsUpTo(int maxSize);

int multisetSize(const Multiset& m);

}  // namespace pleth
