#include "pleth/partition.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

#include "pleth/errors.hpp"

namespace pleth {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw DomainError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw DomainError("partition parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::strong_ordering Partition::operator<=>(const Partition& o) const {
  if (auto c = size_ <=> o.size_; c != 0) return c;
  return std::lexicographical_compare_three_way(parts_.begin(), parts_.end(), o.parts_.begin(),
                                                o.parts_.end());
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parsePositiveInt(std::string_view tok, std::string_view whole) {
  tok = trim(tok);
  if (tok.empty() || tok.front() == '0' || tok.front() == '+' || tok.front() == '-')
    throw ParseError("malformed integer '" + std::string(tok) + "' in partition '" + std::string(whole) + "'");
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError("malformed integer '" + std::string(tok) + "' in partition '" + std::string(whole) + "'");
  return value;
}

}  // namespace

Partition parsePartition(std::string_view text) {
  const std::string_view whole = trim(text);
  if (whole == "[]") return Partition{};
  if (whole.empty()) throw ParseError("empty partition text; use [] for the empty partition");
  std::vector<int> parts;
  std::size_t start = 0;
  while (start <= whole.size()) {
    std::size_t comma = whole.find(',', start);
    if (comma == std::string_view::npos) comma = whole.size();
    std::string_view item = whole.substr(start, comma - start);
    std::size_t caret = item.find('^');
    if (caret == std::string_view::npos) {
      parts.push_back(parsePositiveInt(item, whole));
    } else {
      int value = parsePositiveInt(item.substr(0, caret), whole);
      int reps = parsePositiveInt(item.substr(caret + 1), whole);
      if (reps > 100000) throw ParseError("exponent too large in partition '" + std::string(whole) + "'");
      parts.insert(parts.end(), reps, value);
    }
    start = comma + 1;
  }
  for (std::size_t i = 1; i < parts.size(); ++i)
    if (parts[i] > parts[i - 1])
      throw ParseError("parts are not weakly decreasing in '" + std::string(whole) + "'");
  return Partition(std::move(parts));
}

std::string toString(const Partition& p) {
  if (p.empty()) return "[]";
  std::string out;
  for (int x : p.parts()) {
    if (!out.empty()) out += ',';
    out += std::to_string(x);
  }
  return out;
}

std::string toCompactString(const Partition& p) {
  if (p.empty()) return "[]";
  std::string out;
  const auto& v = p.parts();
  for (std::size_t i = 0; i < v.size();) {
    std::size_t j = i;
    while (j < v.size() && v[j] == v[i]) ++j;
    if (!out.empty()) out += ',';
    out += std::to_string(v[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

Partition conjugate(const Partition& p) {
  std::vector<int> out(p.first(), 0);
  for (int x : p.parts())
    for (int j = 0; j < x; ++j) ++out[j];
  return Partition(std::move(out));
}

Partition complementInBox(const Partition& p, int r) {
  if (r < 1) throw DomainError("complementInBox: r must be positive");
  if (p.length() > r) throw DomainError("complementInBox: partition has more than r parts");
  const int a = p.first();
  std::vector<int> out(r);
  for (int j = 1; j <= r; ++j) out[j - 1] = a - p.part(r + 1 - j);
  return Partition(std::move(out));
}

Partition removeFullColumns(const Partition& p) {
  if (p.empty()) throw DomainError("removeFullColumns: empty partition");
  const int last = p.parts().back();
  std::vector<int> out;
  for (int x : p.parts())
    if (x > last) out.push_back(x - last);
  return Partition(std::move(out));
}

Partition rectangle(int width, int height) {
  if (width < 0 || height < 0) throw DomainError("rectangle: negative dimension");
  if (width == 0) return Partition{};
  return Partition(std::vector<int>(height, width));
}

Partition staircase(int k) {
  std::vector<int> out;
  for (int i = k; i >= 1; --i) out.push_back(i);
  return Partition(std::move(out));
}

Multiset hookMultiset(const Partition& p) {
  Multiset h;
  const Partition c = conjugate(p);
  for (int i = 1; i <= p.length(); ++i)
    for (int j = 1; j <= p.part(i); ++j) ++h[(p.part(i) - i) + (c.part(j) - j) + 1];
  return h;
}

Multiset contentMultiset(const Partition& p) {
  Multiset c;
  for (int i = 1; i <= p.length(); ++i)
    for (int j = 1; j <= p.part(i); ++j) ++c[j - i];
  return c;
}

int minWeight(const Partition& p) {
  int b = 0;
  for (int i = 1; i <= p.length(); ++i) b += (i - 1) * p.part(i);
  return b;
}

std::vector<int> differences(const Partition& p, int ell) {
  if (ell < p.length() - 1 || ell < 0) throw DomainError("differences: ell < len(lambda) - 1");
  std::vector<int> d(ell);
  for (int j = 1; j <= ell; ++j) d[j - 1] = p.part(j) - p.part(j + 1) + 1;
  return d;
}

Pyramid pyramid(const Partition& p, int ell) {
  Pyramid out;
  if (ell == 0) {
    if (!p.empty() && p.length() > 1) throw DomainError("pyramid: ell < len(lambda) - 1");
    return out;
  }
  out.rows.push_back(differences(p, ell));
  std::vector<int> prev(ell + 1, 0);
  for (int i = 1; i < ell; ++i) {
    const auto& cur = out.rows.back();
    std::vector<int> next(cur.size() - 1);
    for (std::size_t j = 0; j + 1 < cur.size(); ++j) next[j] = cur[j] + cur[j + 1] - prev[j + 1];
    prev = cur;
    out.rows.push_back(std::move(next));
  }
  for (const auto& row : out.rows)
    for (int x : row) ++out.entries[x];
  return out;
}

namespace {

int southRankOf(const Partition& p, int d) {
  int j = 0;
  while (p.part(d + j + 1) == d && d + j + 1 <= p.length()) ++j;
  return j;
}

Partition southPartitionOf(const Partition& p, int d, int srank) {
  std::vector<int> out;
  for (int i = d + srank + 1; i <= p.length(); ++i) out.push_back(p.part(i));
  return Partition(std::move(out));
}

int durfeeRank(const Partition& p) {
  int r = 0;
  while (p.part(r + 1) >= r + 1) ++r;
  return r;
}

}  // namespace

DurfeeStats durfeeStats(const Partition& p) {
  if (p.empty()) throw DomainError("durfeeStats: empty partition");
  DurfeeStats s;
  s.rank = durfeeRank(p);
  s.southRank = southRankOf(p, s.rank);
  s.southPartition = southPartitionOf(p, s.rank, s.southRank);
  const Partition c = conjugate(p);
  s.eastRank = southRankOf(c, s.rank);
  s.eastPartition = conjugate(southPartitionOf(c, s.rank, s.eastRank));
  return s;
}

int removableBoxCount(const Partition& p) {
  int count = 0;
  for (int i = 1; i <= p.length(); ++i)
    if (p.part(i) > p.part(i + 1)) ++count;
  return count;
}

std::vector<Box> boxes(const Partition& p) {
  std::vector<Box> out;
  out.reserve(p.size());
  for (int i = 1; i <= p.length(); ++i)
    for (int j = 1; j <= p.part(i); ++j) out.push_back({i, j});
  return out;
}

bool isRectangle(const Partition& p) {
  return !p.empty() && p.parts().front() == p.parts().back();
}

bool isProperHook(const Partition& p) {
  return p.length() >= 2 && p.first() >= 2 && p.part(2) == 1;
}

bool isTwoRowNonHook(const Partition& p) { return p.length() == 2 && p.part(2) >= 2; }

bool isTwoColumnNonHook(const Partition& p) { return p.first() == 2 && p.part(2) == 2; }

std::vector<Partition> partitionsOf(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  // Classical successor rule for reverse lexicographic order.
  std::vector<int> a{n};
  while (true) {
    out.emplace_back(a);
    int rem = 0;
    while (!a.empty() && a.back() == 1) {
      a.pop_back();
      ++rem;
    }
    if (a.empty()) break;
    int x = --a.back();
    ++rem;
    while (rem > x) {
      a.push_back(x);
      rem -= x;
    }
    a.push_back(rem);
  }
  return out;
}

std::vector<Partition> partitionsUpTo(int maxSize) {
  std::vector<Partition> out;
  for (int n = 1; n <= maxSize; ++n) {
    auto ps = partitionsOf(n);
    out.insert(out.end(), std::make_move_iterator(ps.begin()), std::make_move_iterator(ps.end()));
  }
  return out;
}

int multisetSize(const Multiset& m) {
  int n = 0;
  for (const auto& [k, v] : m) n += v;
  return n;
}

}  // namespace pleth
