#include "kernels.hpp"

#include <omp.h>

namespace pleth {

void setThreadCount(int n) {
  if (n > 0) omp_set_num_threads(n);
}

int threadCount() { return omp_get_max_threads(); }

}  // namespace pleth

namespace pleth::detail {

Profile makeProfile(const Partition& p) {
  Profile out;
  out.length = p.length();
  out.first = p.first();
  out.contentCount.assign(static_cast<std::size_t>(std::max(0, out.first + out.length - 1)), 0);
  out.hookCount.assign(static_cast<std::size_t>(out.first + out.length), 0);
  const Partition c = conjugate(p);
  for (int i = 1; i <= p.length(); ++i)
    for (int j = 1; j <= p.part(i); ++j) {
      ++out.contentCount[static_cast<std::size_t>(j - i + out.length - 1)];
      ++out.hookCount[static_cast<std::size_t>((p.part(i) - i) + (c.part(j) - j) + 1)];
    }
  return out;
}

void packedKey(const Profile& profile, int ell, PackedKey& out) {
  out.clear();
  const int top = std::max(profile.first + ell, profile.first + profile.length - 1);
  const int contentOffset = profile.length - ell - 2;  // value v holds content v - ell - 1
  const int contents = static_cast<int>(profile.contentCount.size());
  const int hooks = static_cast<int>(profile.hookCount.size());
  for (int v = 1; v <= top; ++v) {
    int mult = 0;
    const int ci = v + contentOffset;
    if (ci >= 0 && ci < contents) mult += profile.contentCount[static_cast<std::size_t>(ci)];
    if (v < hooks) mult -= profile.hookCount[static_cast<std::size_t>(v)];
    if (mult != 0) {
      out.push_back(v);
      out.push_back(mult);
    }
  }
}

std::vector<std::pair<std::size_t, std::size_t>> groupEqualKeys(std::vector<KeyEntry>& entries) {
  std::sort(entries.begin(), entries.end(), [](const KeyEntry& x, const KeyEntry& y) {
    if (x.key != y.key) return x.key < y.key;
    if (x.index != y.index) return x.index < y.index;
    return x.ell < y.ell;
  });
  std::vector<std::pair<std::size_t, std::size_t>> groups;
  for (std::size_t i = 0; i < entries.size();) {
    std::size_t j = i + 1;
    while (j < entries.size() && entries[j].key == entries[i].key) ++j;
    if (j - i >= 2) groups.emplace_back(i, j);
    i = j;
  }
  return groups;
}

std::vector<Partition> canonicalPartitions(int maxSize) {
  std::vector<Partition> ps = partitionsUpTo(maxSize);
  std::sort(ps.begin(), ps.end());
  return ps;
}

}  // namespace pleth::detail
