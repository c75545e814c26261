#include "pleth/equivalence.hpp"

#include "pleth/errors.hpp"
#include "pleth/specialize.hpp"

namespace pleth {

void DiffMultiset::add(int key, int multiplicity) {
  if (multiplicity == 0) return;
  auto [it, inserted] = entries_.try_emplace(key, multiplicity);
  if (!inserted) {
    it->second += multiplicity;
    if (it->second == 0) entries_.erase(it);
  }
}

DiffMultiset& DiffMultiset::operator+=(const DiffMultiset& o) {
  addAll(o.entries_, 1);
  return *this;
}

DiffMultiset& DiffMultiset::operator-=(const DiffMultiset& o) {
  addAll(o.entries_, -1);
  return *this;
}

DiffMultiset DiffMultiset::shifted(int k) const {
  DiffMultiset out;
  out.addAll(entries_, 1, k);
  return out;
}

std::string serialize(const DiffMultiset& d) {
  std::string out;
  for (const auto& [k, m] : d.entries()) {
    if (!out.empty()) out += ';';
    out += std::to_string(k) + ':' + std::to_string(m);
  }
  return out;
}

namespace {

void requireDegree(const Partition& p, int ell, const char* what) {
  if (ell < 0 || ell < p.length() - 1)
    throw DomainError(std::string(what) + ": degree " + std::to_string(ell) + " is below len - 1 for " + toString(p));
}

}  // namespace

DiffMultiset contentHookKey(const Partition& lambda, int ell) {
  requireDegree(lambda, ell, "contentHookKey");
  DiffMultiset key;
  key.addAll(contentMultiset(lambda), 1, ell + 1);
  key.addAll(hookMultiset(lambda), -1);
  return key;
}

DiffMultiset pyramidKey(const Partition& lambda, int ell) {
  requireDegree(lambda, ell, "pyramidKey");
  DiffMultiset key;
  key.addAll(pyramid(lambda, ell).entries, 1);
  for (int i = 1; i <= ell; ++i) key.add(i, -(ell + 1 - i));
  return key;
}

std::optional<int> isEquivalent(const Partition& lambda, int ell, const Partition& mu, int m, bool validate) {
  requireDegree(lambda, ell, "isEquivalent");
  requireDegree(mu, m, "isEquivalent");
  const bool byKey = contentHookKey(lambda, ell) == contentHookKey(mu, m);
  const int d = minWeight(lambda) - minWeight(mu);
  if (validate) {
    const bool byPyramid = pyramidKey(lambda, ell) == pyramidKey(mu, m);
    const QPolynomial left = schurSpecHCF(lambda, ell).shifted(-minWeight(lambda));
    const QPolynomial right = schurSpecHCF(mu, m).shifted(-minWeight(mu));
    const bool byPolynomial = left == right;
    if (byKey != byPyramid || byKey != byPolynomial)
      throw InternalDisagreement("equivalence routes disagree for " + toString(lambda) + " at " +
                                 std::to_string(ell) + " and " + toString(mu) + " at " + std::to_string(m));
  }
  if (!byKey) return std::nullopt;
  return d;
}

bool isPrime(const Partition& lambda, int ell, const Partition& mu, int m) {
  return ell >= lambda.length() && m >= mu.length();
}

std::optional<EquivalenceRecord> makeRecord(const Partition& lambda, int ell, const Partition& mu, int m) {
  auto d = isEquivalent(lambda, ell, mu, m);
  if (!d) return std::nullopt;
  EquivalenceRecord r;
  r.lambda = lambda;
  r.ell = ell;
  r.mu = mu;
  r.m = m;
  r.d = *d;
  r.twiceD = 2 * (minWeight(mu) - minWeight(lambda));
  r.prime = isPrime(lambda, ell, mu, m);
  return r;
}

bool checkRecord(const EquivalenceRecord& r) {
  if (r.ell < 0 || r.m < 0 || r.ell < r.lambda.length() - 1 || r.m < r.mu.length() - 1) return false;
  const auto d = isEquivalent(r.lambda, r.ell, r.mu, r.m);
  if (!d || *d != r.d) return false;
  if (r.twiceD != -r.ell * r.lambda.size() + r.m * r.mu.size()) return false;
  if (r.twiceD != 2 * (minWeight(r.mu) - minWeight(r.lambda))) return false;
  return r.prime == isPrime(r.lambda, r.ell, r.mu, r.m);
}

EquivalenceRecord compose(const EquivalenceRecord& r1, const EquivalenceRecord& r2) {
  if (!(r1.mu == r2.lambda) || r1.m != r2.ell) throw DomainError("compose: middle partitions or degrees differ");
  auto out = makeRecord(r1.lambda, r1.ell, r2.mu, r2.m);
  if (!out || out->d != r1.d + r2.d)
    throw InternalDisagreement("compose: composite of two equivalences failed to verify");
  return *out;
}

EquivalenceRecord columnRemovalRecord(const Partition& lambda) {
  if (lambda.empty()) throw DomainError("columnRemovalRecord: empty partition");
  const Partition reduced = removeFullColumns(lambda);
  if (reduced.empty()) throw DomainError("columnRemovalRecord: removing full columns leaves the empty partition");
  const int ell = lambda.length() - 1;
  auto out = makeRecord(lambda, ell, reduced, ell);
  if (!out) throw InternalDisagreement("column removal equivalence failed for " + toString(lambda));
  return *out;
}

int liftDivisor(const EquivalenceRecord& r) { return r.twiceD / 2; }

bool liftsToSubgroup(const EquivalenceRecord& r, int d) {
  if (d <= 0) throw DomainError("liftsToSubgroup: d must be positive");
  return liftDivisor(r) % d == 0;
}

bool liftsToGL(const EquivalenceRecord& r) { return liftDivisor(r) == 0; }

std::optional<int> infiniteFamilyCriterion(const Partition& lambda, const Partition& mu) {
  if (lambda.empty() || mu.empty()) throw DomainError("infiniteFamilyCriterion: partitions must be non-empty");
  std::optional<int> byMultisets;
  if (hookMultiset(lambda) == hookMultiset(mu)) {
    // The least content is 1 - len, so the only candidate shift is len(lambda) - len(mu).
    const int shift = lambda.length() - mu.length();
    Multiset moved;
    for (const auto& [c, k] : contentMultiset(lambda)) moved[c + shift] = k;
    if (moved == contentMultiset(mu)) byMultisets = shift;
  }
  std::optional<int> byStatistics;
  if (lambda == mu) {
    byStatistics = 0;
  } else if (mu == conjugate(lambda)) {
    const DurfeeStats s = durfeeStats(lambda);
    if (s.eastPartition == conjugate(s.southPartition)) byStatistics = lambda.length() - mu.length();
  }
  if (byMultisets != byStatistics)
    throw InternalDisagreement("infinite family routes disagree for " + toString(lambda) + " and " + toString(mu));
  return byMultisets;
}

int twiceDStatistic(const Partition& lambda, int ell) {
  if (ell < lambda.length()) throw DomainError("dStatistic: ell < len(lambda)");
  const std::vector<int> delta = differences(lambda, ell);
  int total = 0;
  for (int j = 1; j <= ell; ++j) total += j * (ell + 1 - j) * delta[static_cast<std::size_t>(j - 1)];
  return total - (ell + 2) * (ell + 1) * ell / 6;
}

}  // namespace pleth
