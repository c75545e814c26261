#include "pleth/serialize.hpp"

#include <istream>
#include <ostream>

#include "pleth/errors.hpp"

namespace pleth {

using nlohmann::json;

namespace {

template <class T>
T field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw ParseError(std::string("missing JSON field '") + name + "'");
  try {
    return j.at(name).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad JSON field '") + name + "': " + e.what());
  }
}

}  // namespace

json toJson(const Partition& p) { return json(p.parts()); }

Partition partitionFromJson(const json& j) {
  if (!j.is_array()) throw ParseError("partition must be a JSON array");
  std::vector<int> parts;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw ParseError("partition parts must be integers");
    parts.push_back(x.get<int>());
  }
  try {
    return Partition(parts);
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

json toJson(const QPolynomial& p) {
  json coeffs = json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(c.str());
  return json{{"min", p.isZero() ? 0 : p.minExponent()}, {"coeffs", coeffs}};
}

QPolynomial qpolyFromJson(const json& j) {
  const int lo = field<int>(j, "min");
  std::vector<BigInt> coeffs;
  for (const auto& c : field<std::vector<std::string>>(j, "coeffs")) {
    try {
      coeffs.emplace_back(c);
    } catch (const std::exception&) {
      throw ParseError("bad coefficient '" + c + "'");
    }
  }
  return QPolynomial(lo, std::move(coeffs));
}

json toJson(const EquivalenceRecord& r) {
  return json{{"lambda", toJson(r.lambda)}, {"ell", r.ell},       {"mu", toJson(r.mu)},
              {"m", r.m},                   {"d", r.d},           {"D2", r.twiceD},
              {"prime", r.prime},           {"labels", r.labels}};
}

EquivalenceRecord recordFromJson(const json& j) {
  if (!j.is_object()) throw ParseError("record must be a JSON object");
  EquivalenceRecord r;
  r.lambda = partitionFromJson(j.contains("lambda") ? j.at("lambda") : json());
  r.mu = partitionFromJson(j.contains("mu") ? j.at("mu") : json());
  r.ell = field<int>(j, "ell");
  r.m = field<int>(j, "m");
  r.d = field<int>(j, "d");
  r.twiceD = field<int>(j, "D2");
  r.prime = field<bool>(j, "prime");
  if (j.contains("labels")) r.labels = field<std::vector<std::string>>(j, "labels");
  return r;
}

json toJson(const SearchBounds& b) {
  return json{{"maxSize", b.maxSize},
              {"maxEll", b.maxEll},
              {"maxM", b.maxM},
              {"primeOnly", b.primeOnly},
              {"equalDegreeOnly", b.equalDegreeOnly},
              {"includeSelf", b.includeSelf},
              {"family", b.family == ShapeFamily::Table1 ? "table1" : "all"}};
}

json toJson(const VerificationReport& r) {
  return json{{"theorem", r.theorem},     {"passed", r.passed},       {"checked", r.checked},
              {"failures", r.failures},   {"window", r.window},       {"counterexamples", r.counterexamples}};
}

json toJson(const CensusReport& r, bool withRecords) {
  json histogram = json::object();
  for (const auto& [ell, n] : r.histogram) histogram[std::to_string(ell)] = n;
  json out{{"maxSize", r.maxSize}, {"ellLow", r.ellLow},      {"ellHigh", r.ellHigh},
           {"sameSizeOnly", r.sameSizeOnly}, {"total", r.total}, {"histogram", histogram}};
  if (withRecords) {
    json records = json::array();
    for (const auto& rec : r.records) records.push_back(toJson(rec));
    out["records"] = records;
  }
  return out;
}

void writeCache(std::ostream& out, const SearchBounds& b, const std::vector<EquivalenceRecord>& records) {
  out << json{{"version", kArtifactVersion}, {"bounds", toJson(b)}}.dump() << '\n';
  for (const auto& r : records) out << toJson(r).dump() << '\n';
}

bool readCache(std::istream& in, const SearchBounds& b, std::vector<EquivalenceRecord>& records) {
  std::string line;
  if (!std::getline(in, line)) return false;
  json header = json::parse(line, nullptr, false);
  if (header.is_discarded() || !header.is_object()) return false;
  if (header.value("version", "") != kArtifactVersion || header.value("bounds", json()) != toJson(b)) return false;
  std::vector<EquivalenceRecord> loaded;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded()) throw ParseError("corrupt cache line: " + line);
    loaded.push_back(recordFromJson(j));
  }
  records = std::move(loaded);
  return true;
}

}  // namespace pleth
