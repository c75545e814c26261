// Command-line front end for the pleth library.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 resource cap exceeded.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>

#include "pleth/classify.hpp"
#include "pleth/equivalence.hpp"
#include "pleth/errors.hpp"
#include "pleth/identities.hpp"
#include "pleth/irreducible.hpp"
#include "pleth/serialize.hpp"
#include "pleth/specialize.hpp"
#include "pleth/tableaux.hpp"

using nlohmann::json;
using namespace pleth;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;
constexpr int kCap = 3;

struct Options {
  bool json = false;
  bool validate = false;
  bool oracle = false;
  std::string lambda, mu, skew, out, resume, checkRecord, family = "all", theorem;
  int ell = -1, m = -1;
  int maxSize = 8, maxEll = 0, maxM = 0, maxK = 3, minK = 1, minEll = 5, threads = 0;
  int maxA = 4, maxB = 4, maxC = 4;
  bool primeOnly = false, equalDegree = false, includeSelf = false, sameSize = false;
  std::uint64_t maxWork = 0;
};

OracleLimits oracleLimits(const Options& o) {
  OracleLimits l;
  if (o.maxWork > 0) l.maxTableaux = o.maxWork;
  return l;
}

std::string twiceToText(int twice) {
  if (twice % 2 == 0) return std::to_string(twice / 2);
  return std::to_string(twice) + "/2";
}

int requireInt(int value, const char* flag) {
  if (value < 0) throw CLI::ValidationError(flag, "is required");
  return value;
}

int runSpec(const Options& o) {
  const Partition lambda = parsePartition(o.lambda);
  const int ell = requireInt(o.ell, "--ell");
  const QPolynomial hcf = schurSpecHCF(lambda, ell);
  std::optional<bool> agree;
  if (o.validate || o.oracle) {
    bool ok = true;
    if (o.validate && ell >= lambda.length() - 1) ok = ok && schurSpecPyramid(lambda, ell) == hcf;
    ok = ok && weightEnumerator(SkewShape(lambda), ell, oracleLimits(o)) == hcf;
    agree = ok;
  }
  const SymmetryReport sym = symmetryChecks(hcf);
  if (o.json) {
    json j{{"lambda", toJson(lambda)}, {"ell", ell}, {"spec", toJson(hcf)}, {"unimodal", sym.unimodal}};
    j["centerTimesTwo"] = sym.centerTimesTwo ? json(*sym.centerTimesTwo) : json(nullptr);
    if (agree) j["routesAgree"] = *agree;
    std::cout << j.dump() << '\n';
  } else {
    std::cout << toString(hcf) << '\n';
    std::cout << "unimodal: " << (sym.unimodal ? "yes" : "no") << ", centre*2: "
              << (sym.centerTimesTwo ? std::to_string(*sym.centerTimesTwo) : "none") << '\n';
    if (agree) std::cout << (*agree ? "hook-content, pyramid and tableau routes agree" : "ROUTES DISAGREE") << '\n';
  }
  return agree.value_or(true) ? kOk : kFailed;
}

int runSkewSpec(const Options& o) {
  const SkewShape shape = parseSkewShape(o.skew);
  const int ell = requireInt(o.ell, "--ell");
  const QPolynomial p = skewSpec(shape, ell, oracleLimits(o));
  if (o.json)
    std::cout << json{{"shape", toString(shape)}, {"ell", ell}, {"spec", toJson(p)}}.dump() << '\n';
  else
    std::cout << toString(p) << '\n';
  return kOk;
}

int checkRecordText(const std::string& text, bool asJson) {
  int status = kOk;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const json j = json::parse(line, nullptr, false);
    if (j.is_discarded()) throw ParseError("record is not valid JSON: " + line);
    if (j.is_object() && j.contains("version")) continue;  // cache header
    const EquivalenceRecord r = recordFromJson(j);
    const bool ok = checkRecord(r) && (r.labels.empty() || r.labels == labelRecord(r));
    if (!ok) status = kFailed;
    if (asJson)
      std::cout << json{{"record", j}, {"valid", ok}}.dump() << '\n';
    else
      std::cout << (ok ? "valid: " : "INVALID: ") << line << '\n';
  }
  return status;
}

int runEquiv(const Options& o) {
  if (!o.checkRecord.empty()) {
    std::string text = o.checkRecord;
    if (text == "-") {
      std::ostringstream all;
      all << std::cin.rdbuf();
      text = all.str();
    } else if (!text.empty() && text.front() == '@') {
      std::ifstream in(text.substr(1));
      if (!in) throw ParseError("cannot open " + text.substr(1));
      std::ostringstream all;
      all << in.rdbuf();
      text = all.str();
    }
    return checkRecordText(text, o.json);
  }
  const Partition lambda = parsePartition(o.lambda);
  const Partition mu = parsePartition(o.mu);
  const int ell = requireInt(o.ell, "--ell");
  const int m = requireInt(o.m, "--m");
  const auto d = isEquivalent(lambda, ell, mu, m, o.validate);
  std::optional<EquivalenceRecord> r;
  if (d) {
    r = makeRecord(lambda, ell, mu, m);
    r->labels = labelRecord(*r);
  }
  if (o.json) {
    json j = r ? toJson(*r) : json{{"lambda", toJson(lambda)}, {"ell", ell}, {"mu", toJson(mu)}, {"m", m}};
    j["equivalent"] = d.has_value();
    if (r) j["liftsToGL"] = liftsToGL(*r);
    std::cout << j.dump() << '\n';
  } else if (r) {
    std::cout << "equivalent, d=" << r->d << ", D=" << twiceToText(r->twiceD)
              << (liftsToGL(*r) ? ", lifts to GL" : ", does not lift to GL") << '\n';
    std::cout << "labels:";
    for (const auto& l : r->labels) std::cout << ' ' << l;
    std::cout << '\n';
  } else {
    std::cout << "not equivalent\n";
  }
  return kOk;
}

SearchBounds boundsFrom(const Options& o) {
  SearchBounds b;
  b.maxSize = o.maxSize;
  b.maxEll = o.maxEll > 0 ? o.maxEll : 6;
  b.maxM = o.maxM > 0 ? o.maxM : b.maxEll;
  b.primeOnly = o.primeOnly;
  b.equalDegreeOnly = o.equalDegree;
  b.includeSelf = o.includeSelf;
  if (o.family == "table1") b.family = ShapeFamily::Table1;
  else if (o.family != "all") throw CLI::ValidationError("--family", "must be 'all' or 'table1'");
  if (o.maxWork > 0) b.workLimit = o.maxWork;
  return b;
}

int runSearch(const Options& o) {
  const SearchBounds b = boundsFrom(o);
  std::vector<EquivalenceRecord> records;
  bool cached = false;
  if (!o.resume.empty()) {
    std::ifstream in(o.resume);
    if (in) cached = readCache(in, b, records);
    if (!cached) std::cerr << "cache " << o.resume << " missing or stale; recomputing\n";
  }
  if (!cached) records = searchEquivalences(b);
  if (!o.out.empty()) {
    std::ofstream out(o.out);
    if (!out) throw ParseError("cannot write " + o.out);
    writeCache(out, b, records);
  }
  for (const auto& r : records) {
    if (o.json) {
      std::cout << toJson(r).dump() << '\n';
      continue;
    }
    std::cout << toString(r.lambda) << " @" << r.ell << "  ~  " << toString(r.mu) << " @" << r.m << "  d=" << r.d
              << " D=" << twiceToText(r.twiceD) << (r.prime ? " prime" : "") << " [";
    for (std::size_t i = 0; i < r.labels.size(); ++i) std::cout << (i ? "," : "") << r.labels[i];
    std::cout << "]\n";
  }
  if (!o.json) std::cerr << records.size() << " equivalences\n";
  return kOk;
}

int runVerify(const Options& o) {
  VerifyOptions v;
  v.maxSize = o.maxSize;
  v.maxEll = o.maxEll;
  v.maxK = o.maxK;
  v.minK = o.minK;
  v.minEll = o.minEll;
  if (o.maxWork > 0) v.workLimit = o.maxWork;
  std::vector<std::string> names;
  if (o.theorem == "all") names = theoremNames();
  else names.push_back(o.theorem);
  bool allPassed = true;
  for (const auto& name : names) {
    const VerificationReport r = verifyTheorem(name, v);
    allPassed = allPassed && r.passed;
    if (o.json) {
      std::cout << toJson(r).dump() << '\n';
      continue;
    }
    std::cout << name << ": " << (r.passed ? "pass" : "FAIL") << " (" << r.checked << " checks, " << r.failures
              << " failures; " << r.window << ")\n";
    for (const auto& c : r.counterexamples) std::cout << "  counterexample: " << c << '\n';
  }
  return allPassed ? kOk : kFailed;
}

int runCensus(const Options& o) {
  const CensusReport r = exceptionalCensus(o.maxSize, o.maxEll, o.sameSize);
  if (o.json) {
    std::cout << toJson(r, true).dump() << '\n';
    return kOk;
  }
  std::cout << "exceptional equivalences with |lambda|, |mu| <= " << r.maxSize << ", degrees " << r.ellLow << ".."
            << r.ellHigh << (r.sameSizeOnly ? ", equal sizes only" : "") << ": " << r.total << '\n';
  for (const auto& [ell, n] : r.histogram) std::cout << "  degree " << ell << ": " << n << '\n';
  for (const auto& rec : r.records)
    std::cout << "  " << toCompactString(rec.lambda) << "  ~  " << toCompactString(rec.mu) << "  @" << rec.ell
              << (liftsToGL(rec) ? "  (lifts to GL)" : "") << '\n';
  return kOk;
}

int runIrreducible(const Options& o) {
  const int ell = requireInt(o.ell, "--ell");
  if (!o.skew.empty()) {
    const SkewShape shape = parseSkewShape(o.skew);
    const bool structural = isEllIrreducible(shape, ell);
    std::optional<bool> oracle;
    if (o.oracle) oracle = isEllIrreducibleOracle(shape, ell, oracleLimits(o));
    const ShapeClass cls = classifyShape(properReduction(shape), ell);
    if (o.json) {
      json j{{"shape", toString(shape)}, {"ell", ell}, {"irreducible", structural}, {"class", toString(cls)}};
      if (oracle) j["oracle"] = *oracle;
      std::cout << j.dump() << '\n';
    } else {
      std::cout << (structural ? "irreducible" : "reducible") << " (" << toString(cls) << ")\n";
      if (oracle) std::cout << "oracle: " << (*oracle ? "irreducible" : "reducible") << '\n';
    }
    return oracle && *oracle != structural ? kFailed : kOk;
  }
  const Partition lambda = parsePartition(o.lambda);
  const auto n = irreduciblePartitionPredicate(lambda, ell);
  if (o.json) {
    std::cout << json{{"lambda", toJson(lambda)}, {"ell", ell}, {"irreducible", n.has_value()},
                      {"n", n ? json(*n) : json(nullptr)}}
                     .dump()
              << '\n';
  } else if (n) {
    std::cout << "irreducible: isomorphic to Sym^" << *n << '\n';
  } else {
    std::cout << "reducible\n";
  }
  return kOk;
}

int runIdentities(const Options& o) {
  struct Row {
    std::string name;
    int checked = 0, failed = 0;
  };
  std::vector<Row> rows{{"ssyt-to-plane-partitions"}, {"scaled-determinants"}, {"binomial-determinant"},
                        {"binomial-determinant-at-one"}, {"chu-vandermonde"}};
  auto tally = [](Row& r, bool ok) {
    ++r.checked;
    if (!ok) ++r.failed;
  };
  for (int a = 1; a <= o.maxA; ++a)
    for (int b = 1; b <= o.maxB; ++b)
      for (int c = 1; c <= o.maxC; ++c) {
        if (a * b * c <= 64) tally(rows[0], checkSSYTtoPP(a, b, c));
        tally(rows[1], checkScaledDeterminants(a, b, c));
        tally(rows[2], checkBinomialDeterminant(a, b, c));
        tally(rows[3], checkBinomialDeterminantAtOne(a, b, c));
      }
  const int maxMR = std::min(10, 2 * std::max({o.maxA, o.maxB, o.maxC}));
  for (int m = 0; m <= maxMR; ++m)
    for (int r = 0; r <= maxMR; ++r)
      for (int ell = 0; ell <= m; ++ell) tally(rows[4], checkChuVandermonde(m, r, ell));
  bool ok = true;
  json out = json::array();
  for (const auto& r : rows) {
    ok = ok && r.failed == 0;
    if (o.json)
      out.push_back(json{{"identity", r.name}, {"checked", r.checked}, {"failed", r.failed}});
    else
      std::cout << r.name << ": " << (r.failed == 0 ? "pass" : "FAIL") << " (" << r.checked << " cases, " << r.failed
                << " failed)\n";
  }
  if (o.json) std::cout << out.dump() << '\n';
  return ok ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Plethystic equivalences of SL2 representations"};
  app.require_subcommand(1);
  Options o;

  auto addCommon = [&](CLI::App* cmd) { cmd->add_flag("--json", o.json, "Machine-readable output"); };
  auto addPair = [&](CLI::App* cmd) {
    cmd->add_option("--lambda", o.lambda, "Partition, e.g. 8,7,2,2 or 3^2,1");
    cmd->add_option("--ell", o.ell, "Degree of the symmetric power");
  };
  auto addBounds = [&](CLI::App* cmd) {
    cmd->add_option("--max-size", o.maxSize, "Largest partition size");
    cmd->add_option("--max-ell", o.maxEll, "Largest degree (0 selects the default)");
    cmd->add_option("--threads", o.threads, "Worker threads");
    cmd->add_option("--max-work", o.maxWork, "Raise the work cap");
  };

  auto* spec = app.add_subcommand("spec", "Principal specialization s_lambda(1, q, ..., q^ell)");
  addCommon(spec);
  addPair(spec);
  spec->add_flag("--validate", o.validate, "Cross-check hook-content, pyramid and tableau routes");
  spec->add_flag("--oracle", o.oracle, "Cross-check against tableau enumeration");
  spec->add_option("--max-work", o.maxWork, "Tableau cap for the oracle");

  auto* skew = app.add_subcommand("skew-spec", "Specialization of a skew Schur function by enumeration");
  addCommon(skew);
  skew->add_option("--skew", o.skew, "Skew shape outer/inner")->required();
  skew->add_option("--ell", o.ell, "Largest entry")->required();
  skew->add_option("--max-work", o.maxWork, "Tableau cap");

  auto* equiv = app.add_subcommand("equiv", "Decide lambda at ell against mu at m");
  addCommon(equiv);
  addPair(equiv);
  equiv->add_option("--mu", o.mu, "Second partition");
  equiv->add_option("--m", o.m, "Second degree");
  equiv->add_flag("--validate", o.validate, "Cross-check the key, pyramid and polynomial routes");
  equiv->add_option("--check-record", o.checkRecord, "Re-verify JSON records (text, @file or - for stdin)");

  auto* search = app.add_subcommand("search", "Enumerate equivalences within bounds");
  addCommon(search);
  addBounds(search);
  search->add_option("--max-m", o.maxM, "Largest second degree (defaults to --max-ell)");
  search->add_flag("--prime-only", o.primeOnly, "Only prime equivalences");
  search->add_flag("--equal-degree", o.equalDegree, "Only ell = m");
  search->add_flag("--include-self", o.includeSelf, "Include identity records");
  search->add_option("--family", o.family, "all or table1");
  search->add_option("--out", o.out, "Write a JSON-lines cache");
  search->add_option("--resume", o.resume, "Reuse a JSON-lines cache when its bounds match");

  auto* verify = app.add_subcommand("verify", "Check a classification theorem on a finite window");
  addCommon(verify);
  addBounds(verify);
  verify->add_option("theorem", o.theorem, "Theorem name or 'all'")->required();
  verify->add_option("--max-k", o.maxK, "Largest family parameter, staircase or rectangle side");
  verify->add_option("--min-k", o.minK, "Smallest staircase for the solitary check");
  verify->add_option("--min-ell", o.minEll, "Smallest degree for the exceptional family");

  auto* census = app.add_subcommand("census", "Count exceptional equal-degree equivalences");
  addCommon(census);
  addBounds(census);
  census->add_flag("--same-size", o.sameSize, "Only pairs with |lambda| = |mu| (these lift to GL)");

  auto* irr = app.add_subcommand("irreducible", "Irreducibility of a plethysm or skew shape");
  addCommon(irr);
  addPair(irr);
  irr->add_option("--skew", o.skew, "Skew shape outer/inner instead of a partition");
  irr->add_flag("--oracle", o.oracle, "Cross-check by tableau enumeration");
  irr->add_option("--max-work", o.maxWork, "Tableau cap for the oracle");

  auto* ids = app.add_subcommand("identities", "Check the determinant and plane partition identities");
  addCommon(ids);
  ids->add_option("--max-a", o.maxA, "Largest a");
  ids->add_option("--max-b", o.maxB, "Largest b");
  ids->add_option("--max-c", o.maxC, "Largest c");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  setThreadCount(o.threads);
  try {
    if (*spec) return runSpec(o);
    if (*skew) return runSkewSpec(o);
    if (*equiv) return runEquiv(o);
    if (*search) return runSearch(o);
    if (*verify) return runVerify(o);
    if (*census) return runCensus(o);
    if (*irr) return runIrreducible(o);
    if (*ids) return runIdentities(o);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << '\n';
    return kCap;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InternalDisagreement& e) {
    std::cerr << "internal disagreement: " << e.what() << '\n';
    return kFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailed;
  }
  return kUsage;
}
