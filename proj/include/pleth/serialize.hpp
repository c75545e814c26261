#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "pleth/classify.hpp"
#include "pleth/equivalence.hpp"
#include "pleth/qpoly.hpp"

namespace pleth {

inline constexpr const char* kArtifactVersion = "pleth-1.0.0";

nlohmann::json toJson(const Partition& p);
Partition partitionFromJson(const nlohmann::json& j);

// {"min": e, "coeffs": ["c0", "c1", ...]} with decimal-string coefficients.
nlohmann::json toJson(const QPolynomial& p);
QPolynomial qpolyFromJson(const nlohmann::json& j);

// {"lambda":[...],"ell":n,"mu":[...],"m":n,"d":n,"D2":n,"prime":bool,"labels":[...]}
nlohmann::json toJson(const EquivalenceRecord& r);
EquivalenceRecord recordFromJson(const nlohmann::json& j);

nlohmann::json toJson(const SearchBounds& b);
nlohmann::json toJson(const VerificationReport& r);
nlohmann::json toJson(const CensusReport& r, bool withRecords);

// JSON-lines cache: a header {"version", "bounds"} followed by one record per line.
void writeCache(std::ostream& out, const SearchBounds& b, const std::vector<EquivalenceRecord>& records);
// Returns false when the header does not match the bounds or the artifact version.
bool readCache(std::istream& in, const SearchBounds& b, std::vector<EquivalenceRecord>& records);

}  // namespace pleth
