#include <doctest.h>

#include <sstream>

#include "pleth/errors.hpp"
#include "pleth/serialize.hpp"
#include "pleth/specialize.hpp"

using namespace pleth;

TEST_CASE("partitions and polynomials round-trip") {
  const Partition p({8, 7, 2, 2});
  CHECK(partitionFromJson(toJson(p)) == p);
  CHECK_THROWS_AS(partitionFromJson(nlohmann::json::parse("[1,2]")), ParseError);
  CHECK_THROWS_AS(partitionFromJson(nlohmann::json::parse("{}")), ParseError);
  const QPolynomial q = schurSpecHCF(Partition({6, 4, 2}), 6);
  CHECK(qpolyFromJson(toJson(q)) == q);
  CHECK(qpolyFromJson(toJson(QPolynomial{})) == QPolynomial{});
  CHECK_THROWS_AS(qpolyFromJson(nlohmann::json::parse(R"({"min":0,"coeffs":["x"]})")), ParseError);
}

TEST_CASE("records round-trip") {
  auto r = makeRecord(Partition({8, 7, 2, 2}), 5, Partition({8, 6, 3}), 5);
  REQUIRE(r);
  r->labels = labelRecord(*r);
  CHECK(recordFromJson(toJson(*r)) == *r);
  CHECK_THROWS_AS(recordFromJson(nlohmann::json::parse(R"({"lambda":[1]})")), ParseError);
}

TEST_CASE("search cache") {
  SearchBounds b;
  b.maxSize = 6;
  b.maxEll = 4;
  b.maxM = 4;
  const auto records = searchEquivalences(b);
  std::stringstream buf;
  writeCache(buf, b, records);
  std::vector<EquivalenceRecord> loaded;
  std::stringstream again(buf.str());
  CHECK(readCache(again, b, loaded));
  CHECK(loaded == records);
  SearchBounds other = b;
  other.maxEll = 5;
  std::stringstream stale(buf.str());
  std::vector<EquivalenceRecord> untouched;
  CHECK_FALSE(readCache(stale, other, untouched));
  CHECK(untouched.empty());
  std::stringstream empty;
  CHECK_FALSE(readCache(empty, b, untouched));
}
