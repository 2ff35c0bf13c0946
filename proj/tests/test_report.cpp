#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "surfising/report.hpp"

using namespace surfising;
using nlohmann::json;

namespace {

MultiPoly x(int v) { return MultiPoly::variable(v); }

ResultBlock block(const std::string& fixture, const MultiPoly& p) {
  ResultBlock b;
  b.command = "ising";
  b.fixture = fixture;
  b.method = "feynman";
  b.quantity = "E";
  b.snapped = p;
  b.raw = p;
  return b;
}

}  // namespace

TEST_CASE("result blocks carry raw and snapped values") {
  MultiPoly p = MultiPoly::constant(1.0) + x(0) * x(1);
  json j = to_json(block("triangle", p));
  CHECK(j["snapped_text"] == "1 + x0*x1");
  CHECK(j.contains("raw"));
  CHECK(j.contains("residual"));
  CHECK_FALSE(j.contains("seconds"));
  CHECK(j["snapped"].size() == 2);
}

TEST_CASE("identical blocks compare equal") {
  MultiPoly p = MultiPoly::constant(1.0) + x(0) * x(1) * Complex{3.0};
  json a = to_json(block("k4", p));
  CompareReport r = compare(a, a);
  CHECK(r.comparable);
  CHECK(r.equal());
  CHECK(r.offending.empty());
}

TEST_CASE("differences name the monomials") {
  MultiPoly p = MultiPoly::constant(1.0) + x(0) * x(1);
  MultiPoly q = MultiPoly::constant(1.0) + x(0) * x(1) * Complex{2.0} + x(2);
  CompareReport r = compare(to_json(block("k4", p)), to_json(block("k4", q)));
  CHECK(r.comparable);
  CHECK_FALSE(r.equal());
  CHECK(r.max_deviation == doctest::Approx(1.0));
  REQUIRE(r.offending.size() == 2);
  CHECK(r.offending[0] == "x0*x1");
  CHECK(r.offending[1] == "x2");
}

TEST_CASE("incomparable blocks") {
  MultiPoly p = MultiPoly::constant(1.0);
  CompareReport fixture = compare(to_json(block("k4", p)), to_json(block("triangle", p)));
  CHECK_FALSE(fixture.comparable);
  CHECK_FALSE(fixture.reason.empty());
  ResultBlock z;
  z.command = "partition";
  z.fixture = "k4";
  z.quantity = "Z";
  z.scalar = 2.0;
  CHECK_FALSE(compare(to_json(block("k4", p)), to_json(z)).comparable);
  ResultBlock z2 = z;
  z2.scalar = 2.5;
  CompareReport s = compare(to_json(z), to_json(z2));
  CHECK(s.comparable);
  CHECK(s.max_deviation == doctest::Approx(0.5));
}
