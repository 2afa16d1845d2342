#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "toric/error.hpp"
#include "toric/fan_document.hpp"

using namespace toric;
using namespace toric::testing;

namespace {

const char* kPlane = R"({
  "schema_version": 1,
  "dim": 2,
  "rays": [[1, 0], [0, 1], [-1, -1]],
  "max_cones": [[0, 1], [0, 2], [1, 2]],
  "divisors": {"H": ["1", "0", "0"], "half": ["1/2", "0", "0"]},
  "ample": "H"
})";

SchemaError schema_error(const std::string& text) {
  try {
    parse_fan_document(text);
  } catch (const SchemaError& e) {
    return e;
  }
  ADD_FAILURE() << "document unexpectedly accepted";
  return SchemaError("", "");
}

std::string replace(std::string s, const std::string& from, const std::string& to) {
  auto pos = s.find(from);
  EXPECT_NE(pos, std::string::npos);
  return s.replace(pos, from.size(), to);
}

}  // namespace

TEST(FanDocument, ParsesPlane) {
  auto doc = parse_fan_document(kPlane);
  EXPECT_EQ(doc.raw.dim, 2u);
  EXPECT_EQ(doc.raw.rays.size(), 3u);
  EXPECT_EQ(doc.divisor("half")[0], q(1, 2));
  EXPECT_EQ(doc.divisor("K"), ToricDivisor::canonical(3));
  EXPECT_EQ(doc.divisor("-K"), ToricDivisor::anticanonical(3));
  EXPECT_EQ(doc.ample, std::optional<std::string>("H"));
  try {
    doc.divisor("nope");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownDivisor);
  }
}

TEST(FanDocument, NonPrimitiveRay) {
  auto e = schema_error(replace(kPlane, "[[1, 0], [0, 1]", "[[2, 0], [0, 1]"));
  EXPECT_EQ(e.path(), "/rays/0");
  EXPECT_EQ(e.reason(), "not primitive");
}

TEST(FanDocument, StrictFields) {
  EXPECT_EQ(schema_error(replace(kPlane, "\"dim\": 2,", "\"dim\": 2, \"extra\": 1,")).path(), "/extra");
  EXPECT_EQ(schema_error(replace(kPlane, "\"schema_version\": 1", "\"schema_version\": 2")).path(), "/schema_version");
  EXPECT_EQ(schema_error(replace(kPlane, "\"1/2\"", "\"2/4\"")).path(), "/divisors/half/0");
  EXPECT_EQ(schema_error(replace(kPlane, "\"1/2\"", "0.5")).path(), "/divisors/half/0");
  EXPECT_EQ(schema_error(replace(kPlane, "\"ample\": \"H\"", "\"ample\": \"G\"")).path(), "/ample");
  EXPECT_EQ(schema_error(replace(kPlane, "[\"1\", \"0\", \"0\"]", "[\"1\", \"0\"]")).path(), "/divisors/H");
  EXPECT_EQ(schema_error("not json").path(), "");
}

TEST(FanDocument, InvalidFanIsSchemaError) {
  auto e = schema_error(replace(kPlane, "[[0, 1], [0, 2], [1, 2]]", "[[0, 1], [0, 2]]"));
  EXPECT_EQ(e.path(), "/max_cones");
}

TEST(FanDocument, RoundTripOnCorpus) {
  for (const auto& name : fixture_names()) {
    auto doc = fixture(name);
    auto text = emit_fan_document(doc);
    auto again = parse_fan_document(text);
    EXPECT_EQ(again, doc) << name;
    EXPECT_EQ(emit_fan_document(again), text) << name;
  }
}
