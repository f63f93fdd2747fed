#include <gtest/gtest.h>

#include "slr/constructions.hpp"
#include "slr/json_io.hpp"
#include "slr/pipeline.hpp"

namespace slr {
namespace {

TEST(JsonIo, Scalars) {
  EXPECT_EQ(Json(Rational::parse("-3/4")), Json("-3/4"));
  EXPECT_EQ(Json("7/2").get<Rational>(), Rational::parse("7/2"));
  EXPECT_EQ(Json(5).get<Rational>(), Rational(5));
  EXPECT_THROW(Json(0.5).get<Rational>(), std::invalid_argument);
  EXPECT_EQ(integer_to_json(Integer(12)), Json(12));
  const Integer big = pow(Integer(10), 30);
  EXPECT_EQ(integer_to_json(big), Json(big.get_str()));
  EXPECT_EQ(integer_from_json(integer_to_json(big)), big);
  EXPECT_EQ(Json(Threshold()), Json("-inf"));
  EXPECT_EQ(Json(-7).get<Threshold>(), Threshold(Integer(-7)));
}

TEST(JsonIo, DescriptionRoundTrip) {
  const auto d = random_description(2, 2, 3, 8, 10, 5);
  const Json j = d;
  const auto back = j.get<LinearDescription>();
  EXPECT_EQ(back.points, d.points);
  EXPECT_EQ(back.phi, d.phi);
  EXPECT_TRUE(same_edges(realize(back), realize(d)));
  EXPECT_EQ(Json(back).dump(), j.dump());
}

TEST(JsonIo, HypergraphRoundTrip) {
  const auto h = shift3_hypergraph(10);
  const auto back = hypergraph_from_json(hypergraph_to_json(h));
  EXPECT_TRUE(same_edges(h, back));
  EXPECT_THROW(hypergraph_from_json(Json{{"n", 3}, {"r", 2}, {"edges", {{2, 1}}}}), PreconditionError);
}

TEST(JsonIo, PipelineRoundTrip) {
  const auto d = shift3_description(128);
  const auto res = semilinear_ramsey_extract(d);
  const Json j = res;
  const auto back = j.get<PipelineResult>();
  EXPECT_EQ(back.vertices(), res.vertices());
  EXPECT_EQ(Json(back).dump(), j.dump());
  EXPECT_NO_THROW(verify_pipeline_result(d, back));
}

bool has_float(const Json& j) {
  if (j.is_number_float()) return true;
  if (j.is_structured())
    for (const auto& x : j)
      if (has_float(x)) return true;
  return false;
}

TEST(JsonIo, NoFloatingPoint) {
  const auto d = shift3_description(128);
  EXPECT_FALSE(has_float(Json(semilinear_ramsey_extract(d))));
  EXPECT_FALSE(has_float(Json(d)));
  EXPECT_FALSE(has_float(Json(GrowthParams{{Rational::parse("7/3")}})));
}

}  // namespace
}  // namespace slr
