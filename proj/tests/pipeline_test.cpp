#include <gtest/gtest.h>

#include "slr/constructions.hpp"
#include "slr/pipeline.hpp"
#include "support.hpp"

namespace slr {
namespace {

void expect_homogeneous(const OrderedHypergraph& h, const std::vector<Vertex>& c, HomogeneousKind kind) {
  ASSERT_TRUE(std::is_sorted(c.begin(), c.end()));
  const auto tuples = testing::all_tuples(static_cast<Vertex>(c.size()), h.r());
  for (const auto& t : tuples) {
    Tuple e;
    for (Vertex p : t) e.push_back(c[p - 1]);
    ASSERT_EQ(h.contains(e), kind == HomogeneousKind::Clique);
  }
}

TEST(Pipeline, Shift3Verifies) {
  for (Vertex n : {64u, 256u}) {
    const auto desc = shift3_description(n);
    const auto res = semilinear_ramsey_extract(desc);
    EXPECT_GE(res.vertices().size(), 2u);
    expect_homogeneous(shift3_hypergraph(n), res.vertices(), res.kind);
    EXPECT_NO_THROW(verify_pipeline_result(desc, res));
    EXPECT_EQ(res.core.widths.n, n);
    EXPECT_LE(res.core.widths.cupcap, res.core.widths.monotone);
    EXPECT_EQ(res.core.widths.clique, res.vertices().size());
  }
}

TEST(Pipeline, ConstantTrueIsClique) {
  LinearDescription d;
  d.d = 1;
  d.r = 3;
  for (long v = 1; v <= 40; ++v) d.points.push_back({Rational(v)});
  d.phi = SignTable::constant(0, true);
  const auto res = semilinear_ramsey_extract(d);
  EXPECT_EQ(res.kind, HomogeneousKind::Clique);
  EXPECT_GE(res.vertices().size(), 3u);
  EXPECT_NO_THROW(verify_pipeline_result(d, res));
  auto flipped = res;
  flipped.kind = HomogeneousKind::Independent;
  EXPECT_THROW(verify_pipeline_result(d, flipped), VerificationFailed);
}

TEST(Pipeline, RandomDescriptionsVerify) {
  testing::Gen g(61);
  for (int it = 0; it < 4; ++it) {
    const auto desc = random_description(1, 1, 3, 4096, 10, g.engine()());
    const auto res = semilinear_ramsey_extract(desc);
    EXPECT_NO_THROW(verify_pipeline_result(desc, res));
  }
}

// Homogeneity holds part by part, so it survives any other combiner.
TEST(Pipeline, HomogeneityTransfersToOtherCombiners) {
  testing::Gen g(62);
  const auto desc = random_description(1, 2, 2, 512, 10, 7);
  const auto res = semilinear_ramsey_extract(desc);
  const auto dec = decompose_primitive(desc);
  for (const auto& w : dec.witnesses) {
    const auto part = primitive_hypergraph(w);
    const bool c = is_clique(part, res.vertices()), i = is_independent(part, res.vertices());
    EXPECT_TRUE(c || i);
  }
  for (int rep = 0; rep < 5; ++rep) {
    auto other = desc;
    std::vector<bool> table(other.phi.table().size());
    for (std::size_t k = 0; k < table.size(); ++k) table[k] = g.coin();
    other.phi = SignTable(other.phi.arity(), table);
    const auto h = realize(other);
    EXPECT_TRUE(is_clique(h, res.vertices()) || is_independent(h, res.vertices()));
  }
}

TEST(Pipeline, TamperedResultFails) {
  const auto desc = shift3_description(256);
  auto res = semilinear_ramsey_extract(desc);
  auto bad = res;
  bad.core.certificate.stages.front().columns.pop_back();
  EXPECT_THROW(verify_pipeline_result(desc, bad), VerificationFailed);
  bad = res;
  bad.core.vertices.push_back(bad.core.vertices.back() + 1);
  EXPECT_THROW(verify_pipeline_result(desc, bad), VerificationFailed);
}

TEST(StreamlineAndDominate, RejectsMisshapenWitnesses) {
  const auto w = Matrix<Rational>::from_rows({{1, 2, 3}, {4, 5, 6}});
  EXPECT_THROW(streamline_and_dominate({w}, 3, 3), PreconditionError);
}

TEST(Multicolor, SingleConstantTrue) {
  LinearDescription d;
  d.d = 1;
  d.r = 3;
  for (long v = 1; v <= 20; ++v) d.points.push_back({Rational(v)});
  d.phi = SignTable::constant(0, true);
  const auto res = multicolor_extract({d});
  EXPECT_EQ(res.color, 0u);
  EXPECT_TRUE(res.coverage_checked);
  EXPECT_TRUE(is_clique(realize(d), res.core.vertices));
}

TEST(Multicolor, ComplementaryPair) {
  const auto h = shift3_description(128);
  auto co = h;
  co.phi = SignTable::from_function(1, [](std::span<const int> s) { return s[0] >= 0; });
  const auto res = multicolor_extract({h, co});
  ASSERT_LT(res.color, 2u);
  const auto& chosen = res.color == 0 ? h : co;
  EXPECT_TRUE(is_clique(realize(chosen), res.core.vertices));
}

TEST(Multicolor, CoverageRejected) {
  auto a = shift3_description(12);
  a.phi = SignTable::constant(1, false);
  EXPECT_THROW(multicolor_extract({a, a}), PreconditionError);
}

TEST(Kind, RoundTrip) {
  EXPECT_EQ(parse_kind(to_string(HomogeneousKind::Clique)), HomogeneousKind::Clique);
  EXPECT_EQ(parse_kind(to_string(HomogeneousKind::Independent)), HomogeneousKind::Independent);
  EXPECT_THROW(parse_kind("both"), std::invalid_argument);
}

}  // namespace
}  // namespace slr
