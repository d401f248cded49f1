#include <gtest/gtest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "trichain/chain_model.hpp"
#include "trichain/errors.hpp"

namespace trichain {
namespace {

std::vector<int> sorted_degrees(const ChainGraph& g) {
  std::vector<int> d(g.degrees().begin(), g.degrees().end());
  std::sort(d.begin(), d.end());
  return d;
}

TEST(ValidateLengthVector, MinimalLinearChainIsValid) {
  const std::vector<int> v{4};
  const auto r = validate_length_vector(v);
  EXPECT_TRUE(r.valid);
  EXPECT_EQ(r.triangles, 4);
  EXPECT_EQ(r.segments, 1);
  EXPECT_TRUE(r.violations.empty());
}

TEST(ValidateLengthVector, RejectsInternalSegmentOfLengthThree) {
  const std::vector<int> v{3, 3, 3};
  const auto r = validate_length_vector(v);
  EXPECT_FALSE(r.valid);
  ASSERT_EQ(r.violations.size(), 1u);
  EXPECT_NE(r.violations[0].find("internal segment l2=3"), std::string::npos);
}

TEST(ValidateLengthVector, RejectsShortTerminalSegment) {
  const std::vector<int> v{2, 5};
  const auto r = validate_length_vector(v);
  EXPECT_FALSE(r.valid);
  ASSERT_EQ(r.violations.size(), 1u);
  EXPECT_NE(r.violations[0].find("terminal segment l1=2"), std::string::npos);
}

TEST(ValidateLengthVector, ReportsEveryViolation) {
  const std::vector<int> v{2, 3, 1};
  const auto r = validate_length_vector(v);
  EXPECT_FALSE(r.valid);
  EXPECT_EQ(r.violations.size(), 4u);  // l1, l3, internal l2, n = 2
  EXPECT_EQ(r.triangles, 2);
}

TEST(ValidateLengthVector, TooFewTriangles) {
  const std::vector<int> v{3};
  const auto r = validate_length_vector(v);
  EXPECT_FALSE(r.valid);
  EXPECT_EQ(r.triangles, 3);
}

TEST(ValidateLengthVector, InputErrors) {
  EXPECT_THROW(validate_length_vector(std::vector<int>{}), InputError);
  EXPECT_THROW(validate_length_vector(std::vector<int>{4, 0}), InputError);
  EXPECT_THROW(validate_length_vector(std::vector<int>{-3}), InputError);
}

TEST(LengthVector, ConstructorThrowsWithViolations) {
  try {
    LengthVector v({3, 3, 3});
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.violations().size(), 1u);
    EXPECT_NE(std::string(e.what()).find("internal segment"), std::string::npos);
  }
}

TEST(LengthVector, Parse) {
  EXPECT_EQ(LengthVector::parse("3, 4,3"), LengthVector({3, 4, 3}));
  EXPECT_EQ(LengthVector::parse("12").triangles(), 12);
  EXPECT_THROW(LengthVector::parse("3,,4"), InputError);
  EXPECT_THROW(LengthVector::parse("x"), InputError);
  EXPECT_THROW(LengthVector::parse(""), InputError);
  EXPECT_THROW(LengthVector::parse("3,4,"), InputError);
  EXPECT_THROW(LengthVector::parse("3,3,3"), ValidationError);
}

TEST(LengthVector, TriangleCountUsesTwoTriangleOverlap) {
  EXPECT_EQ(LengthVector({6, 5, 4, 3}).triangles(), 12);
  EXPECT_EQ(LengthVector({3, 4, 3}).triangles(), 6);
  EXPECT_EQ(LengthVector({3, 3}).triangles(), 4);
}

TEST(TurnSequence, FromLengthVector) {
  EXPECT_TRUE(turns_from_length_vector(LengthVector({9})).steps().empty());
  EXPECT_EQ(turns_from_length_vector(LengthVector({3, 4, 3})).steps(), (std::vector<int>{4, 6}));
  const auto t = turns_from_length_vector(LengthVector({6, 5, 4, 3}));
  EXPECT_EQ(t.steps(), (std::vector<int>{7, 10, 12}));
  EXPECT_EQ(t.triangles(), 12);
}

TEST(TurnSequence, ToLengthVector) {
  EXPECT_EQ(length_vector_from_turns(TurnSequence(9, {})), LengthVector({9}));
  EXPECT_EQ(length_vector_from_turns(TurnSequence(6, {4, 6})), LengthVector({3, 4, 3}));
  EXPECT_EQ(length_vector_from_turns(TurnSequence(12, {7, 10, 12})),
            LengthVector({6, 5, 4, 3}));
}

TEST(TurnSequence, EncodingErrors) {
  EXPECT_THROW(TurnSequence(8, {4, 5}), EncodingError);   // gap 1
  EXPECT_THROW(TurnSequence(8, {3, 6}), EncodingError);   // step below 4
  EXPECT_THROW(TurnSequence(8, {4, 9}), EncodingError);   // beyond n
  EXPECT_THROW(TurnSequence(8, {6, 4}), EncodingError);   // not increasing
  EXPECT_THROW(TurnSequence(3, {}), EncodingError);
}

TEST(BuildChainGraph, LinearFourTriangles) {
  const auto g = build_chain_graph(TurnSequence(4, {}));
  EXPECT_EQ(std::vector<int>(g.degrees().begin(), g.degrees().end()),
            (std::vector<int>{2, 3, 4, 4, 3, 2}));
  EXPECT_EQ(g.vertex_count(), 6);
  EXPECT_EQ(g.edges().size(), 9u);
  EXPECT_TRUE(g.in_family());
}

TEST(BuildChainGraph, ZigzagSix) {
  const auto g = build_chain_graph(TurnSequence(6, {4, 6}));
  EXPECT_EQ(sorted_degrees(g), (std::vector<int>{2, 2, 3, 3, 3, 3, 5, 5}));
}

TEST(BuildChainGraph, ZigzagFour) {
  const auto g = build_chain_graph(TurnSequence(4, {4}));
  EXPECT_EQ(sorted_degrees(g), (std::vector<int>{2, 2, 3, 3, 3, 5}));
}

TEST(BuildChainGraph, AdjacentTurnsLeaveTheFamily) {
  const std::vector<int> steps{4, 5};
  const auto raw = assemble_chain(6, steps);
  EXPECT_EQ(raw.max_degree(), 6);
  EXPECT_FALSE(raw.in_family());
  try {
    build_chain_graph(6, steps);
    FAIL() << "expected NotInFamilyError";
  } catch (const NotInFamilyError& e) {
    EXPECT_EQ(e.degree(), 6);
    EXPECT_EQ(raw.degree(e.vertex()), 6);
  }
}

TEST(BuildChainGraph, ConsecutiveTrianglesShareOneEdge) {
  const auto g = build_chain_graph(LengthVector({6, 5, 4, 3}));
  const auto tris = g.triangles();
  ASSERT_EQ(tris.size(), 12u);
  for (std::size_t i = 1; i < tris.size(); ++i) {
    int shared = 0;
    for (int a : tris[i - 1]) shared += static_cast<int>(std::count(tris[i].begin(), tris[i].end(), a));
    EXPECT_EQ(shared, 2) << "triangles " << i << " and " << i + 1;
  }
}

TEST(EdgeTypeCounts, LinearFour) {
  const auto e = edge_type_counts_direct(build_chain_graph(LengthVector({4})));
  EXPECT_EQ(e.at(2, 3), 2);
  EXPECT_EQ(e.at(2, 4), 2);
  EXPECT_EQ(e.at(3, 4), 4);
  EXPECT_EQ(e.at(4, 4), 1);
  EXPECT_EQ(e.total(), 9);
  EXPECT_EQ(e.vertices, (VertexCensus{{2, 2, 2, 0}}));
}

TEST(EdgeTypeCounts, ZigzagSix) {
  const auto e = edge_type_counts_direct(build_chain_graph(LengthVector({3, 4, 3})));
  EdgeTypeVector want;
  want.counts[static_cast<std::size_t>(degree_pair_slot(2, 3))] = 2;
  want.counts[static_cast<std::size_t>(degree_pair_slot(2, 5))] = 2;
  want.counts[static_cast<std::size_t>(degree_pair_slot(3, 3))] = 2;
  want.counts[static_cast<std::size_t>(degree_pair_slot(3, 5))] = 6;
  want.counts[static_cast<std::size_t>(degree_pair_slot(5, 5))] = 1;
  want.vertices = VertexCensus{{2, 4, 0, 2}};
  EXPECT_EQ(e, want);
  EXPECT_EQ(e.total(), 13);
}

TEST(EdgeTypeCounts, ZigzagFour) {
  const auto e = edge_type_counts_direct(build_chain_graph(LengthVector({3, 3})));
  EXPECT_EQ(e.at(2, 3), 2);
  EXPECT_EQ(e.at(2, 5), 2);
  EXPECT_EQ(e.at(3, 3), 2);
  EXPECT_EQ(e.at(5, 3), 3);
  EXPECT_EQ(e.total(), 9);
}

TEST(DegreePairs, SlotsRoundTrip) {
  for (int slot = 0; slot < kDegreePairCount; ++slot) {
    const auto [a, b] = degree_pair(slot);
    EXPECT_LE(a, b);
    EXPECT_EQ(degree_pair_slot(a, b), slot);
    EXPECT_EQ(degree_pair_slot(b, a), slot);
  }
  EXPECT_THROW(degree_pair_slot(1, 3), DomainError);
  EXPECT_THROW(degree_pair_slot(2, 6), DomainError);
  EXPECT_THROW(degree_pair(10), DomainError);
}

TEST(Canonicalize, Examples) {
  EXPECT_EQ(canonicalize(LengthVector({4, 3})), LengthVector({3, 4}));
  EXPECT_EQ(canonicalize(LengthVector({3, 4, 3})), LengthVector({3, 4, 3}));
  EXPECT_EQ(canonicalize(LengthVector({3, 5, 4, 3})), LengthVector({3, 4, 5, 3}));
}

TEST(SegmentProfile, Indicators) {
  const auto p = segment_profile(LengthVector({3, 4, 5, 6, 3}));
  EXPECT_EQ(p.eta, (std::vector<int>{1, 0, 0, 0, 1}));
  EXPECT_EQ(p.xi, (std::vector<int>{0, 1, 0, 0, 0}));
  EXPECT_EQ(p.sigma, (std::vector<int>{0, 0, 1, 0, 0}));
}

TEST(Dot, LinearFour) {
  const auto dot = to_dot(build_chain_graph(LengthVector({4})));
  EXPECT_EQ(dot.rfind("graph chain {\n", 0), 0u);
  EXPECT_NE(dot.find("  v1 [label=\"v1 (2)\", degree=2];"), std::string::npos);
  EXPECT_NE(dot.find("  v3 [label=\"v3 (4)\", degree=4];"), std::string::npos);
  EXPECT_NE(dot.find("  v6 [label=\"v6 (2)\", degree=2];"), std::string::npos);
  EXPECT_EQ(std::count(dot.begin(), dot.end(), '-'), 2 * 9);
  EXPECT_EQ(dot.back(), '\n');
}

}  // namespace
}  // namespace trichain
