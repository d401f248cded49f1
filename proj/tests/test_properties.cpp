// Exhaustive and randomized property checks over the whole family.

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "oracles.hpp"
#include "trichain/bid_catalog.hpp"
#include "trichain/chain_model.hpp"
#include "trichain/closed_form.hpp"
#include "trichain/extremal.hpp"

namespace trichain {
namespace {

constexpr int kMaxN = 18;

template <typename F>
void for_each_chain(int max_n, F&& f) {
  for (int n = 4; n <= max_n; ++n) {
    for (const auto& v : enumerate_length_vectors(n)) f(v);
  }
}

TEST(Properties, TurnRoundTrip) {
  for_each_chain(kMaxN, [](const LengthVector& v) {
    EXPECT_EQ(length_vector_from_turns(turns_from_length_vector(v)), v);
    const auto r = v.reversed();
    EXPECT_EQ(length_vector_from_turns(turns_from_length_vector(r)), r);
  });
  for (int n = 4; n <= 14; ++n) {
    for (const auto& steps : oracle::gap_two_subsets(n)) {
      const TurnSequence t(n, steps);
      EXPECT_EQ(turns_from_length_vector(length_vector_from_turns(t)), t);
    }
  }
}

TEST(Properties, ReversalMirrorsTurnSteps) {
  for_each_chain(14, [](const LengthVector& v) {
    const auto n = v.triangles();
    std::vector<int> mirrored;
    const auto turns = turns_from_length_vector(v);
    for (int k : turns.steps()) mirrored.push_back(n + 4 - k);
    std::sort(mirrored.begin(), mirrored.end());
    EXPECT_EQ(turns_from_length_vector(v.reversed()).steps(), mirrored) << v.to_string();
  });
}

TEST(Properties, GraphShape) {
  for_each_chain(kMaxN, [](const LengthVector& v) {
    const auto g = build_chain_graph(v);
    const int n = v.triangles();
    EXPECT_EQ(g.vertex_count(), n + 2);
    EXPECT_EQ(static_cast<int>(g.edges().size()), 2 * n + 1);
    EXPECT_EQ(std::count(g.degrees().begin(), g.degrees().end(), 2), 2);
    EXPECT_LE(g.max_degree(), v.segments() == 1 ? 4 : 5);
    int degree_sum = 0;
    for (int d : g.degrees()) degree_sum += d;
    EXPECT_EQ(degree_sum, 2 * static_cast<int>(g.edges().size()));
    const auto e = edge_type_counts_direct(g);
    EXPECT_TRUE(oracle::degree_sum_system_holds(e)) << v.to_string();
    EXPECT_EQ(e.at(2, 2), 0);
  });
}

TEST(Properties, CensusFromTrianglesAgrees) {
  for_each_chain(kMaxN, [](const LengthVector& v) {
    const auto g = build_chain_graph(v);
    const auto e = edge_type_counts_direct(g);
    const auto census = oracle::census_from_triangles(g);
    for (int slot = 0; slot < kDegreePairCount; ++slot) {
      const auto it = census.find(degree_pair(slot));
      const int want = it == census.end() ? 0 : it->second;
      EXPECT_EQ(e.counts[static_cast<std::size_t>(slot)], want) << v.to_string();
    }
  });
}

TEST(Properties, ClosedCensusEqualsDirect) {
  int checked = 0;
  for_each_chain(kMaxN, [&](const LengthVector& v) {
    if (v.segments() < 3) return;
    const auto direct = edge_type_counts_direct(build_chain_graph(v));
    EXPECT_EQ(closed_edge_counts(v), direct) << v.to_string();
    EXPECT_EQ(closed_vertex_counts(v), direct.vertices);
    ++checked;
  });
  EXPECT_GT(checked, 1000);
}

TEST(Properties, ClosedFormEqualsDirectForCatalog) {
  for_each_chain(kMaxN, [](const LengthVector& v) {
    const auto g = build_chain_graph(v);
    for (const auto& idx : catalog()) {
      if (idx.integer_valued()) {
        EXPECT_EQ(ti_closed_form_exact(v, idx), direct_bid_index_exact(g, idx))
            << idx.name() << " " << v.to_string();
      } else {
        EXPECT_TRUE(nearly_equal(ti_closed_form(v, idx), direct_bid_index(g, idx)))
            << idx.name() << " " << v.to_string();
      }
    }
  });
}

TEST(Properties, ReversalInvariance) {
  for_each_chain(kMaxN, [](const LengthVector& v) {
    const auto r = v.reversed();
    EXPECT_EQ(edge_type_counts_direct(build_chain_graph(v)),
              edge_type_counts_direct(build_chain_graph(r)))
        << v.to_string();
    for (const auto& idx : catalog()) {
      EXPECT_TRUE(nearly_equal(ti_closed_form(v, idx), ti_closed_form(r, idx))) << idx.name();
    }
  });
}

TEST(Properties, ShiftIdentity) {
  for_each_chain(kMaxN, [](const LengthVector& v) {
    for (const auto& idx : catalog()) {
      const auto l0 = compute_lambdas(idx, v.triangles()).lambda0;
      const auto p = phi(v, idx);
      EXPECT_TRUE(nearly_equal(ti_closed_form(v, idx) - p.total, l0)) << idx.name();
      EXPECT_EQ(static_cast<int>(p.per_segment.size()), v.segments());
    }
  });
}

TEST(Properties, CanonicalizeIdempotent) {
  for_each_chain(14, [](const LengthVector& v) {
    const auto r = v.reversed();
    EXPECT_EQ(canonicalize(r), v);
    EXPECT_EQ(canonicalize(canonicalize(r)), canonicalize(r));
  });
}

// Any subset of turn steps: the chain stays in the family iff no two steps are adjacent.
TEST(Properties, FamilyMembershipIsTheGapRule) {
  for (int n = 4; n <= 14; ++n) {
    const int width = n - 3;
    for (std::uint32_t mask = 0; mask < (1u << width); ++mask) {
      std::vector<int> steps;
      for (int b = 0; b < width; ++b) {
        if (mask & (1u << b)) steps.push_back(4 + b);
      }
      const bool gaps_ok = (mask & (mask >> 1)) == 0;
      EXPECT_EQ(assemble_chain(n, steps).in_family(), gaps_ok) << "n=" << n << " mask=" << mask;
    }
  }
}

// Every positive sequence with the right triangle count is valid iff its
// canonical form is enumerated.
TEST(Properties, RawCompositionSweep) {
  for (int n = 4; n <= 14; ++n) {
    const auto listed = enumerate_length_vectors(n);
    const std::set<LengthVector> family(listed.begin(), listed.end());
    std::set<LengthVector> seen;
    oracle::for_each_raw_composition(n, [&](const std::vector<int>& entries) {
      const auto report = validate_length_vector(entries);
      ASSERT_EQ(report.triangles, n);
      if (report.valid) {
        const LengthVector v(entries);
        EXPECT_TRUE(family.count(canonicalize(v))) << v.to_string();
        EXPECT_TRUE(build_chain_graph(v).in_family());
        seen.insert(canonicalize(v));
      }
    });
    EXPECT_EQ(seen, family) << n;
  }
}

TEST(Properties, RandomThetaTables) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> weight(-50.0, 50.0);
  std::vector<LengthVector> sample;
  for_each_chain(16, [&](const LengthVector& v) { sample.push_back(v); });
  for (int trial = 0; trial < 40; ++trial) {
    ThetaTable t{};
    for (auto& w : t) w = weight(rng);
    const IndexDescriptor idx("random", t);
    for (const auto& v : sample) {
      const double direct = direct_bid_index(build_chain_graph(v), idx);
      EXPECT_NEAR(ti_closed_form(v, idx), direct, 1e-9 * std::max(1.0, std::abs(direct)))
          << v.to_string();
    }
  }
}

}  // namespace
}  // namespace trichain
