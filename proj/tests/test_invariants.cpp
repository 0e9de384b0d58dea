#include <gtest/gtest.h>

#include <algorithm>
#include <climits>
#include <random>

#include "normality/constructions.hpp"
#include "normality/enumeration.hpp"
#include "normality/invariants.hpp"
#include "support.hpp"

using namespace normality;

namespace {

using Set = std::vector<Vertex>;

// Definitional oracle straight from the distance matrix.
void expect_profile_consistent(const Graph& g, const InvariantProfile& p) {
  const DistanceMatrix d(g);
  const std::size_t n = g.order();
  std::int64_t es = 0, ns = 0, ls = 0;
  int diam = 0, rad = INT_MAX;
  for (std::size_t v = 0; v < n; ++v) {
    int e = 0;
    for (std::size_t u = 0; u < n; ++u) e = std::max(e, d(v, u));
    ASSERT_EQ(p.ecc[v], e);
    diam = std::max(diam, e);
    rad = std::min(rad, e);
  }
  ASSERT_EQ(p.diameter, diam);
  ASSERT_EQ(p.radius, rad);
  Set periphery, center;
  for (std::size_t v = 0; v < n; ++v) {
    if (p.ecc[v] == diam) periphery.push_back(static_cast<Vertex>(v));
    if (p.ecc[v] == rad) center.push_back(static_cast<Vertex>(v));
  }
  ASSERT_EQ(p.periphery, periphery);
  ASSERT_EQ(p.center, center);
  int max_norm = 0;
  for (std::size_t v = 0; v < n; ++v) {
    int nv = INT_MAX;
    for (Vertex u : periphery) nv = std::min(nv, d(v, u));
    ASSERT_EQ(p.norm[v], nv);
    ASSERT_EQ(p.lambda[v], p.ecc[v] - nv);
    ASSERT_GE(p.lambda[v], 0);
    ASSERT_EQ(nv == 0, std::binary_search(periphery.begin(), periphery.end(), static_cast<Vertex>(v)));
    max_norm = std::max(max_norm, nv);
    es += p.ecc[v];
    ns += nv;
    ls += p.lambda[v];
  }
  Set ncenter;
  for (std::size_t v = 0; v < n; ++v)
    if (p.norm[v] == max_norm) ncenter.push_back(static_cast<Vertex>(v));
  ASSERT_EQ(p.normality_center, ncenter);
  ASSERT_EQ(p.ecc_sum, es);
  ASSERT_EQ(p.norm_sum, ns);
  ASSERT_EQ(p.lambda_sum, ls);
}

}  // namespace

TEST(Profile, Fig2Tree) {
  const auto p = profile(fixture("fig2_tree"));
  EXPECT_EQ(p.periphery, (Set{0, 3, 4}));
  EXPECT_EQ(p.norm_sum, 2);
}

TEST(Profile, Fig2PlusEdge) {
  const auto p = profile(fixture("fig2_plus_edge"));
  EXPECT_EQ(p.periphery, (Set{0, 3}));
  EXPECT_EQ(p.norm_sum, 3);
}

TEST(Profile, Fig3CentersDiffer) {
  const auto p = profile(fixture("fig3"));
  EXPECT_EQ(p.periphery, (Set{0, 1, 2, 3}));
  EXPECT_EQ(p.normality_center, (Set{4, 5, 6, 7}));
  EXPECT_EQ(p.center, (Set{8, 9}));
}

TEST(Profile, SingleVertexConvention) {
  const auto p = profile(Graph(1));
  EXPECT_EQ(p.ecc, (std::vector<int>{0}));
  EXPECT_EQ(p.norm, (std::vector<int>{0}));
  EXPECT_EQ(p.lambda, (std::vector<int>{0}));
  EXPECT_EQ(p.periphery, (Set{0}));
  EXPECT_EQ(p.center, (Set{0}));
  EXPECT_EQ(p.normality_center, (Set{0}));
  EXPECT_EQ(p.diameter, 0);
}

TEST(Profile, DisconnectedIsAnError) { EXPECT_THROW(profile(Graph(3)), DisconnectedGraph); }

TEST(Profile, MatchesDefinitionOnRandomGraphs) {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 14);
    const Graph g = gen::random_connected(n, static_cast<int>(rng() % 4), rng);
    expect_profile_consistent(g, profile(g));
  }
}

TEST(Profile, InvariantUnderRelabeling) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 12);
    const Graph g = gen::random_connected(n, static_cast<int>(rng() % 3), rng);
    const auto perm = gen::random_permutation(g.order(), rng);
    const auto a = profile(g);
    const auto b = profile(gen::relabel(g, perm));
    EXPECT_EQ(a.norm_sum, b.norm_sum);
    EXPECT_EQ(a.ecc_sum, b.ecc_sum);
    EXPECT_EQ(a.lambda_sum, b.lambda_sum);
    for (int v = 0; v < n; ++v) {
      EXPECT_EQ(a.ecc[v], b.ecc[perm[v]]);
      EXPECT_EQ(a.norm[v], b.norm[perm[v]]);
    }
  }
}

TEST(Profile, CompleteGraphsAndCyclesHaveZeroNorm) {
  for (int n = 1; n <= 9; ++n) {
    const auto p = profile(gen::complete_graph(n));
    EXPECT_EQ(p.norm_sum, 0);
    EXPECT_EQ(p.periphery.size(), static_cast<std::size_t>(n));
  }
  for (int n = 3; n <= 12; ++n) {
    const auto p = profile(gen::cycle_graph(n));
    EXPECT_EQ(p.norm_sum, 0);
    EXPECT_EQ(p.periphery.size(), static_cast<std::size_t>(n));
  }
}

TEST(Profile, ZeroNormIffWholeVertexSetIsPeripheral) {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 10);
    const auto p = profile(gen::random_connected(n, static_cast<int>(rng() % 8), rng));
    EXPECT_GE(p.norm_sum, 0);
    EXPECT_EQ(p.norm_sum == 0, p.periphery.size() == static_cast<std::size_t>(n));
  }
}

TEST(EccViaPeriphery, Fig1DiffersAtV3) {
  const Graph g = fixture("fig1");
  EXPECT_EQ(ecc_via_periphery(g)[2], 2);
  EXPECT_EQ(profile(g).ecc[2], 3);
  EXPECT_EQ(profile(g).periphery, (Set{0, 4}));
}

TEST(EccViaPeriphery, SingleVertex) { EXPECT_EQ(ecc_via_periphery(Graph(1)), (std::vector<int>{0})); }

TEST(EccViaPeriphery, EqualsEccOnAllTreesUpTo11) {
  for (int n = 1; n <= 11; ++n)
    free_trees(n).for_each([&](const CanonicalCode& c, const Graph& t) {
      EXPECT_EQ(ecc_via_periphery(t), profile(t).ecc) << c.str();
      EXPECT_TRUE(check_two_endpoint_property(t)) << c.str();
    });
}

TEST(TwoEndpointProperty, Examples) {
  EXPECT_TRUE(check_two_endpoint_property(path(5)));
  EXPECT_EQ(diametral_pair(path(5)), (Edge{4, 0}));
  EXPECT_TRUE(check_two_endpoint_property(star(6)));
  EXPECT_THROW(check_two_endpoint_property(fixture("fig1")), NotATree);
}

TEST(LambdaLocation, PathExamples) {
  const auto p5 = profile(path(5));
  EXPECT_EQ(lambda_argmax(p5), (Set{0, 4}));
  EXPECT_EQ(lambda_argmin(p5), (Set{2}));
  EXPECT_EQ(p5.lambda[2], 0);
  const auto p6 = profile(path(6));
  EXPECT_EQ(*std::min_element(p6.lambda.begin(), p6.lambda.end()), 1);
  EXPECT_TRUE(lambda_location_check(path(5)));
  EXPECT_TRUE(lambda_location_check(path(6)));
  EXPECT_THROW(lambda_location_check(fixture("fig1")), NotATree);
}

TEST(LambdaLocation, THatCometVerticesMinimizeLambda) {
  for (int n = 6; n <= 16; ++n)
    for (int d = 4; d < n; ++d) {
      const Graph t = t_hat(n, d);
      const auto p = profile(t);
      const auto argmin = lambda_argmin(p);
      for (Vertex v = d + 1; v < n; ++v)
        EXPECT_TRUE(std::binary_search(argmin.begin(), argmin.end(), v)) << "n=" << n << " d=" << d << " v=" << v;
    }
}

TEST(LambdaLocation, HoldsOnRandomTrees) {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 500; ++trial) {
    const Graph t = gen::random_tree(1 + static_cast<int>(rng() % 30), rng);
    EXPECT_TRUE(lambda_location_check(t));
  }
}

TEST(Profile, StarIsTheOnlyTreeWithNormSumOne) {
  for (int n = 3; n <= 11; ++n) {
    const CanonicalCode star_code = canonical_code(star(n));
    free_trees(n).for_each([&](const CanonicalCode& c, const Graph& t) {
      const auto s = profile(t).norm_sum;
      EXPECT_GE(s, 1);
      EXPECT_EQ(s == 1, c == star_code) << c.str();
    });
  }
}

// Adjacent vertices of a tree differ in eccentricity by exactly one, except
// across the central edge of a tree with two centers.
TEST(Eccentricity, AdjacentVerticesDifferByAtMostOne) {
  std::mt19937 rng(2718);
  for (int trial = 0; trial < 400; ++trial) {
    const Graph t = gen::random_tree(2 + static_cast<int>(rng() % 25), rng);
    const auto p = profile(t);
    for (const Edge& e : t.edges()) {
      const int diff = std::abs(p.ecc[e.u] - p.ecc[e.v]);
      const bool central_edge = p.center == Set{std::min(e.u, e.v), std::max(e.u, e.v)};
      EXPECT_EQ(diff, central_edge ? 0 : 1);
    }
  }
}
