#include <gtest/gtest.h>

#include "pathlattice/fixtures.hpp"
#include "pathlattice/flow.hpp"
#include "pathlattice/verify.hpp"

namespace pathlattice {
namespace {

GraphDescription single_edge(long long cap) {
  GraphDescription d;
  d.vertex_count = 2;
  d.edges = {{0, 1}};
  d.rotation = {{forward_dart(0)}, {backward_dart(0)}};
  d.source = 0;
  d.sink = 1;
  d.outer_dart = forward_dart(0);
  d.edge_cap = {cap};
  return d;
}

TEST(FlowTest, SingleEdge) {
  GraphDescription d = single_edge(7);
  PlaneGraph g = PlaneGraph::build(d);
  CapacityMap cap = CapacityMap::from_description(d);
  UppermostFlowResult r = maxflow_uppermost(g, cap);
  EXPECT_EQ(r.flow.value, 7);
  ASSERT_EQ(r.packing.entries.size(), 1u);
  EXPECT_EQ(r.packing.entries[0].second, 7);
  EXPECT_EQ(r.cut.side, (std::vector<Vertex>{0}));
  EXPECT_EQ(maxflow_dual_sp(g, cap).value, 7);
  EXPECT_EQ(maxflow_generic(g, cap).value, 7);
}

TEST(FlowTest, DiamondUnitCaps) {
  GraphDescription d = diamond_description();
  PlaneGraph g = PlaneGraph::build(d);
  CapacityMap cap = CapacityMap::from_description(d);
  UppermostFlowResult r = maxflow_uppermost(g, cap);
  EXPECT_EQ(r.flow.value, 2);
  EXPECT_EQ(r.cut.darts.size(), 2u);
  EXPECT_EQ(cut_capacity(cap, r.cut), 2);
  EXPECT_EQ(r.packing.packed_value(), 2);
  EXPECT_TRUE(r.packing.feasible(cap));
  EXPECT_LE(r.augmentations, g.edge_count());
  EXPECT_EQ(maxflow_dual_sp(g, cap).value, 2);
  EXPECT_EQ(maxflow_generic(g, cap).value, 2);
}

TEST(FlowTest, GridUnitCaps) {
  GraphDescription d = grid_description(3, 3);
  PlaneGraph g = PlaneGraph::build(d);
  CapacityMap cap = CapacityMap::from_description(d);
  EXPECT_EQ(maxflow_uppermost(g, cap).flow.value, 2);  // corner degree bounds the cut
  EXPECT_EQ(maxflow_dual_sp(g, cap).value, 2);
  EXPECT_EQ(maxflow_generic(g, cap).value, 2);
}

TEST(FlowTest, GenericWorksOffTheOuterFace) {
  GraphDescription d = k33st_description();
  PlaneGraph g = PlaneGraph::build(d);
  CapacityMap cap = CapacityMap::from_description(d);
  EXPECT_EQ(maxflow_generic(g, cap).value, 2);
  try {
    maxflow_uppermost(g, cap);
    FAIL() << "expected NotStPlanarEmbedding";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), errc::not_st_planar_embedding);
  }
}

TEST(FlowTest, DualSpFlowIsFeasibleAndConserved) {
  GraphDescription d = grid_description(4, 3);
  for (EdgeId e = 0; e < static_cast<int>(d.edges.size()); ++e)
    d.edge_cap.push_back(1 + (7 * e) % 9);
  PlaneGraph g = PlaneGraph::build(d);
  CapacityMap cap = CapacityMap::from_description(d);
  FlowState f = maxflow_dual_sp(g, cap);
  for (Dart dd = 0; dd < g.dart_count(); ++dd) {
    EXPECT_GE(f.flow[dd], 0);
    EXPECT_LE(f.flow[dd], cap[dd] + f.flow[reverse(dd)]);
  }
  std::vector<long long> net(g.vertex_count(), 0);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    long long x = f.flow[forward_dart(e)] - f.flow[backward_dart(e)];
    net[g.edges()[e].first] += x;
    net[g.edges()[e].second] -= x;
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (v == g.source() || v == g.sink()) continue;
    EXPECT_EQ(net[v], 0) << "conservation at " << v;
  }
  EXPECT_EQ(net[g.source()], f.value);
  EXPECT_EQ(f.value, maxflow_generic(g, cap).value);
}

TEST(FlowTest, RandomInstanceAgreement) {
  std::mt19937 rng(20230815);
  std::uniform_int_distribution<long long> cap_dist(1, 9);
  for (int i = 0; i < 25; ++i) {
    Subgraph sub = random_grid_subgraph(4, 3, 1000 + i);
    GraphDescription d;  // rebuild with random capacities
    const PlaneGraph& g = sub.graph;
    CapacityMap cap(g.dart_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) cap[forward_dart(e)] = cap_dist(rng);
    UppermostFlowResult up = maxflow_uppermost(g, cap);
    EXPECT_EQ(up.flow.value, maxflow_generic(g, cap).value);
    EXPECT_EQ(up.flow.value, maxflow_dual_sp(g, cap).value);
    EXPECT_EQ(up.flow.value, cut_capacity(cap, up.cut));
    EXPECT_LE(up.augmentations, g.edge_count());
    // The augmenting-path sequence is nonincreasing in the path order.
    for (std::size_t k = 1; k < up.packing.entries.size(); ++k)
      EXPECT_TRUE(left_of_or_equal(g, up.packing.entries[k - 1].first,
                                   up.packing.entries[k].first));
  }
}

TEST(FlowTest, MincutExtractRejectsNonMaximumFlow) {
  GraphDescription d = diamond_description();
  PlaneGraph g = PlaneGraph::build(d);
  CapacityMap cap = CapacityMap::from_description(d);
  FlowState zero(g.dart_count());
  try {
    mincut_extract(g, cap, zero);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), errc::residual_path_exists);
  }
}

TEST(FlowTest, NegativeCapacityRejected) {
  GraphDescription d = single_edge(1);
  PlaneGraph g = PlaneGraph::build(d);
  CapacityMap cap = CapacityMap::from_description(d);
  cap[forward_dart(0)] = -1;
  EXPECT_THROW(maxflow_uppermost(g, cap), Error);
  try {
    maxflow_dual_sp(g, cap);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), errc::negative_capacity);
  }
}

TEST(PackingTest, UnitWeightsEqualMaxFlow) {
  GraphDescription d = diamond_description();
  PlaneGraph g = PlaneGraph::build(d);
  CapacityMap cap = CapacityMap::from_description(d);
  auto one = [](const PathSeq&) -> long long { return 1; };
  PathPacking packing = weighted_packing(g, cap, one);
  EXPECT_EQ(packing.objective(one), 2);
  EXPECT_TRUE(packing.feasible(cap));
  EXPECT_EQ(packing_oracle(g, cap, one), 2);
}

TEST(PackingTest, SinglePathScaledWeight) {
  GraphDescription d = single_edge(3);
  PlaneGraph g = PlaneGraph::build(d);
  CapacityMap cap = CapacityMap::from_description(d);
  auto five = [](const PathSeq&) -> long long { return 5; };
  EXPECT_EQ(weighted_packing(g, cap, five).objective(five), 15);
  EXPECT_EQ(packing_oracle(g, cap, five), 15);
}

TEST(PackingTest, LatticeHeightWeightsMatchOracle) {
  GraphDescription d = diamond_description();
  PlaneGraph g = PlaneGraph::build(d);
  CapacityMap cap = CapacityMap::from_description(d);
  // Height in the diamond lattice: lowermost 0, middle 1, uppermost 2.
  // Monotone nondecreasing along the order and supermodular.
  auto height = [&](const PathSeq& p) -> long long {
    if (p == uppermost_path(g)) return 2;
    if (p == lowermost_path(g)) return 0;
    return 1;
  };
  PathFamily fam = full_family(g);
  EXPECT_TRUE(check_supermodular(g, fam, height));
  EXPECT_EQ(weighted_packing(g, cap, height).objective(height),
            packing_oracle(g, cap, height));
}

TEST(PackingTest, Guards) {
  GraphDescription d = single_edge(100);
  PlaneGraph g = PlaneGraph::build(d);
  CapacityMap cap = CapacityMap::from_description(d);
  auto one = [](const PathSeq&) -> long long { return 1; };
  try {
    packing_oracle(g, cap, one);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), errc::instance_too_large);
  }
  auto neg = [](const PathSeq&) -> long long { return -1; };
  try {
    weighted_packing(g, cap, neg);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), errc::negative_weight);
  }
}

TEST(PackingTest, UndirectedCapacitiesCoverBothDarts) {
  GraphDescription d = diamond_description();
  d.undirected = true;
  d.edge_cap.assign(5, 1);
  PlaneGraph g = PlaneGraph::build(d);
  CapacityMap cap = CapacityMap::from_description(d);
  EXPECT_EQ(cap[backward_dart(4)], 1);
  // Both chord directions usable: value still bounded by the degree-2 cut at s.
  EXPECT_EQ(maxflow_uppermost(g, cap).flow.value, 2);
}

}  // namespace
}  // namespace pathlattice
