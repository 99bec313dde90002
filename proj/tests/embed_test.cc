#include <gtest/gtest.h>

#include <sstream>

#include "pathlattice/fixtures.hpp"
#include "pathlattice/graph_io.hpp"
#include "pathlattice/plane_graph.hpp"

namespace pathlattice {
namespace {

TEST(DartTest, EncodingRoundTrip) {
  EXPECT_EQ(forward_dart(3), 6);
  EXPECT_EQ(backward_dart(3), 7);
  EXPECT_EQ(reverse(6), 7);
  EXPECT_EQ(reverse(7), 6);
  EXPECT_EQ(edge_of(7), 3);
  EXPECT_TRUE(is_forward(6));
  EXPECT_FALSE(is_forward(7));
  EXPECT_EQ(dart_token(6), "+3");
  EXPECT_EQ(dart_token(7), "-3");
  EXPECT_EQ(parse_dart_token("+3"), 6);
  EXPECT_EQ(parse_dart_token("-3"), 7);
  EXPECT_THROW(parse_dart_token("3"), Error);
  EXPECT_THROW(parse_dart_token("+x"), Error);
  EXPECT_THROW(parse_dart_token("+3x"), Error);
}

TEST(PlaneGraphTest, DiamondFaces) {
  PlaneGraph g = PlaneGraph::build(diamond_description());
  EXPECT_EQ(g.vertex_count(), 4);
  EXPECT_EQ(g.edge_count(), 5);
  ASSERT_EQ(g.face_count(), 3);
  EXPECT_EQ(g.infinite_face(), g.left_face(forward_dart(0)));
  std::vector<Dart> outer = {forward_dart(0), forward_dart(2), backward_dart(3),
                             backward_dart(1)};
  EXPECT_EQ(g.face(g.infinite_face()).boundary, outer);
  // Every dart's left face matches the orbit it appears in.
  for (const Face& f : g.faces())
    for (Dart d : f.boundary) {
      EXPECT_EQ(g.left_face(d), f.id);
      EXPECT_EQ(g.right_face(reverse(d)), f.id);
    }
  EXPECT_TRUE(g.vertex_on_face(g.sink(), g.infinite_face()));
}

TEST(PlaneGraphTest, RotationAccessors) {
  PlaneGraph g = PlaneGraph::build(diamond_description());
  // rot 1: -0 +4 +2 counterclockwise.
  EXPECT_EQ(g.next_ccw(backward_dart(0)), forward_dart(4));
  EXPECT_EQ(g.next_ccw(forward_dart(2)), backward_dart(0));
  EXPECT_EQ(g.prev_ccw(backward_dart(0)), forward_dart(2));
  EXPECT_EQ(g.tail(forward_dart(4)), 1);
  EXPECT_EQ(g.head(forward_dart(4)), 2);
  EXPECT_EQ(g.tail(backward_dart(4)), 2);
}

TEST(PlaneGraphTest, EulerCountsOnFixtures) {
  for (const GraphDescription& desc :
       {diamond_description(), lens_chain_description(), k33st_description(), k5st_description(),
        grid_description(4, 4), fan_description(5), ladder_description(6)}) {
    PlaneGraph g = PlaneGraph::build(desc);
    EXPECT_EQ(g.vertex_count() - g.edge_count() + g.face_count(), 2);
    // Handshake over face boundaries: every dart on exactly one boundary.
    int total = 0;
    for (const Face& f : g.faces()) total += static_cast<int>(f.boundary.size());
    EXPECT_EQ(total, g.dart_count());
  }
}

TEST(PlaneGraphTest, FixtureFaceCounts) {
  EXPECT_EQ(PlaneGraph::build(lens_chain_description()).face_count(), 4);
  EXPECT_EQ(PlaneGraph::build(k33st_description()).face_count(), 4);
  EXPECT_EQ(PlaneGraph::build(k5st_description()).face_count(), 6);
  EXPECT_EQ(PlaneGraph::build(grid_description(3, 3)).face_count(), 5);
}

TEST(PlaneGraphTest, MissingRotationEntry) {
  GraphDescription d = diamond_description();
  d.rotation[1] = {backward_dart(0), forward_dart(2)};  // +4 missing
  try {
    PlaneGraph::build(d);
    FAIL() << "expected MissingRotationEntry";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), errc::missing_rotation_entry);
  }
}

TEST(PlaneGraphTest, DisconnectedGraph) {
  GraphDescription d;
  d.vertex_count = 4;
  d.edges = {{0, 1}, {2, 3}};
  d.rotation = {{forward_dart(0)}, {backward_dart(0)}, {forward_dart(1)}, {backward_dart(1)}};
  d.source = 0;
  d.sink = 1;
  d.outer_dart = forward_dart(0);
  try {
    PlaneGraph::build(d);
    FAIL() << "expected DisconnectedGraph";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), errc::disconnected_graph);
  }
}

TEST(PlaneGraphTest, EulerViolation) {
  // K5 rotation that is planar as a map on a torus, not the sphere.
  GraphDescription d = k5st_description();
  std::swap(d.rotation[2][0], d.rotation[2][2]);
  try {
    PlaneGraph::build(d);
    FAIL() << "expected EulerViolation";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), errc::euler_violation);
  }
}

TEST(PlaneGraphTest, OuterFaceNotIncidentToSink) {
  GraphDescription d = diamond_description();
  d.outer_dart = backward_dart(0);  // left face is the s-v1-v2 triangle
  try {
    PlaneGraph::build(d);
    FAIL() << "expected OuterFaceNotIncidentToSink";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), errc::outer_face_not_incident_to_sink);
  }
}

TEST(GraphIoTest, FixtureFilesMatchBuiltins) {
  struct Case {
    const char* file;
    GraphDescription desc;
  };
  for (const Case& c : {Case{"diamond.graph", diamond_description()},
                        Case{"lens-chain.graph", lens_chain_description()},
                        Case{"k33st.graph", k33st_description()},
                        Case{"k5st.graph", k5st_description()}}) {
    GraphDescription got = load_graph_description(std::string(FIXTURE_DIR) + "/" + c.file);
    EXPECT_EQ(got.vertex_count, c.desc.vertex_count) << c.file;
    EXPECT_EQ(got.edges, c.desc.edges) << c.file;
    EXPECT_EQ(got.rotation, c.desc.rotation) << c.file;
    EXPECT_EQ(got.source, c.desc.source) << c.file;
    EXPECT_EQ(got.sink, c.desc.sink) << c.file;
    EXPECT_EQ(got.outer_dart, c.desc.outer_dart) << c.file;
  }
}

TEST(GraphIoTest, ParseErrors) {
  auto parse = [](const std::string& text) { return parse_graph_description(text); };
  EXPECT_THROW(parse("frobnicate 3"), Error);
  EXPECT_THROW(parse("vertices 2\nedge 0 0 1\nrot 0 +0\nrot 1 -0\nsource 0\nsink 1"), Error);
  try {
    parse("vertices 2\nedge 0 0 1\nrot 0 +0\nsource 0\nsink 1\nouter +0");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), errc::missing_rotation_entry);
  }
  // Capacities and the undirected flag parse.
  GraphDescription d = parse_graph_description(
      "vertices 2\nedge 0 0 1 cap 7\nrot 0 +0\nrot 1 -0\nsource 0\nsink 1\nouter +0\n"
      "undirected\n# trailing comment\n");
  EXPECT_EQ(d.edge_cap, (std::vector<long long>{7}));
  EXPECT_TRUE(d.undirected);
}

TEST(DualTest, DiamondDual) {
  PlaneGraph g = PlaneGraph::build(diamond_description());
  DualGraph d = dual(g);
  EXPECT_EQ(d.vertex_count, 3);
  ASSERT_EQ(d.edges.size(), 5u);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    EXPECT_EQ(d.edges[e].first, g.right_face(forward_dart(e)));
    EXPECT_EQ(d.edges[e].second, g.left_face(forward_dart(e)));
  }
  int degree_sum = 0;
  for (FaceId f = 0; f < d.vertex_count; ++f) degree_sum += d.degree(f);
  EXPECT_EQ(degree_sum, 2 * g.edge_count());
}

TEST(CutTest, SourceSideCutIsSimple) {
  PlaneGraph g = PlaneGraph::build(diamond_description());
  auto cert = is_simple_cut(g, {forward_dart(0), forward_dart(1)});
  ASSERT_TRUE(cert.has_value());
  EXPECT_EQ(cert->side, (std::vector<Vertex>{0}));
  EXPECT_TRUE(cert->simple);
  EXPECT_FALSE(is_simple_cut(g, {forward_dart(0)}).has_value());
  EXPECT_FALSE(is_simple_cut(g, {}).has_value());
  // Gamma+({s, v1}) = {+1, +2, +4}.
  auto mid = is_simple_cut(g, {forward_dart(1), forward_dart(2), forward_dart(4)});
  ASSERT_TRUE(mid.has_value());
  EXPECT_EQ(mid->side, (std::vector<Vertex>{0, 1}));
  EXPECT_TRUE(mid->simple);
}

TEST(CutTest, CycleCutDuality) {
  PlaneGraph g = PlaneGraph::build(diamond_description());
  // Simple cycle s -> v1 -> v2 -> s, handed over unordered.
  std::vector<Dart> cycle = {forward_dart(4), backward_dart(1), forward_dart(0)};
  std::vector<Dart> ordered = order_simple_cycle(g, cycle);
  EXPECT_EQ(ordered.size(), 3u);
  EXPECT_TRUE(cycle_cut_duality_check(g, cycle));
  try {
    order_simple_cycle(g, {forward_dart(0), forward_dart(4)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), errc::not_a_simple_cycle);
  }
}

TEST(SubgraphTest, RestrictKeepsEmbedding) {
  PlaneGraph g = PlaneGraph::build(diamond_description());
  Subgraph sub = restrict_to_edges(g, {0, 2, 1, 3});  // drop the chord
  EXPECT_EQ(sub.graph.vertex_count(), 4);
  EXPECT_EQ(sub.graph.edge_count(), 4);
  EXPECT_EQ(sub.graph.face_count(), 2);
  EXPECT_EQ(sub.vertex_to_orig[sub.graph.source()], g.source());
  EXPECT_EQ(sub.vertex_to_orig[sub.graph.sink()], g.sink());
  // Dart mapping round-trips.
  for (EdgeId e = 0; e < sub.graph.edge_count(); ++e) {
    Dart orig = sub.dart_to_orig(forward_dart(e));
    EXPECT_EQ(sub.dart_to_sub(orig), forward_dart(e));
  }
}

TEST(SubgraphTest, DisconnectedSubgraph) {
  PlaneGraph g = PlaneGraph::build(diamond_description());
  try {
    restrict_to_edges(g, {2});  // v1 - t only; s stranded
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), errc::disconnected_subgraph);
  }
}

TEST(SubgraphTest, OuterFaceAbsorbsDeletedRegion) {
  // Drop the k33st outer arc: s stays off the old outer face but the merged
  // region changes which darts border it.
  PlaneGraph g = PlaneGraph::build(k33st_description());
  std::vector<EdgeId> keep;
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (e != 5) keep.push_back(e);
  Subgraph sub = restrict_to_edges(g, keep);
  EXPECT_EQ(sub.graph.edge_count(), 7);
  EXPECT_EQ(sub.graph.vertex_count() - sub.graph.edge_count() + sub.graph.face_count(), 2);
  EXPECT_TRUE(sub.graph.vertex_on_face(sub.graph.sink(), sub.graph.infinite_face()));
}

}  // namespace
}  // namespace pathlattice
