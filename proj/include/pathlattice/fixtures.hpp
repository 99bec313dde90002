#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "pathlattice/plane_graph.hpp"

namespace pathlattice {

// A straight-line drawing: positions plus edges. The rotation system and the
// outer dart are derived from the geometry.
struct DrawnGraph {
  std::vector<std::pair<double, double>> pos;
  std::vector<std::pair<Vertex, Vertex>> edges;
  Vertex source = -1;
  Vertex sink = -1;
};

inline GraphDescription embed_from_coordinates(const DrawnGraph& drawing) {
  GraphDescription desc;
  desc.vertex_count = static_cast<int>(drawing.pos.size());
  desc.edges = drawing.edges;
  desc.source = drawing.source;
  desc.sink = drawing.sink;
  desc.rotation.resize(desc.vertex_count);

  auto angle = [&](Dart d) {
    Vertex v = is_forward(d) ? drawing.edges[edge_of(d)].first : drawing.edges[edge_of(d)].second;
    Vertex w = is_forward(d) ? drawing.edges[edge_of(d)].second : drawing.edges[edge_of(d)].first;
    return std::atan2(drawing.pos[w].second - drawing.pos[v].second,
                      drawing.pos[w].first - drawing.pos[v].first);
  };
  for (EdgeId e = 0; e < static_cast<int>(desc.edges.size()); ++e) {
    desc.rotation[desc.edges[e].first].push_back(forward_dart(e));
    desc.rotation[desc.edges[e].second].push_back(backward_dart(e));
  }
  for (auto& rot : desc.rotation)
    std::sort(rot.begin(), rot.end(),
              [&](Dart a, Dart b) { return angle(a) < angle(b); });

  // At the bottommost (then leftmost) vertex the outer face fills the angular
  // gap containing "straight down"; the face left of a dart occupies the
  // counterclockwise gap after it, so that gap's first dart borders f_inf.
  Vertex low = 0;
  auto key = [&](Vertex u) {
    return std::make_pair(drawing.pos[u].second, drawing.pos[u].first);
  };
  for (Vertex v = 1; v < desc.vertex_count; ++v)
    if (key(v) < key(low)) low = v;
  const auto& rot = desc.rotation[low];
  const double down = -std::acos(-1.0) / 2;
  auto ccw_gap = [&](double from, double to) {
    double g = to - from;
    while (g <= 0) g += 2 * std::acos(-1.0);
    return g;
  };
  desc.outer_dart = rot.front();
  for (std::size_t i = 0; i < rot.size(); ++i) {
    double a = angle(rot[i]);
    double b = angle(rot[(i + 1) % rot.size()]);
    if (ccw_gap(a, down) <= ccw_gap(a, b)) {
      desc.outer_dart = rot[i];
      break;
    }
  }
  return desc;
}

// ---------------------------------------------------------------------------
// Hand-built fixtures

// Diamond with a chord: s fans out to two middle vertices joined by a chord,
// both reaching t. Four simple s-t paths forming a diamond lattice.
inline GraphDescription diamond_description() {
  GraphDescription d;
  d.vertex_count = 4;  // 0 = s, 1 = top, 2 = bottom, 3 = t
  d.edges = {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {1, 2}};
  d.rotation = {
      {forward_dart(0), forward_dart(1)},
      {backward_dart(0), forward_dart(4), forward_dart(2)},
      {forward_dart(3), backward_dart(4), backward_dart(1)},
      {backward_dart(2), backward_dart(3)},
  };
  d.source = 0;
  d.sink = 3;
  d.outer_dart = forward_dart(0);
  return d;
}

// Three lens pairs in series, embedded so that the middle lens wraps around
// s: the sink is on the outer face but the source is not.
inline GraphDescription lens_chain_description() {
  GraphDescription d;
  d.vertex_count = 4;  // 0 = s, 1, 2, 3 = t
  d.edges = {{0, 1}, {0, 1}, {1, 2}, {1, 2}, {2, 3}, {2, 3}};
  d.rotation = {
      {forward_dart(0), forward_dart(1)},
      {backward_dart(0), forward_dart(2), forward_dart(3), backward_dart(1)},
      {forward_dart(5), backward_dart(2), backward_dart(3), forward_dart(4)},
      {backward_dart(5), backward_dart(4)},
  };
  d.source = 0;
  d.sink = 3;
  d.outer_dart = forward_dart(2);
  return d;
}

// K_{3,3} with one part vertex split into s and t; drawn planar except that
// one edge becomes a long outer arc. Planar but never s-t-planar.
inline GraphDescription k33st_description() {
  GraphDescription d;
  d.vertex_count = 6;  // 0 = s, 1..4 = middle, 5 = t
  d.edges = {{0, 2}, {0, 1}, {2, 4}, {2, 3}, {1, 3}, {1, 4}, {4, 5}, {3, 5}};
  d.rotation = {
      {forward_dart(0), forward_dart(1)},
      {forward_dart(4), backward_dart(1), forward_dart(5)},
      {forward_dart(2), backward_dart(0), forward_dart(3)},
      {forward_dart(7), backward_dart(3), backward_dart(4)},
      {backward_dart(5), backward_dart(2), forward_dart(6)},
      {backward_dart(6), backward_dart(7)},
  };
  d.source = 0;
  d.sink = 5;
  d.outer_dart = forward_dart(5);
  return d;
}

// K_5 with one vertex split into s and t; one edge becomes a long outer arc.
inline GraphDescription k5st_description() {
  GraphDescription d;
  d.vertex_count = 5;  // 0 = s, 1..3 = middle, 4 = t
  d.edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}, {1, 4}, {2, 4}, {3, 4}, {3, 1}};
  d.rotation = {
      {forward_dart(1), forward_dart(0), forward_dart(2)},
      {backward_dart(8), backward_dart(0), forward_dart(3), forward_dart(5)},
      {forward_dart(6), backward_dart(3), backward_dart(1), forward_dart(4)},
      {forward_dart(7), backward_dart(4), backward_dart(2), forward_dart(8)},
      {backward_dart(5), backward_dart(6), backward_dart(7)},
  };
  d.source = 0;
  d.sink = 4;
  d.outer_dart = forward_dart(8);
  return d;
}

// ---------------------------------------------------------------------------
// Generators

// w x h grid; s bottom-left, t top-right, edges point right and up.
inline GraphDescription grid_description(int w, int h) {
  DrawnGraph dr;
  auto id = [&](int x, int y) { return y * w + x; };
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) dr.pos.emplace_back(x, y);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      if (x + 1 < w) dr.edges.emplace_back(id(x, y), id(x + 1, y));
      if (y + 1 < h) dr.edges.emplace_back(id(x, y), id(x, y + 1));
    }
  dr.source = id(0, 0);
  dr.sink = id(w - 1, h - 1);
  return embed_from_coordinates(dr);
}

// Hub s below a rim path v_1 .. v_n; t is the last rim vertex.
inline GraphDescription fan_description(int n) {
  DrawnGraph dr;
  dr.pos.emplace_back(0.0, 0.0);  // hub
  for (int i = 0; i < n; ++i) dr.pos.emplace_back(i - (n - 1) / 2.0, 1.0);
  for (int i = 0; i < n; ++i) dr.edges.emplace_back(0, 1 + i);
  for (int i = 0; i + 1 < n; ++i) dr.edges.emplace_back(1 + i, 2 + i);
  dr.source = 0;
  dr.sink = n;
  return embed_from_coordinates(dr);
}

// Two horizontal rails of length n with vertical rungs; s bottom-left,
// t top-right.
inline GraphDescription ladder_description(int n) {
  DrawnGraph dr;
  for (int x = 0; x < n; ++x) dr.pos.emplace_back(x, 0.0);
  for (int x = 0; x < n; ++x) dr.pos.emplace_back(x, 1.0);
  for (int x = 0; x + 1 < n; ++x) {
    dr.edges.emplace_back(x, x + 1);
    dr.edges.emplace_back(n + x, n + x + 1);
  }
  for (int x = 0; x < n; ++x) dr.edges.emplace_back(x, n + x);
  dr.source = 0;
  dr.sink = 2 * n - 1;
  return embed_from_coordinates(dr);
}

// Random connected s-t spanning edge subset of a w x h grid, as an embedded
// subgraph. Deterministic in the seed.
inline Subgraph random_grid_subgraph(int w, int h, unsigned seed, double keep_prob = 0.75) {
  PlaneGraph grid = PlaneGraph::build(grid_description(w, h));
  std::mt19937 rng(seed);
  std::bernoulli_distribution keep(keep_prob);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<char> mask(grid.edge_count(), 0);
    for (EdgeId e = 0; e < grid.edge_count(); ++e) mask[e] = keep(rng);
    try {
      return restrict_to_subgraph(grid, mask);
    } catch (const Error& e) {
      if (e.code() != errc::disconnected_subgraph) throw;
    }
  }
  fail(errc::disconnected_subgraph, "no connected random subgraph found");
}

}  // namespace pathlattice
