#pragma once

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <queue>
#include <vector>

#include "pathlattice/enumerate.hpp"
#include "pathlattice/graph_io.hpp"
#include "pathlattice/lattice.hpp"
#include "pathlattice/plane_graph.hpp"

namespace pathlattice {

// Nonnegative integer capacity per dart. Directed instances leave the
// backward dart at 0; undirected instances set both darts equal.
struct CapacityMap {
  std::vector<long long> cap;

  explicit CapacityMap(int dart_count = 0) : cap(dart_count, 0) {}

  static CapacityMap from_description(const GraphDescription& desc) {
    CapacityMap m(2 * static_cast<int>(desc.edges.size()));
    for (EdgeId e = 0; e < static_cast<int>(desc.edges.size()); ++e) {
      long long c = desc.edge_cap.empty() ? 1 : desc.edge_cap[e];
      m.cap[forward_dart(e)] = c;
      m.cap[backward_dart(e)] = desc.undirected ? c : 0;
    }
    return m;
  }

  long long operator[](Dart d) const { return cap[d]; }
  long long& operator[](Dart d) { return cap[d]; }
  long long total() const {
    long long s = 0;
    for (long long c : cap) s += c;
    return s;
  }
};

// Flow in canceled form: at most one of flow(d), flow(rev d) is positive.
struct FlowState {
  std::vector<long long> flow;
  long long value = 0;

  explicit FlowState(int dart_count = 0) : flow(dart_count, 0) {}

  long long residual(const CapacityMap& cap, Dart d) const {
    return cap[d] - flow[d] + flow[reverse(d)];
  }

  void augment(const std::vector<Dart>& path, long long amount) {
    for (Dart d : path) {
      long long cancel = std::min(amount, flow[reverse(d)]);
      flow[reverse(d)] -= cancel;
      flow[d] += amount - cancel;
    }
    value += amount;
  }
};

struct PathPacking {
  std::vector<std::pair<PathSeq, long long>> entries;

  long long packed_value() const {
    long long s = 0;
    for (const auto& [p, y] : entries) s += y;
    return s;
  }
  long long objective(const std::function<long long(const PathSeq&)>& r) const {
    long long s = 0;
    for (const auto& [p, y] : entries) s += r(p) * y;
    return s;
  }
  bool feasible(const CapacityMap& cap) const {
    std::vector<long long> used(cap.cap.size(), 0);
    for (const auto& [p, y] : entries) {
      if (y < 0) return false;
      for (Dart d : p.darts) used[d] += y;
    }
    for (Dart d = 0; d < static_cast<int>(used.size()); ++d)
      if (used[d] > cap[d]) return false;
    return true;
  }
};

namespace detail {

inline void check_nonnegative(const CapacityMap& cap) {
  for (long long c : cap.cap)
    if (c < 0) fail(errc::negative_capacity, "capacities must be nonnegative");
}

// Left-first depth-first search for the uppermost residual s-t path.
// Candidates at a vertex are scanned clockwise starting from the leftmost
// turn; at s the scan starts from the outer-boundary dart leaving s.
inline bool leftmost_residual_path(const PlaneGraph& g, const CapacityMap& cap,
                                   const FlowState& f, std::vector<Dart>& out) {
  Dart start = -1;
  for (Dart d : g.face(g.infinite_face()).boundary)
    if (g.tail(d) == g.source()) {
      start = d;
      break;
    }
  if (start < 0) fail(errc::not_st_planar_embedding, "s is not on the outer face");

  std::vector<char> visited(g.vertex_count(), 0);
  out.clear();
  auto dfs = [&](auto&& self, Vertex v, Dart first) -> bool {
    visited[v] = 1;
    Dart d = first;
    const std::size_t deg = g.rotation(v).size();
    for (std::size_t i = 0; i < deg; ++i, d = g.prev_ccw(d)) {
      Vertex w = g.head(d);
      if (visited[w] || f.residual(cap, d) <= 0) continue;
      out.push_back(d);
      if (w == g.sink()) return true;
      if (self(self, w, g.prev_ccw(reverse(d)))) return true;
      out.pop_back();
    }
    return false;
  };
  return dfs(dfs, g.source(), start);
}

}  // namespace detail

struct UppermostFlowResult {
  FlowState flow;
  PathPacking packing;
  CutCertificate cut;
  int augmentations = 0;
};

// Extracts the min cut witness of a maximum flow: S is the residual-reachable
// set from s.
inline CutCertificate mincut_extract(const PlaneGraph& g, const CapacityMap& cap,
                                     const FlowState& f) {
  std::vector<char> reach(g.vertex_count(), 0);
  std::deque<Vertex> queue = {g.source()};
  reach[g.source()] = 1;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Dart d : g.rotation(v)) {
      Vertex w = g.head(d);
      if (!reach[w] && f.residual(cap, d) > 0) {
        reach[w] = 1;
        queue.push_back(w);
      }
    }
  }
  if (reach[g.sink()]) fail(errc::residual_path_exists, "flow is not maximum");
  CutCertificate cert;
  cert.in_side = reach;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (reach[v]) cert.side.push_back(v);
  for (Dart d = 0; d < g.dart_count(); ++d)
    if (reach[g.tail(d)] && !reach[g.head(d)]) cert.darts.push_back(d);
  if (auto full = is_simple_cut(g, cert.darts)) cert.simple = full->simple;
  return cert;
}

inline long long cut_capacity(const CapacityMap& cap, const CutCertificate& cut) {
  long long s = 0;
  for (Dart d : cut.darts) s += cap[d];
  return s;
}

// Ford and Fulkerson's uppermost path algorithm: repeatedly saturate the
// uppermost residual path. Also returns the packing of augmenting paths and
// the min cut certificate.
inline UppermostFlowResult maxflow_uppermost(const PlaneGraph& g, const CapacityMap& cap) {
  if (!is_st_planar(g)) fail(errc::not_st_planar_embedding, "embedding is not s-t-planar");
  detail::check_nonnegative(cap);
  UppermostFlowResult res;
  res.flow = FlowState(g.dart_count());
  std::vector<Dart> path;
  while (detail::leftmost_residual_path(g, cap, res.flow, path)) {
    long long bottleneck = std::numeric_limits<long long>::max();
    for (Dart d : path) bottleneck = std::min(bottleneck, res.flow.residual(cap, d));
    res.flow.augment(path, bottleneck);
    res.packing.entries.emplace_back(PathSeq{path}, bottleneck);
    if (++res.augmentations > g.edge_count())
      fail(errc::residual_path_exists, "uppermost augmentation did not terminate in |E| steps");
  }
  res.cut = mincut_extract(g, cap, res.flow);
  return res;
}

// Generic correctness oracle: shortest augmenting paths over residual darts,
// BFS ties broken by dart id.
inline FlowState maxflow_generic(const PlaneGraph& g, const CapacityMap& cap) {
  detail::check_nonnegative(cap);
  FlowState f(g.dart_count());
  for (;;) {
    std::vector<Dart> parent(g.vertex_count(), -1);
    std::vector<char> seen(g.vertex_count(), 0);
    seen[g.source()] = 1;
    std::deque<Vertex> queue = {g.source()};
    while (!queue.empty() && !seen[g.sink()]) {
      Vertex v = queue.front();
      queue.pop_front();
      std::vector<Dart> outs(g.rotation(v));
      std::sort(outs.begin(), outs.end());
      for (Dart d : outs) {
        Vertex w = g.head(d);
        if (seen[w] || f.residual(cap, d) <= 0) continue;
        seen[w] = 1;
        parent[w] = d;
        queue.push_back(w);
      }
    }
    if (!seen[g.sink()]) break;
    std::vector<Dart> path;
    for (Vertex v = g.sink(); v != g.source(); v = g.tail(parent[v])) path.push_back(parent[v]);
    std::reverse(path.begin(), path.end());
    long long bottleneck = std::numeric_limits<long long>::max();
    for (Dart d : path) bottleneck = std::min(bottleneck, f.residual(cap, d));
    f.augment(path, bottleneck);
  }
  return f;
}

// Hassin's construction: split f_inf into two terminals along an s-t seam,
// take dart capacities as dual arc lengths, and read the flow off the dual
// distances: flow(d) = max(0, dist(right(d)) - dist(left(d))).
inline FlowState maxflow_dual_sp(const PlaneGraph& g, const CapacityMap& cap) {
  if (!is_st_planar(g)) fail(errc::not_st_planar_embedding, "embedding is not s-t-planar");
  detail::check_nonnegative(cap);

  const Face& outer = g.face(g.infinite_face());
  const std::size_t n = outer.boundary.size();
  std::size_t s_pos = n;
  for (std::size_t i = 0; i < n && s_pos == n; ++i)
    if (g.tail(outer.boundary[i]) == g.source()) s_pos = i;
  // Boundary darts from the s corner up to the first t corner lie on side A
  // of the seam; the rest on side B.
  std::vector<int> side(g.dart_count(), -1);  // only meaningful for boundary darts
  int cur_side = 0;
  for (std::size_t i = 0; i < n; ++i) {
    Dart d = outer.boundary[(s_pos + i) % n];
    if (i > 0 && g.tail(d) == g.sink() && cur_side == 0) cur_side = 1;
    side[d] = cur_side;
  }

  const int node_a = g.face_count();      // f_inf side whose boundary runs s -> t
  const int node_b = g.face_count() + 1;  // the other side
  auto node_of_left = [&](Dart d) -> int {
    FaceId f = g.left_face(d);
    if (f != g.infinite_face()) return f;
    return side[d] == 0 ? node_a : node_b;
  };

  // Dijkstra over dual arcs left(d) -> right(d) with length cap(d).
  const long long inf = std::numeric_limits<long long>::max() / 4;
  std::vector<long long> dist(g.face_count() + 2, inf);
  std::vector<std::vector<std::pair<int, long long>>> adj(g.face_count() + 2);
  for (Dart d = 0; d < g.dart_count(); ++d)
    adj[node_of_left(d)].emplace_back(node_of_left(reverse(d)), cap[d]);
  using Item = std::pair<long long, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  dist[node_a] = 0;
  pq.emplace(0, node_a);
  while (!pq.empty()) {
    auto [dv, v] = pq.top();
    pq.pop();
    if (dv != dist[v]) continue;
    for (auto [w, len] : adj[v])
      if (dv + len < dist[w]) {
        dist[w] = dv + len;
        pq.emplace(dist[w], w);
      }
  }

  FlowState f(g.dart_count());
  for (Dart d = 0; d < g.dart_count(); ++d) {
    long long delta = dist[node_of_left(reverse(d))] - dist[node_of_left(d)];
    f.flow[d] = std::max(delta, 0LL);
  }
  std::vector<long long> net(g.vertex_count(), 0);
  for (Dart d = 0; d < g.dart_count(); ++d)
    if (is_forward(d)) {
      long long x = f.flow[d] - f.flow[reverse(d)];
      net[g.tail(d)] += x;
      net[g.head(d)] -= x;
    }
  f.value = net[g.source()];
  return f;
}

// Greedy packing for supermodular, monotone path weights: repeatedly
// saturates the leftmost (maximum w.r.t. the path order) residual path.
inline PathPacking weighted_packing(const PlaneGraph& g, const CapacityMap& cap,
                                    const std::function<long long(const PathSeq&)>& r) {
  if (!is_st_planar(g)) fail(errc::not_st_planar_embedding, "embedding is not s-t-planar");
  detail::check_nonnegative(cap);
  PathPacking packing;
  FlowState f(g.dart_count());
  std::vector<Dart> path;
  int guard = 0;
  while (detail::leftmost_residual_path(g, cap, f, path)) {
    PathSeq p{path};
    if (r(p) < 0) fail(errc::negative_weight, "weight of " + format_path(p.darts));
    long long bottleneck = std::numeric_limits<long long>::max();
    for (Dart d : path) bottleneck = std::min(bottleneck, f.residual(cap, d));
    f.augment(path, bottleneck);
    packing.entries.emplace_back(std::move(p), bottleneck);
    if (++guard > g.edge_count())
      fail(errc::residual_path_exists, "greedy packing did not terminate in |E| steps");
  }
  return packing;
}

// Exact optimum of the packing LP over integral duals, by exhaustive search.
// Valid on tiny instances because the lattice-polyhedron system is totally
// dual integral.
inline long long packing_oracle(const PlaneGraph& g, const CapacityMap& cap,
                                const std::function<long long(const PathSeq&)>& r,
                                long long max_total_cap = 24, std::size_t max_paths = 40) {
  detail::check_nonnegative(cap);
  if (cap.total() > max_total_cap)
    fail(errc::instance_too_large, "total capacity exceeds " + std::to_string(max_total_cap));
  std::vector<PathSeq> paths;
  try {
    paths = enumerate_simple_paths(g, max_paths);
  } catch (const Error& e) {
    if (e.code() == errc::too_many_paths)
      fail(errc::instance_too_large, "more than " + std::to_string(max_paths) + " paths");
    throw;
  }
  std::vector<long long> weight(paths.size());
  for (std::size_t i = 0; i < paths.size(); ++i) {
    weight[i] = r(paths[i]);
    if (weight[i] < 0) fail(errc::negative_weight, "weight of a path is negative");
  }

  std::vector<long long> residual = cap.cap;
  long long best = 0;
  auto max_amount = [&](const PathSeq& p) {
    long long m = std::numeric_limits<long long>::max();
    for (Dart d : p.darts) m = std::min(m, residual[d]);
    return m;
  };
  auto search = [&](auto&& self, std::size_t i, long long value) -> void {
    if (value > best) best = value;
    if (i == paths.size()) return;
    // Optimistic bound: every remaining path packed up to its bottleneck.
    long long bound = value;
    for (std::size_t j = i; j < paths.size(); ++j) bound += weight[j] * max_amount(paths[j]);
    if (bound <= best) return;
    long long top = max_amount(paths[i]);
    for (long long y = top; y >= 0; --y) {
      for (Dart d : paths[i].darts) residual[d] -= y;
      self(self, i + 1, value + weight[i] * y);
      for (Dart d : paths[i].darts) residual[d] += y;
    }
  };
  search(search, 0, 0);
  return best;
}

}  // namespace pathlattice
