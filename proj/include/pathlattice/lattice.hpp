#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "pathlattice/circulation.hpp"
#include "pathlattice/plane_graph.hpp"

namespace pathlattice {

// A simple s-t path as an ordered dart sequence.
struct PathSeq {
  std::vector<Dart> darts;

  friend bool operator==(const PathSeq&, const PathSeq&) = default;
  friend auto operator<=>(const PathSeq& a, const PathSeq& b) { return a.darts <=> b.darts; }

  std::vector<EdgeId> edge_set() const {
    std::vector<EdgeId> out;
    out.reserve(darts.size());
    for (Dart d : darts) out.push_back(edge_of(d));
    std::sort(out.begin(), out.end());
    return out;
  }
  bool contains(Dart d) const {
    return std::find(darts.begin(), darts.end(), d) != darts.end();
  }
};

// Heads pairwise distinct, edges pairwise distinct, runs from s to t.
inline void validate_path(const PlaneGraph& g, const PathSeq& p) {
  if (p.darts.empty()) fail(errc::not_a_path, "empty dart sequence");
  std::vector<char> edge_used(g.edge_count(), 0), head_used(g.vertex_count(), 0);
  Vertex at = g.source();
  head_used[at] = 1;  // a simple path never returns to s
  if (g.tail(p.darts.front()) != at) fail(errc::not_a_path, "path does not start at s");
  for (Dart d : p.darts) {
    if (d < 0 || d >= g.dart_count()) fail(errc::not_a_path, "dart out of range");
    if (g.tail(d) != at) fail(errc::not_a_path, "darts do not chain at " + dart_token(d));
    if (edge_used[edge_of(d)]) fail(errc::not_a_path, "edge reused by " + dart_token(d));
    edge_used[edge_of(d)] = 1;
    at = g.head(d);
    if (head_used[at]) fail(errc::not_a_path, "head repeated at vertex " + std::to_string(at));
    head_used[at] = 1;
  }
  if (at != g.sink()) fail(errc::not_a_path, "path does not end at t");
}

enum class Comparison { LeftOf, RightOf, Equal, Incomparable };

inline const char* to_string(Comparison c) {
  switch (c) {
    case Comparison::LeftOf: return "left-of";
    case Comparison::RightOf: return "right-of";
    case Comparison::Equal: return "equal";
    case Comparison::Incomparable: return "incomparable";
  }
  return "?";
}

// P is left of Q iff Phi(delta_P - delta_Q) >= 0.
inline Comparison compare(const PlaneGraph& g, const PathSeq& p, const PathSeq& q) {
  validate_path(g, p);
  validate_path(g, q);
  if (p == q) return Comparison::Equal;
  FacePotential phi = face_potential(g, path_vector(g, p.darts) - path_vector(g, q.darts));
  bool pos = false, neg = false;
  for (long long v : phi.values) {
    if (v > 0) pos = true;
    if (v < 0) neg = true;
  }
  if (pos && neg) return Comparison::Incomparable;
  if (neg) return Comparison::RightOf;
  return Comparison::LeftOf;  // phi >= 0; phi == 0 cannot happen for distinct simple paths
}

inline bool left_of_or_equal(const PlaneGraph& g, const PathSeq& p, const PathSeq& q) {
  Comparison c = compare(g, p, q);
  return c == Comparison::LeftOf || c == Comparison::Equal;
}

namespace detail {

// Turns a dart walk into a simple path by excising the loop whenever a
// vertex repeats; the first occurrence wins.
inline PathSeq smooth_walk(const PlaneGraph& g, const std::vector<Dart>& walk) {
  PathSeq out;
  std::map<Vertex, std::size_t> pos;  // vertex -> number of darts before it
  pos[g.tail(walk.front())] = 0;
  for (Dart d : walk) {
    out.darts.push_back(d);
    Vertex v = g.head(d);
    auto it = pos.find(v);
    if (it != pos.end()) {
      while (out.darts.size() > it->second) {
        pos.erase(g.head(out.darts.back()));
        out.darts.pop_back();
      }
      pos[v] = out.darts.size();  // may have erased v itself above
    } else {
      pos[v] = out.darts.size();
    }
  }
  return out;
}

}  // namespace detail

inline bool is_st_planar(const PlaneGraph& g) {
  return g.vertex_on_face(g.source(), g.infinite_face()) &&
         g.vertex_on_face(g.sink(), g.infinite_face());
}

// The unique simple s-t path with f_inf on the left of every dart, obtained
// by walking the outer boundary from s and smoothing out cycles.
inline PathSeq uppermost_path(const PlaneGraph& g) {
  if (!is_st_planar(g)) fail(errc::not_st_planar_embedding, "s is not on the outer face");
  const Face& f = g.face(g.infinite_face());
  const std::size_t n = f.boundary.size();
  std::size_t start = n;
  for (std::size_t i = 0; i < n; ++i)
    if (g.tail(f.boundary[i]) == g.source()) {
      start = i;
      break;
    }
  std::vector<Dart> walk;
  for (std::size_t i = 0; i < n; ++i) {
    Dart d = f.boundary[(start + i) % n];
    walk.push_back(d);
    if (g.head(d) == g.sink()) break;
  }
  PathSeq path = detail::smooth_walk(g, walk);
  validate_path(g, path);
  return path;
}

// Mirror image of uppermost_path: f_inf on the right of every dart.
inline PathSeq lowermost_path(const PlaneGraph& g) {
  if (!is_st_planar(g)) fail(errc::not_st_planar_embedding, "s is not on the outer face");
  // The reversed outer boundary orbit has f_inf on the right.
  const Face& f = g.face(g.infinite_face());
  std::vector<Dart> rev_orbit(f.boundary.rbegin(), f.boundary.rend());
  for (Dart& d : rev_orbit) d = reverse(d);
  const std::size_t n = rev_orbit.size();
  std::size_t start = n;
  for (std::size_t i = 0; i < n; ++i)
    if (g.tail(rev_orbit[i]) == g.source()) {
      start = i;
      break;
    }
  std::vector<Dart> walk;
  for (std::size_t i = 0; i < n; ++i) {
    Dart d = rev_orbit[(start + i) % n];
    walk.push_back(d);
    if (g.head(d) == g.sink()) break;
  }
  PathSeq path = detail::smooth_walk(g, walk);
  validate_path(g, path);
  return path;
}

// Flow decomposition of a unit s-t flow with entries in {-1,0,1}: one simple
// s-t path plus edge-disjoint simple cycles. Cycle orientation is the sign
// of the cycle's face potential (positive = clockwise).
struct MeetJoinResult {
  PathSeq path;
  std::vector<std::vector<Dart>> cycles;
  std::vector<int> cycle_orientation;  // +1 clockwise, -1 counterclockwise
  EdgeVector vector;
};

inline MeetJoinResult decompose(const PlaneGraph& g, const EdgeVector& v) {
  for (long long x : v.values)
    if (x < -1 || x > 1) fail(errc::not_a_unit_flow, "entry outside {-1,0,1}");
  auto net = vertex_imbalance(g, v);
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    long long want = (u == g.source()) ? 1 : (u == g.sink()) ? -1 : 0;
    if (net[u] != want)
      fail(errc::not_a_unit_flow, "imbalance " + std::to_string(net[u]) + " at vertex " +
                                      std::to_string(u));
  }

  std::vector<Dart> pool = induced_darts(v);
  std::vector<std::vector<Dart>> out_of(g.vertex_count());
  for (Dart d : pool) out_of[g.tail(d)].push_back(d);  // already in id order
  std::vector<std::size_t> cursor(g.vertex_count(), 0);
  auto take = [&](Vertex u) -> Dart {
    auto& outs = out_of[u];
    auto& i = cursor[u];
    return i < outs.size() ? outs[i++] : -1;
  };

  MeetJoinResult res;
  res.vector = v;

  std::vector<std::vector<Dart>> raw_cycles;
  auto walk_with_loop_pop = [&](Vertex from, Vertex stop, std::vector<Dart>& path_out) {
    std::map<Vertex, std::size_t> pos;
    pos[from] = 0;
    Vertex at = from;
    while (at != stop || path_out.empty()) {
      Dart d = take(at);
      if (d < 0) {
        if (at == stop) break;  // closed walk finished at its start
        fail(errc::not_a_unit_flow, "walk dead-ends at vertex " + std::to_string(at));
      }
      path_out.push_back(d);
      at = g.head(d);
      auto it = pos.find(at);
      if (it != pos.end()) {
        // Pop the loop since the previous visit; it is a simple cycle.
        std::vector<Dart> cyc(path_out.begin() + it->second, path_out.end());
        path_out.resize(it->second);
        for (Dart cd : cyc) pos.erase(g.head(cd));
        pos[at] = path_out.size();
        raw_cycles.push_back(std::move(cyc));
        if (at == stop && path_out.empty() && cursor[at] >= out_of[at].size()) break;
      } else {
        pos[at] = path_out.size();
      }
    }
  };

  walk_with_loop_pop(g.source(), g.sink(), res.path.darts);
  // Peel the remaining darts into cycles, lowest dart id first.
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    while (cursor[u] < out_of[u].size()) {
      std::vector<Dart> scratch;
      walk_with_loop_pop(u, u, scratch);
      if (!scratch.empty())
        fail(errc::not_a_unit_flow, "leftover darts do not close into cycles");
    }
  }

  validate_path(g, res.path);
  for (auto& cyc : raw_cycles) {
    FacePotential phi = face_potential(g, path_vector(g, cyc));
    bool pos = false, neg = false;
    for (long long x : phi.values) {
      if (x > 0) pos = true;
      if (x < 0) neg = true;
    }
    res.cycles.push_back(std::move(cyc));
    res.cycle_orientation.push_back(pos && !neg ? +1 : -1);
  }
  return res;
}

namespace detail {

// delta_P minus the positive (meet) or negative (join) part of the face
// potential of delta_P - delta_Q, per edge via the boundary-crossing rule.
inline EdgeVector clipped_difference(const PlaneGraph& g, const EdgeVector& delta_p,
                                     const FacePotential& phi, bool positive_part) {
  EdgeVector out(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    Dart d = forward_dart(e);
    auto clip = [&](FaceId f) {
      long long v = phi[f];
      return positive_part ? std::max(v, 0LL) : std::min(v, 0LL);
    };
    out[e] = delta_p[e] - (clip(g.right_face(d)) - clip(g.left_face(d)));
  }
  return out;
}

inline MeetJoinResult meet_or_join(const PlaneGraph& g, const PathSeq& p, const PathSeq& q,
                                   bool meet_side) {
  validate_path(g, p);
  validate_path(g, q);
  EdgeVector dp = path_vector(g, p.darts);
  EdgeVector dq = path_vector(g, q.darts);
  FacePotential phi = face_potential(g, dp - dq);
  EdgeVector vec = clipped_difference(g, dp, phi, meet_side);

  for (Dart d : induced_darts(vec))
    if (!p.contains(d) && !q.contains(d))
      fail(errc::not_a_path, "induced dart " + dart_token(d) + " outside P u Q");

  MeetJoinResult res = decompose(g, vec);
  // The decomposition cycles of the meet are clockwise, of the join
  // counterclockwise; the result path bounds P and Q from the proper side.
  for (int orient : res.cycle_orientation)
    if (orient != (meet_side ? +1 : -1))
      fail(errc::not_a_path, meet_side ? "counterclockwise cycle in meet decomposition"
                                       : "clockwise cycle in join decomposition");
  Comparison cp = compare(g, res.path, p);
  Comparison cq = compare(g, res.path, q);
  Comparison want = meet_side ? Comparison::RightOf : Comparison::LeftOf;
  if ((cp != want && cp != Comparison::Equal) || (cq != want && cq != Comparison::Equal))
    fail(errc::not_a_path, "meet/join path does not bound its arguments");
  return res;
}

}  // namespace detail

inline MeetJoinResult meet(const PlaneGraph& g, const PathSeq& p, const PathSeq& q) {
  return detail::meet_or_join(g, p, q, true);
}

inline MeetJoinResult join(const PlaneGraph& g, const PathSeq& p, const PathSeq& q) {
  return detail::meet_or_join(g, p, q, false);
}

// In an s-t-plane graph the meet is the lowermost path of G[E(P u Q)] and the
// join its uppermost path. Cross-checked against the general construction.
inline PathSeq meet_st_planar(const PlaneGraph& g, const PathSeq& p, const PathSeq& q) {
  validate_path(g, p);
  validate_path(g, q);
  if (!is_st_planar(g)) fail(errc::not_st_planar_embedding, "embedding is not s-t-planar");
  std::vector<EdgeId> keep = p.edge_set();
  for (Dart d : q.darts) keep.push_back(edge_of(d));
  Subgraph sub = restrict_to_edges(g, keep);
  PathSeq low{sub.path_to_orig(lowermost_path(sub.graph).darts)};
  if (low != meet(g, p, q).path) fail(errc::not_a_path, "s-t-planar meet disagrees with general meet");
  return low;
}

inline PathSeq join_st_planar(const PlaneGraph& g, const PathSeq& p, const PathSeq& q) {
  validate_path(g, p);
  validate_path(g, q);
  if (!is_st_planar(g)) fail(errc::not_st_planar_embedding, "embedding is not s-t-planar");
  std::vector<EdgeId> keep = p.edge_set();
  for (Dart d : q.darts) keep.push_back(edge_of(d));
  Subgraph sub = restrict_to_edges(g, keep);
  PathSeq up{sub.path_to_orig(uppermost_path(sub.graph).darts)};
  if (up != join(g, p, q).path) fail(errc::not_a_path, "s-t-planar join disagrees with general join");
  return up;
}

// Self-test: "P uppermost in G[E(P u Q)]", "Q lowermost there" and
// "compare(P,Q) = LeftOf" must agree.
inline bool equivalence_check(const PlaneGraph& g, const PathSeq& p, const PathSeq& q) {
  validate_path(g, p);
  validate_path(g, q);
  if (!is_st_planar(g)) fail(errc::not_st_planar_embedding, "embedding is not s-t-planar");
  if (p == q) return true;
  std::vector<EdgeId> keep = p.edge_set();
  for (Dart d : q.darts) keep.push_back(edge_of(d));
  Subgraph sub = restrict_to_edges(g, keep);
  bool p_upper = sub.path_to_orig(uppermost_path(sub.graph).darts) == p.darts;
  bool q_lower = sub.path_to_orig(lowermost_path(sub.graph).darts) == q.darts;
  bool left = compare(g, p, q) == Comparison::LeftOf;
  return p_upper == q_lower && q_lower == left;
}

}  // namespace pathlattice
