#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pathlattice/errors.hpp"

namespace pathlattice {

using Vertex = int;
using EdgeId = int;
using FaceId = int;

// A dart is one of the two orientations of an edge, encoded as
// 2 * edge-id + sign-bit (0 = forward, 1 = backward).
using Dart = int;

inline Dart forward_dart(EdgeId e) { return 2 * e; }
inline Dart backward_dart(EdgeId e) { return 2 * e + 1; }
inline Dart reverse(Dart d) { return d ^ 1; }
inline EdgeId edge_of(Dart d) { return d >> 1; }
inline bool is_forward(Dart d) { return (d & 1) == 0; }

inline std::string dart_token(Dart d) {
  return (is_forward(d) ? "+" : "-") + std::to_string(edge_of(d));
}

inline Dart parse_dart_token(const std::string& tok) {
  if (tok.size() < 2 || (tok[0] != '+' && tok[0] != '-'))
    fail(errc::parse_error, "bad dart token '" + tok + "'");
  std::size_t pos = 0;
  int id;
  try {
    id = std::stoi(tok.substr(1), &pos);
  } catch (const std::exception&) {
    fail(errc::parse_error, "bad dart token '" + tok + "'");
  }
  if (pos + 1 != tok.size() || id < 0)
    fail(errc::parse_error, "bad dart token '" + tok + "'");
  return tok[0] == '+' ? forward_dart(id) : backward_dart(id);
}

struct Face {
  FaceId id = -1;
  // Cyclic dart sequence of the orbit whose left side is this face.
  std::vector<Dart> boundary;
};

// Input description of an embedded graph. The rotation lists the darts
// leaving each vertex in counterclockwise order.
struct GraphDescription {
  int vertex_count = 0;
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<std::vector<Dart>> rotation;
  Vertex source = -1;
  Vertex sink = -1;
  Dart outer_dart = -1;
  std::vector<long long> edge_cap;  // empty means default of 1 per edge
  bool undirected = false;
};

// Immutable embedded planar graph over darts. Faces are the orbits of
// the left-successor map succ(d) = pi^-1(rev(d)); the orbit of d is the
// face to the left of d, so bounded faces are traced counterclockwise.
class PlaneGraph {
 public:
  static PlaneGraph build(const GraphDescription& desc) { return PlaneGraph(desc); }

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int dart_count() const { return 2 * edge_count(); }
  int face_count() const { return static_cast<int>(faces_.size()); }

  Vertex tail(Dart d) const {
    const auto& e = edges_[edge_of(d)];
    return is_forward(d) ? e.first : e.second;
  }
  Vertex head(Dart d) const { return tail(reverse(d)); }

  Vertex source() const { return source_; }
  Vertex sink() const { return sink_; }
  Dart outer_dart() const { return outer_dart_; }

  const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }
  const std::vector<Dart>& rotation(Vertex v) const { return rotation_[v]; }

  // Next/previous dart leaving tail(d) in counterclockwise order.
  Dart next_ccw(Dart d) const { return pi_[d]; }
  Dart prev_ccw(Dart d) const { return pi_inv_[d]; }

  // Successor along the boundary of the face left of d.
  Dart left_succ(Dart d) const { return pi_inv_[reverse(d)]; }

  FaceId left_face(Dart d) const { return left_face_[d]; }
  FaceId right_face(Dart d) const { return left_face_[reverse(d)]; }

  const std::vector<Face>& faces() const { return faces_; }
  const Face& face(FaceId f) const { return faces_[f]; }
  FaceId infinite_face() const { return f_inf_; }

  bool vertex_on_face(Vertex v, FaceId f) const {
    for (Dart d : faces_[f].boundary)
      if (tail(d) == v) return true;
    return false;
  }

 private:
  explicit PlaneGraph(const GraphDescription& desc)
      : n_(desc.vertex_count),
        edges_(desc.edges),
        rotation_(desc.rotation),
        source_(desc.source),
        sink_(desc.sink),
        outer_dart_(desc.outer_dart) {
    validate_rotation();
    check_connected();
    build_faces();
    if (f_inf_ < 0 || outer_dart_ < 0 || outer_dart_ >= dart_count())
      fail(errc::parse_error, "outer dart out of range");
    if (!vertex_on_face(sink_, f_inf_))
      fail(errc::outer_face_not_incident_to_sink,
           "sink " + std::to_string(sink_) + " is not on the outer face");
  }

  void validate_rotation() {
    if (n_ <= 0) fail(errc::parse_error, "graph has no vertices");
    if (source_ < 0 || source_ >= n_ || sink_ < 0 || sink_ >= n_)
      fail(errc::parse_error, "source/sink out of range");
    if (static_cast<int>(rotation_.size()) != n_)
      fail(errc::missing_rotation_entry, "rotation must list every vertex");
    const int nd = dart_count();
    pi_.assign(nd, -1);
    pi_inv_.assign(nd, -1);
    std::vector<char> seen(nd, 0);
    for (Vertex v = 0; v < n_; ++v) {
      const auto& rot = rotation_[v];
      for (std::size_t i = 0; i < rot.size(); ++i) {
        Dart d = rot[i];
        if (d < 0 || d >= nd)
          fail(errc::parse_error, "rotation dart out of range at vertex " + std::to_string(v));
        if (tail(d) != v)
          fail(errc::missing_rotation_entry,
               "dart " + dart_token(d) + " listed at vertex " + std::to_string(v) +
                   " but leaves vertex " + std::to_string(tail(d)));
        if (seen[d])
          fail(errc::missing_rotation_entry, "dart " + dart_token(d) + " listed twice");
        seen[d] = 1;
        pi_[d] = rot[(i + 1) % rot.size()];
      }
    }
    for (Dart d = 0; d < nd; ++d) {
      if (!seen[d])
        fail(errc::missing_rotation_entry,
             "dart " + dart_token(d) + " missing from the rotation of vertex " +
                 std::to_string(tail(d)));
      pi_inv_[pi_[d]] = d;
    }
  }

  void check_connected() {
    std::vector<char> visited(n_, 0);
    std::vector<Vertex> queue = {0};
    visited[0] = 1;
    while (!queue.empty()) {
      Vertex v = queue.back();
      queue.pop_back();
      for (Dart d : rotation_[v]) {
        Vertex w = head(d);
        if (!visited[w]) {
          visited[w] = 1;
          queue.push_back(w);
        }
      }
    }
    if (std::find(visited.begin(), visited.end(), 0) != visited.end())
      fail(errc::disconnected_graph, "graph is not connected");
  }

  void build_faces() {
    const int nd = dart_count();
    left_face_.assign(nd, -1);
    for (Dart d = 0; d < nd; ++d) {
      if (left_face_[d] >= 0) continue;
      Face f;
      f.id = static_cast<FaceId>(faces_.size());
      Dart cur = d;
      do {
        left_face_[cur] = f.id;
        f.boundary.push_back(cur);
        cur = left_succ(cur);
      } while (cur != d);
      faces_.push_back(std::move(f));
    }
    if (n_ - edge_count() + face_count() != 2)
      fail(errc::euler_violation,
           "rotation system is not planar: |V|-|E|+|F| = " +
               std::to_string(n_ - edge_count() + face_count()));
    f_inf_ = (outer_dart_ >= 0 && outer_dart_ < nd) ? left_face_[outer_dart_] : -1;
  }

  int n_;
  std::vector<std::pair<Vertex, Vertex>> edges_;
  std::vector<std::vector<Dart>> rotation_;
  Vertex source_;
  Vertex sink_;
  Dart outer_dart_;
  std::vector<Dart> pi_, pi_inv_;
  std::vector<FaceId> left_face_;
  std::vector<Face> faces_;
  FaceId f_inf_ = -1;
};

inline PlaneGraph build_graph(const GraphDescription& desc) { return PlaneGraph::build(desc); }

// ---------------------------------------------------------------------------
// Dual graph and cuts

// The dual has one vertex per face and, for every primal edge, an edge from
// the face right of the forward dart to the face left of it. Dart ids carry
// over, so the dual dart of any primal dart d runs right(d) -> left(d).
struct DualGraph {
  int vertex_count = 0;  // number of faces
  std::vector<std::pair<FaceId, FaceId>> edges;

  int degree(FaceId f) const {
    int deg = 0;
    for (const auto& [t, h] : edges) {
      if (t == f) ++deg;
      if (h == f) ++deg;
    }
    return deg;
  }
};

inline DualGraph dual(const PlaneGraph& g) {
  DualGraph d;
  d.vertex_count = g.face_count();
  d.edges.reserve(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    d.edges.emplace_back(g.right_face(forward_dart(e)), g.left_face(forward_dart(e)));
  return d;
}

struct CutCertificate {
  std::vector<Vertex> side;       // S, sorted
  std::vector<char> in_side;      // indicator over vertices
  std::vector<Dart> darts;        // Gamma^+(S), sorted by id
  bool simple = false;            // S and V\S each connected
};

namespace detail {

// Decides whether `darts` equals Gamma^+(S) for some vertex set S in the
// directed multigraph given by `edges`. Works for the primal and the dual.
inline std::optional<CutCertificate> simple_cut_impl(
    int n, const std::vector<std::pair<Vertex, Vertex>>& edges, std::vector<Dart> darts) {
  if (darts.empty()) return std::nullopt;
  std::sort(darts.begin(), darts.end());
  std::vector<char> in_cut(2 * edges.size(), 0);
  for (Dart d : darts) {
    if (d < 0 || d >= static_cast<int>(2 * edges.size())) return std::nullopt;
    in_cut[d] = 1;
  }
  auto tail = [&](Dart d) { return is_forward(d) ? edges[edge_of(d)].first : edges[edge_of(d)].second; };
  auto head = [&](Dart d) { return is_forward(d) ? edges[edge_of(d)].second : edges[edge_of(d)].first; };

  // Components of the graph without the cut edges.
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (Vertex v0 = 0; v0 < n; ++v0) {
    if (comp[v0] >= 0) continue;
    comp[v0] = ncomp;
    std::vector<Vertex> stack = {v0};
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (EdgeId e = 0; e < static_cast<int>(edges.size()); ++e) {
        if (in_cut[forward_dart(e)] || in_cut[backward_dart(e)]) continue;
        Vertex a = edges[e].first, b = edges[e].second;
        Vertex w = -1;
        if (a == v) w = b;
        else if (b == v) w = a;
        else continue;
        if (comp[w] < 0) {
          comp[w] = ncomp;
          stack.push_back(w);
        }
      }
    }
    ++ncomp;
  }

  // Every cut dart must run from an S-component to a non-S-component.
  // 0 = undecided, 1 = in S, 2 = out of S.
  std::vector<int> mark(ncomp, 0);
  for (Dart d : darts) {
    int ct = comp[tail(d)], ch = comp[head(d)];
    if (ct == ch) return std::nullopt;  // would need a vertex on both sides
    if (mark[ct] == 2 || mark[ch] == 1) return std::nullopt;
    mark[ct] = 1;
    mark[ch] = 2;
  }
  // Components never touched by a cut dart would be unreachable across the
  // cut; in a connected graph that cannot happen for a genuine cut.
  for (int c = 0; c < ncomp; ++c)
    if (mark[c] == 0) return std::nullopt;

  CutCertificate cert;
  cert.in_side.assign(n, 0);
  for (Vertex v = 0; v < n; ++v)
    if (mark[comp[v]] == 1) {
      cert.in_side[v] = 1;
      cert.side.push_back(v);
    }
  // Gamma^+(S) must match the given set exactly.
  std::vector<Dart> gamma;
  for (EdgeId e = 0; e < static_cast<int>(edges.size()); ++e)
    for (Dart d : {forward_dart(e), backward_dart(e)})
      if (cert.in_side[tail(d)] && !cert.in_side[head(d)]) gamma.push_back(d);
  std::sort(gamma.begin(), gamma.end());
  if (gamma != darts) return std::nullopt;
  cert.darts = std::move(gamma);
  cert.simple = (ncomp == 2);
  return cert;
}

}  // namespace detail

inline std::optional<CutCertificate> is_simple_cut(const PlaneGraph& g,
                                                   const std::vector<Dart>& darts) {
  return detail::simple_cut_impl(g.vertex_count(), g.edges(), darts);
}

inline std::optional<CutCertificate> is_simple_cut(const DualGraph& g,
                                                   const std::vector<Dart>& darts) {
  return detail::simple_cut_impl(g.vertex_count, g.edges, darts);
}

// Orders a dart set into a simple cycle, or fails with NotASimpleCycle.
inline std::vector<Dart> order_simple_cycle(const PlaneGraph& g, const std::vector<Dart>& darts) {
  if (darts.empty()) fail(errc::not_a_simple_cycle, "empty dart set");
  std::vector<char> edge_used(g.edge_count(), 0);
  std::vector<Dart> out_of(g.vertex_count(), -1);
  for (Dart d : darts) {
    if (edge_used[edge_of(d)]) fail(errc::not_a_simple_cycle, "repeated edge");
    edge_used[edge_of(d)] = 1;
    if (out_of[g.tail(d)] != -1) fail(errc::not_a_simple_cycle, "vertex left twice");
    out_of[g.tail(d)] = d;
  }
  std::vector<Dart> cycle;
  Dart d = *std::min_element(darts.begin(), darts.end());
  Vertex start = g.tail(d);
  Vertex v = start;
  do {
    Dart cur = out_of[v];
    if (cur == -1) fail(errc::not_a_simple_cycle, "walk has a dead end");
    cycle.push_back(cur);
    v = g.head(cur);
  } while (v != start && cycle.size() <= darts.size());
  if (cycle.size() != darts.size()) fail(errc::not_a_simple_cycle, "darts do not form one cycle");
  return cycle;
}

// Cycle/cut duality self-check: the dual darts of a simple cycle must form a
// simple cut in the dual graph.
inline bool cycle_cut_duality_check(const PlaneGraph& g, const std::vector<Dart>& darts) {
  order_simple_cycle(g, darts);  // validates the precondition
  DualGraph d = dual(g);
  std::vector<Dart> dual_darts;
  dual_darts.reserve(darts.size());
  for (Dart pd : darts) {
    // The dual dart of pd runs right(pd) -> left(pd); for a forward primal
    // dart that is the forward dual dart, for a backward one the reverse.
    dual_darts.push_back(pd);
  }
  auto cert = is_simple_cut(d, dual_darts);
  return cert.has_value() && cert->simple;
}

// ---------------------------------------------------------------------------
// Embedded subgraph restriction

struct Subgraph {
  PlaneGraph graph;
  std::vector<int> vertex_to_sub;   // old vertex -> new vertex or -1
  std::vector<int> vertex_to_orig;  // new vertex -> old vertex
  std::vector<int> edge_to_sub;     // old edge -> new edge or -1
  std::vector<int> edge_to_orig;    // new edge -> old edge

  Dart dart_to_sub(Dart d) const {
    int e = edge_to_sub[edge_of(d)];
    return e < 0 ? -1 : 2 * e + (d & 1);
  }
  Dart dart_to_orig(Dart d) const { return 2 * edge_to_orig[edge_of(d)] + (d & 1); }

  std::vector<Dart> path_to_sub(const std::vector<Dart>& darts) const {
    std::vector<Dart> out;
    out.reserve(darts.size());
    for (Dart d : darts) {
      Dart m = dart_to_sub(d);
      if (m < 0) fail(errc::not_a_path, "path leaves the kept edge set");
      out.push_back(m);
    }
    return out;
  }
  std::vector<Dart> path_to_orig(const std::vector<Dart>& darts) const {
    std::vector<Dart> out;
    out.reserve(darts.size());
    for (Dart d : darts) out.push_back(dart_to_orig(d));
    return out;
  }
};

namespace detail {
struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};
}  // namespace detail

// The embedded subgraph on a kept edge set. The new infinite face is the
// face that absorbs the old one when the dropped edges are deleted.
inline Subgraph restrict_to_subgraph(const PlaneGraph& g, const std::vector<char>& keep_edge) {
  const int m = g.edge_count();
  if (static_cast<int>(keep_edge.size()) != m)
    fail(errc::parse_error, "keep set size mismatch");

  // Connectivity of G[keep] over the vertices it touches, plus s and t.
  std::vector<char> touched(g.vertex_count(), 0);
  touched[g.source()] = touched[g.sink()] = 1;
  for (EdgeId e = 0; e < m; ++e)
    if (keep_edge[e]) touched[g.edges()[e].first] = touched[g.edges()[e].second] = 1;
  {
    detail::UnionFind uf(g.vertex_count());
    for (EdgeId e = 0; e < m; ++e)
      if (keep_edge[e]) uf.unite(g.edges()[e].first, g.edges()[e].second);
    int root = uf.find(g.source());
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      if (touched[v] && uf.find(v) != root)
        fail(errc::disconnected_subgraph, "kept edges do not connect s and t");
  }

  GraphDescription desc;
  std::vector<int> vmap(g.vertex_count(), -1), vback;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!touched[v]) continue;
    vmap[v] = static_cast<int>(vback.size());
    vback.push_back(v);
  }
  std::vector<int> emap(m, -1), eback;
  for (EdgeId e = 0; e < m; ++e) {
    if (!keep_edge[e]) continue;
    emap[e] = static_cast<int>(eback.size());
    eback.push_back(e);
    desc.edges.emplace_back(vmap[g.edges()[e].first], vmap[g.edges()[e].second]);
  }
  desc.vertex_count = static_cast<int>(vback.size());
  desc.rotation.resize(desc.vertex_count);
  for (Vertex v : vback)
    for (Dart d : g.rotation(v))
      if (keep_edge[edge_of(d)])
        desc.rotation[vmap[v]].push_back(2 * emap[edge_of(d)] + (d & 1));
  desc.source = vmap[g.source()];
  desc.sink = vmap[g.sink()];

  // Old faces merge across deleted edges; the class of the old f_inf is the
  // new outer face. Any kept dart whose old left face lies in that class
  // keeps the outer region on its left.
  detail::UnionFind faces(g.face_count());
  for (EdgeId e = 0; e < m; ++e)
    if (!keep_edge[e])
      faces.unite(g.left_face(forward_dart(e)), g.right_face(forward_dart(e)));
  int outer_class = faces.find(g.infinite_face());
  desc.outer_dart = -1;
  for (EdgeId e = 0; e < m && desc.outer_dart < 0; ++e) {
    if (!keep_edge[e]) continue;
    for (Dart d : {forward_dart(e), backward_dart(e)})
      if (faces.find(g.left_face(d)) == outer_class) {
        desc.outer_dart = 2 * emap[e] + (d & 1);
        break;
      }
  }
  if (desc.outer_dart < 0) fail(errc::disconnected_subgraph, "no kept dart borders the outer region");

  return Subgraph{PlaneGraph::build(desc), std::move(vmap), std::move(vback), std::move(emap),
                  std::move(eback)};
}

inline Subgraph restrict_to_edges(const PlaneGraph& g, const std::vector<EdgeId>& keep) {
  std::vector<char> mask(g.edge_count(), 0);
  for (EdgeId e : keep) mask[e] = 1;
  return restrict_to_subgraph(g, mask);
}

}  // namespace pathlattice
