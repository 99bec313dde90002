#pragma once

#include <deque>
#include <vector>

#include "pathlattice/plane_graph.hpp"

namespace pathlattice {

// Integer vector indexed by edges. Evaluating it on a backward dart negates
// the edge entry.
struct EdgeVector {
  std::vector<long long> values;

  explicit EdgeVector(int edge_count = 0) : values(edge_count, 0) {}

  long long operator()(Dart d) const {
    long long v = values[edge_of(d)];
    return is_forward(d) ? v : -v;
  }
  long long& operator[](EdgeId e) { return values[e]; }
  long long operator[](EdgeId e) const { return values[e]; }
  int edge_count() const { return static_cast<int>(values.size()); }

  EdgeVector& operator+=(const EdgeVector& o) {
    for (std::size_t i = 0; i < values.size(); ++i) values[i] += o.values[i];
    return *this;
  }
  EdgeVector& operator-=(const EdgeVector& o) {
    for (std::size_t i = 0; i < values.size(); ++i) values[i] -= o.values[i];
    return *this;
  }
  friend EdgeVector operator+(EdgeVector a, const EdgeVector& b) { return a += b; }
  friend EdgeVector operator-(EdgeVector a, const EdgeVector& b) { return a -= b; }
  friend EdgeVector operator*(long long c, EdgeVector a) {
    for (auto& v : a.values) v *= c;
    return a;
  }
  friend bool operator==(const EdgeVector&, const EdgeVector&) = default;
};

// Integer vector indexed by faces with value 0 on the infinite face.
struct FacePotential {
  std::vector<long long> values;

  long long operator[](FaceId f) const { return values[f]; }
  int face_count() const { return static_cast<int>(values.size()); }
  friend bool operator==(const FacePotential&, const FacePotential&) = default;
};

// delta of a path or cycle: +1 on edges used forward, -1 used backward.
inline EdgeVector path_vector(const PlaneGraph& g, const std::vector<Dart>& darts) {
  EdgeVector v(g.edge_count());
  for (Dart d : darts) {
    if (v[edge_of(d)] != 0) fail(errc::repeated_edge, "dart " + dart_token(d) + " reuses an edge");
    v[edge_of(d)] = is_forward(d) ? 1 : -1;
  }
  return v;
}

// delta_f of a bounded face: its clockwise boundary. The stored orbit traces
// the left side (counterclockwise for bounded faces), so this negates it.
inline EdgeVector face_boundary_vector(const PlaneGraph& g, FaceId f) {
  if (f == g.infinite_face())
    fail(errc::infinite_face_boundary_requested, "f_inf has no basis vector");
  EdgeVector v(g.edge_count());
  for (Dart d : g.face(f).boundary) v[edge_of(d)] -= is_forward(d) ? 1 : -1;
  return v;
}

// Net outflow per vertex.
inline std::vector<long long> vertex_imbalance(const PlaneGraph& g, const EdgeVector& v) {
  std::vector<long long> net(g.vertex_count(), 0);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    net[g.edges()[e].first] += v[e];
    net[g.edges()[e].second] -= v[e];
  }
  return net;
}

inline bool is_circulation(const PlaneGraph& g, const EdgeVector& v) {
  for (long long x : vertex_imbalance(g, v))
    if (x != 0) return false;
  return true;
}

// The unique phi with phi(f_inf) = 0 and delta(d) = phi(right(d)) - phi(left(d)),
// found by breadth-first traversal of the dual from f_inf. Every non-tree
// dual edge is checked, so a non-circulation input is rejected.
inline FacePotential face_potential(const PlaneGraph& g, const EdgeVector& c) {
  FacePotential phi;
  phi.values.assign(g.face_count(), 0);
  std::vector<char> known(g.face_count(), 0);
  known[g.infinite_face()] = 1;
  std::deque<FaceId> queue = {g.infinite_face()};
  while (!queue.empty()) {
    FaceId f = queue.front();
    queue.pop_front();
    for (Dart d : g.face(f).boundary) {
      // f = left(d); crossing d from left to right adds delta(d).
      FaceId r = g.right_face(d);
      long long val = phi.values[f] + c(d);
      if (!known[r]) {
        known[r] = 1;
        phi.values[r] = val;
        queue.push_back(r);
      } else if (phi.values[r] != val) {
        fail(errc::not_a_circulation, "potential is inconsistent across " + dart_token(d));
      }
    }
  }
  return phi;
}

// D(c) = darts with positive value, in id order.
inline std::vector<Dart> induced_darts(const EdgeVector& c) {
  std::vector<Dart> out;
  for (EdgeId e = 0; e < c.edge_count(); ++e) {
    if (c[e] > 0) out.push_back(forward_dart(e));
    if (c[e] < 0) out.push_back(backward_dart(e));
  }
  return out;
}

}  // namespace pathlattice
