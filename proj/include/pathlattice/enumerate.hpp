#pragma once

#include <algorithm>
#include <vector>

#include "pathlattice/lattice.hpp"
#include "pathlattice/plane_graph.hpp"

namespace pathlattice {

// All simple s-t paths over darts (both orientations of every edge are
// usable), in lexicographic dart order.
inline std::vector<PathSeq> enumerate_simple_paths(const PlaneGraph& g,
                                                   std::size_t max_paths = 10000) {
  std::vector<std::vector<Dart>> leaving(g.vertex_count());
  for (Dart d = 0; d < g.dart_count(); ++d) leaving[g.tail(d)].push_back(d);
  for (auto& outs : leaving) std::sort(outs.begin(), outs.end());

  std::vector<PathSeq> paths;
  std::vector<char> edge_used(g.edge_count(), 0), head_used(g.vertex_count(), 0);
  head_used[g.source()] = 1;  // a simple path never returns to s
  std::vector<Dart> current;

  auto dfs = [&](auto&& self, Vertex v) -> void {
    for (Dart d : leaving[v]) {
      if (edge_used[edge_of(d)]) continue;
      Vertex w = g.head(d);
      if (head_used[w]) continue;
      current.push_back(d);
      if (w == g.sink()) {
        if (paths.size() >= max_paths)
          fail(errc::too_many_paths, "more than " + std::to_string(max_paths) + " simple paths");
        paths.push_back(PathSeq{current});
      } else {
        edge_used[edge_of(d)] = 1;
        head_used[w] = 1;
        self(self, w);
        edge_used[edge_of(d)] = 0;
        head_used[w] = 0;
      }
      current.pop_back();
    }
  };
  dfs(dfs, g.source());
  return paths;
}

}  // namespace pathlattice
