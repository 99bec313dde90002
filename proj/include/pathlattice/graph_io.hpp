#pragma once

#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "pathlattice/plane_graph.hpp"

namespace pathlattice {

// Line-based graph text format ('#' starts a comment):
//   vertices <n>
//   edge <id> <tail> <head> [cap <nonneg-integer>]
//   rot <vertex> <dart>...        one mandatory line per vertex, ccw leaving order
//   source <v>
//   sink <v>
//   outer <dart>
//   undirected                    optional; both darts get the edge capacity
inline GraphDescription parse_graph_description(std::istream& in) {
  GraphDescription desc;
  bool have_vertices = false, have_source = false, have_sink = false, have_outer = false;
  std::vector<char> edge_seen, rot_seen;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string directive;
    if (!(ls >> directive)) continue;
    auto bad = [&](const std::string& why) {
      fail(errc::parse_error, "line " + std::to_string(lineno) + ": " + why);
    };
    if (directive == "vertices") {
      int n;
      if (!(ls >> n) || n <= 0) bad("vertices needs a positive count");
      desc.vertex_count = n;
      desc.rotation.assign(n, {});
      rot_seen.assign(n, 0);
      have_vertices = true;
    } else if (directive == "edge") {
      int id, t, h;
      if (!(ls >> id >> t >> h) || id < 0) bad("edge needs <id> <tail> <head>");
      if (!have_vertices || t < 0 || t >= desc.vertex_count || h < 0 || h >= desc.vertex_count)
        bad("edge endpoint out of range");
      if (id >= static_cast<int>(desc.edges.size())) {
        desc.edges.resize(id + 1, {-1, -1});
        desc.edge_cap.resize(id + 1, 1);
        edge_seen.resize(id + 1, 0);
      }
      if (edge_seen[id]) bad("edge id repeated");
      edge_seen[id] = 1;
      desc.edges[id] = {t, h};
      std::string kw;
      if (ls >> kw) {
        long long cap;
        if (kw != "cap" || !(ls >> cap) || cap < 0) bad("expected 'cap <nonneg-integer>'");
        desc.edge_cap[id] = cap;
      }
      if (ls >> kw) bad("trailing input after edge");
    } else if (directive == "rot") {
      int v;
      if (!(ls >> v)) bad("rot needs a vertex");
      if (!have_vertices || v < 0 || v >= desc.vertex_count) bad("rot vertex out of range");
      if (rot_seen[v]) bad("duplicate rot line for vertex " + std::to_string(v));
      rot_seen[v] = 1;
      std::string tok;
      while (ls >> tok) desc.rotation[v].push_back(parse_dart_token(tok));
    } else if (directive == "source") {
      if (!(ls >> desc.source)) bad("source needs a vertex");
      have_source = true;
    } else if (directive == "sink") {
      if (!(ls >> desc.sink)) bad("sink needs a vertex");
      have_sink = true;
    } else if (directive == "outer") {
      std::string tok;
      if (!(ls >> tok)) bad("outer needs a dart");
      desc.outer_dart = parse_dart_token(tok);
      have_outer = true;
    } else if (directive == "undirected") {
      desc.undirected = true;
    } else {
      bad("unknown directive '" + directive + "'");
    }
  }
  if (!have_vertices) fail(errc::parse_error, "missing 'vertices'");
  if (!have_source || !have_sink) fail(errc::parse_error, "missing 'source'/'sink'");
  if (!have_outer) fail(errc::parse_error, "missing 'outer'");
  for (std::size_t id = 0; id < edge_seen.size(); ++id)
    if (!edge_seen[id]) fail(errc::parse_error, "edge ids are not dense: missing " + std::to_string(id));
  for (int v = 0; v < desc.vertex_count; ++v)
    if (!rot_seen[v]) fail(errc::missing_rotation_entry, "no rot line for vertex " + std::to_string(v));
  return desc;
}

inline GraphDescription parse_graph_description(const std::string& text) {
  std::istringstream in(text);
  return parse_graph_description(in);
}

inline GraphDescription load_graph_description(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::parse_error, "cannot open graph file '" + path + "'");
  return parse_graph_description(in);
}

inline std::string format_path(const std::vector<Dart>& darts) {
  std::string out;
  for (std::size_t i = 0; i < darts.size(); ++i) {
    if (i) out += ' ';
    out += dart_token(darts[i]);
  }
  return out;
}

inline std::vector<Dart> parse_path_tokens(const std::string& text) {
  std::istringstream in(text);
  std::vector<Dart> darts;
  std::string tok;
  while (in >> tok) darts.push_back(parse_dart_token(tok));
  return darts;
}

}  // namespace pathlattice
