// Command-line front end for the path-lattice library.
//
// Usage: pathlattice <verb> <graph-file> [args...] [--json]
// Exit status: 0 success, 1 domain error, 2 usage error.

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pathlattice/pathlattice.hpp"

namespace pl = pathlattice;
using nlohmann::json;

namespace {

struct Options {
  std::string graph_file;
  std::string p_tokens, q_tokens;
  std::string paths_file, weights_file;
  std::string algo = "uppermost";
  int max_paths = 10000;
  bool as_json = false;
};

json json_path(const std::vector<pl::Dart>& darts) {
  json a = json::array();
  for (pl::Dart d : darts) a.push_back(pl::dart_token(d));
  return a;
}

void emit(const Options& opt, const json& payload, const std::string& text) {
  if (opt.as_json) {
    json out = payload;
    out["schema"] = 1;
    std::cout << out.dump() << "\n";
  } else {
    std::cout << text;
  }
}

std::vector<pl::PathSeq> load_path_file(const std::string& file) {
  std::ifstream in(file);
  if (!in) pl::fail(pl::errc::parse_error, "cannot open path file '" + file + "'");
  std::vector<pl::PathSeq> out;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto darts = pl::parse_path_tokens(line);
    if (!darts.empty()) out.push_back(pl::PathSeq{darts});
  }
  return out;
}

// Weight oracle from a file of "<integer> <dart tokens...>" lines; paths not
// listed get weight 1.
std::function<long long(const pl::PathSeq&)> load_weights(const std::string& file) {
  auto table = std::make_shared<std::map<std::vector<pl::Dart>, long long>>();
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) pl::fail(pl::errc::parse_error, "cannot open weights file '" + file + "'");
    std::string line;
    while (std::getline(in, line)) {
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      std::istringstream ls(line);
      long long w;
      if (!(ls >> w)) continue;
      std::string rest;
      std::getline(ls, rest);
      (*table)[pl::parse_path_tokens(rest)] = w;
    }
  }
  return [table](const pl::PathSeq& p) {
    auto it = table->find(p.darts);
    return it == table->end() ? 1LL : it->second;
  };
}

int run(const std::string& verb, const Options& opt) {
  pl::GraphDescription desc = pl::load_graph_description(opt.graph_file);
  pl::PlaneGraph g = pl::PlaneGraph::build(desc);
  std::ostringstream text;
  json j;
  j["verb"] = verb;

  if (verb == "faces") {
    j["faces"] = json::array();
    for (const pl::Face& f : g.faces()) {
      text << "face " << f.id << (f.id == g.infinite_face() ? " (infinite):" : ":");
      for (pl::Dart d : f.boundary) text << " " << pl::dart_token(d);
      text << "\n";
      j["faces"].push_back({{"id", f.id},
                            {"infinite", f.id == g.infinite_face()},
                            {"boundary", json_path(f.boundary)}});
    }
  } else if (verb == "dual") {
    pl::DualGraph d = pl::dual(g);
    j["vertices"] = d.vertex_count;
    j["edges"] = json::array();
    text << "vertices " << d.vertex_count << "\n";
    for (std::size_t e = 0; e < d.edges.size(); ++e) {
      text << "edge " << e << ": " << d.edges[e].first << " -> " << d.edges[e].second << "\n";
      j["edges"].push_back({{"id", e}, {"tail", d.edges[e].first}, {"head", d.edges[e].second}});
    }
  } else if (verb == "paths") {
    auto paths = pl::enumerate_simple_paths(g, opt.max_paths);
    j["paths"] = json::array();
    for (const pl::PathSeq& p : paths) {
      text << pl::format_path(p.darts) << "\n";
      j["paths"].push_back(json_path(p.darts));
    }
  } else if (verb == "compare") {
    pl::PathSeq p{pl::parse_path_tokens(opt.p_tokens)}, q{pl::parse_path_tokens(opt.q_tokens)};
    const char* c = pl::to_string(pl::compare(g, p, q));
    text << c << "\n";
    j["comparison"] = c;
  } else if (verb == "meet" || verb == "join") {
    pl::PathSeq p{pl::parse_path_tokens(opt.p_tokens)}, q{pl::parse_path_tokens(opt.q_tokens)};
    pl::MeetJoinResult r = verb == "meet" ? pl::meet(g, p, q) : pl::join(g, p, q);
    text << "path: " << pl::format_path(r.path.darts) << "\n";
    j["path"] = json_path(r.path.darts);
    j["cycles"] = json::array();
    for (std::size_t i = 0; i < r.cycles.size(); ++i) {
      const char* orient = r.cycle_orientation[i] > 0 ? "clockwise" : "counterclockwise";
      text << "cycle (" << orient << "): " << pl::format_path(r.cycles[i]) << "\n";
      j["cycles"].push_back({{"orientation", orient}, {"darts", json_path(r.cycles[i])}});
    }
  } else if (verb == "uppermost" || verb == "lowermost") {
    pl::PathSeq p = verb == "uppermost" ? pl::uppermost_path(g) : pl::lowermost_path(g);
    text << pl::format_path(p.darts) << "\n";
    j["path"] = json_path(p.darts);
  } else if (verb == "maxflow") {
    pl::CapacityMap cap = pl::CapacityMap::from_description(desc);
    if (opt.algo == "uppermost") {
      pl::UppermostFlowResult r = pl::maxflow_uppermost(g, cap);
      text << "value " << r.flow.value << "\n";
      std::vector<pl::Dart> cut = r.cut.darts;
      text << "cut:";
      for (pl::Dart d : cut) text << " " << pl::dart_token(d);
      text << "\n";
      for (const auto& [p, y] : r.packing.entries)
        text << "augment " << y << ": " << pl::format_path(p.darts) << "\n";
      j["value"] = r.flow.value;
      j["cut"] = json_path(cut);
      j["augmentations"] = json::array();
      for (const auto& [p, y] : r.packing.entries)
        j["augmentations"].push_back({{"amount", y}, {"path", json_path(p.darts)}});
    } else if (opt.algo == "dual-sp" || opt.algo == "generic") {
      pl::FlowState f =
          opt.algo == "dual-sp" ? pl::maxflow_dual_sp(g, cap) : pl::maxflow_generic(g, cap);
      text << "value " << f.value << "\n";
      j["value"] = f.value;
    } else {
      throw CLI::ValidationError("--algo must be uppermost, dual-sp, or generic");
    }
    j["algo"] = opt.algo;
  } else if (verb == "packing") {
    pl::CapacityMap cap = pl::CapacityMap::from_description(desc);
    auto r = load_weights(opt.weights_file);
    pl::PathPacking packing = pl::weighted_packing(g, cap, r);
    long long objective = packing.objective(r);
    for (const auto& [p, y] : packing.entries)
      text << y << " " << pl::format_path(p.darts) << "\n";
    text << "objective " << objective << "\n";
    j["entries"] = json::array();
    for (const auto& [p, y] : packing.entries)
      j["entries"].push_back({{"amount", y}, {"path", json_path(p.darts)}});
    j["objective"] = objective;
  } else if (verb == "verify") {
    pl::PathFamily family = pl::full_family(g, opt.max_paths);
    pl::AxiomReport rep = pl::check_axioms(g, family);
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    text << "paths: " << family.size() << "\n";
    text << "order-axioms: " << yn(rep.order_axioms) << "\n";
    text << "lattice: " << yn(rep.lattice) << "\n";
    text << "submodular: " << yn(rep.submodular) << "\n";
    text << "consecutive: " << yn(rep.consecutive) << "\n";
    for (const std::string& v : rep.violations) text << "violation: " << v << "\n";
    j["paths"] = family.size();
    j["order_axioms"] = rep.order_axioms;
    j["lattice"] = rep.lattice;
    j["submodular"] = rep.submodular;
    j["consecutive"] = rep.consecutive;
    j["violations"] = rep.violations;
  } else if (verb == "order-exists") {
    pl::PathFamily family{load_path_file(opt.paths_file)};
    pl::OrderVerdict v = pl::order_existence(g, family);
    auto path_name = [&](int i) { return pl::format_path(family[i].darts); };
    j["certificate"] = json::array();
    j["witness"] = json::array();
    if (v.satisfiable) {
      text << "satisfiable\n";
      for (auto [a, b] : v.witness) {
        text << "below: (" << path_name(a) << ") (" << path_name(b) << ")\n";
        j["witness"].push_back({{"below", path_name(a)}, {"above", path_name(b)}});
      }
    } else {
      text << "refuted\n";
      for (const pl::OrderStep& s : v.certificate) {
        text << "step: (" << path_name(s.p) << ") below (" << path_name(s.q) << ") -- " << s.reason
             << "\n";
        j["certificate"].push_back(
            {{"below", path_name(s.p)}, {"above", path_name(s.q)}, {"reason", s.reason}});
      }
    }
    text << "note: " << v.note << "\n";
    j["satisfiable"] = v.satisfiable;
    j["note"] = v.note;
  } else if (verb == "check-st-plane") {
    bool ok = pl::is_st_plane_embedding(g);
    text << (ok ? "yes" : "no") << "\n";
    j["st_plane"] = ok;
  } else {
    throw CLI::ValidationError("unknown verb '" + verb + "'");
  }

  emit(opt, j, text.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"planar path-lattice toolkit"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub, bool takes_graph = true) {
    if (takes_graph) sub->add_option("graph", opt.graph_file, "graph file")->required();
    sub->add_flag("--json", opt.as_json, "machine-readable output");
    return sub;
  };
  auto add_pq = [&](CLI::App* sub) {
    sub->add_option("P", opt.p_tokens, "first path (dart tokens)")->required();
    sub->add_option("Q", opt.q_tokens, "second path (dart tokens)")->required();
  };

  add_common(app.add_subcommand("faces", "list the faces of the embedding"));
  add_common(app.add_subcommand("dual", "print the dual graph"));
  add_common(app.add_subcommand("paths", "enumerate all simple s-t paths"))
      ->add_option("--max", opt.max_paths, "path cap");
  add_pq(add_common(app.add_subcommand("compare", "compare two paths in the left/right order")));
  add_pq(add_common(app.add_subcommand("meet", "greatest common lower bound of two paths")));
  add_pq(add_common(app.add_subcommand("join", "least common upper bound of two paths")));
  add_common(app.add_subcommand("uppermost", "leftmost simple s-t path"));
  add_common(app.add_subcommand("lowermost", "rightmost simple s-t path"));
  add_common(app.add_subcommand("maxflow", "maximum s-t flow"))
      ->add_option("--algo", opt.algo, "uppermost | dual-sp | generic");
  add_common(app.add_subcommand("packing", "greedy weighted path packing"))
      ->add_option("--weights", opt.weights_file, "weights file: '<int> <dart tokens...>' lines");
  add_common(app.add_subcommand("verify", "check lattice axioms on all simple paths"))
      ->add_option("--max-paths", opt.max_paths, "path cap");
  add_common(app.add_subcommand("order-exists", "search for a consecutive submodular order"))
      ->add_option("--paths", opt.paths_file, "family file, one path per line")
      ->required();
  add_common(app.add_subcommand("check-st-plane", "is the embedding s-t-planar?"));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    return run(app.get_subcommands().front()->get_name(), opt);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const pl::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
