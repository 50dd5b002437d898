#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <sstream>

#include "multitwist/enumerate.hpp"
#include "multitwist/errors.hpp"
#include "multitwist/homology.hpp"
#include "multitwist/necklace.hpp"
#include "multitwist/text_format.hpp"
#include "multitwist/torelli.hpp"
#include "multitwist/verify.hpp"

namespace multitwist::cli {

namespace {

using json = nlohmann::ordered_json;

struct Options {
  std::string format = "text";
  std::string graph_path;
  std::string twist_path;
  std::string twist_out;
  std::vector<std::string> marks;
  std::vector<std::string> edges;
  std::string edge;
  std::string from, to;
  int k = 2;
  int genus = 2;
  std::optional<int> max_edges;
  std::string mode = "system";
  bool dedup = true;
  std::uint64_t seed = 1;
  int exponent_bound = 2;
  std::size_t samples = 100;
  std::optional<double> budget;
};

/// A report: facts shared by both output formats, plus the exit code.
struct Report {
  int code = kOk;
  json facts = json::object();
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

SurfaceGraph load_graph(const Options& o) {
  try {
    return parse_surface_graph(read_file(o.graph_path));
  } catch (const ParseError& e) {
    throw ParseError(0, o.graph_path + ": " + e.what());
  }
}

MultiTwist load_twist(const SurfaceGraph& g, const Options& o) {
  if (o.twist_path.empty()) return MultiTwist::identity(g);
  try {
    return parse_multi_twist(g, read_file(o.twist_path));
  } catch (const ParseError& e) {
    throw ParseError(0, o.twist_path + ": " + e.what());
  }
}

json edge_names(const SurfaceGraph& g, const std::vector<std::size_t>& edges) {
  json out = json::array();
  for (std::size_t e : edges) out.push_back(g.edge(e).name);
  return out;
}

json twist_json(const SurfaceGraph& g, const MultiTwist& t) {
  json out = json::object();
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    if (t[e] != 0) out[g.edge(e).name] = t[e];
  }
  return out;
}

json walk_json(const SurfaceGraph& g, const std::vector<WalkStep>& steps) {
  json out = json::array();
  for (const auto& s : steps) {
    out.push_back((s.direction == Direction::Forward ? "+" : "-") + g.edge(s.edge).name);
  }
  return out;
}

std::string join(const json& names) {
  std::string out;
  for (const auto& n : names) {
    if (!out.empty()) out += ' ';
    out += n.is_string() ? n.get<std::string>() : n.dump();
  }
  return out;
}

std::string twist_text(const json& twist) {
  std::string out;
  for (const auto& [name, value] : twist.items()) {
    if (!out.empty()) out += ' ';
    out += name + "=" + value.dump();
  }
  return out.empty() ? "identity" : out;
}

Mode parse_mode(const std::string& s) {
  if (s == "system") return Mode::System;
  if (s == "general") return Mode::General;
  throw ParseError(0, "unknown mode '" + s + "'");
}

// ---------------------------------------------------------------------------
// Verbs

Report do_validate(const Options& o) {
  const auto g = load_graph(o);
  Report r;
  const auto violations = validate(g);
  r.facts["mode"] = std::string(to_string(g.mode()));
  r.facts["valid"] = violations.empty();
  r.facts["violations"] = json::array();
  for (const auto& v : violations) {
    r.facts["violations"].push_back(
        {{"rule", std::string(to_string(v.rule))}, {"subject", v.subject}, {"message", v.message}});
  }
  r.code = violations.empty() ? kOk : kNegative;
  return r;
}

Report do_genus(const Options& o) {
  Report r;
  r.facts["genus"] = genus(load_graph(o));
  return r;
}

Report do_necklaces(const Options& o) {
  const auto g = load_graph(o);
  const auto p = necklace_partition(g);
  Report r;
  r.facts["necklaces"] = json::array();
  for (const auto& n : p.necklaces) r.facts["necklaces"].push_back(edge_names(g, n));
  r.facts["separating"] = edge_names(g, p.separating);
  r.facts["count"] = p.count();
  return r;
}

Report do_check(const Options& o) {
  const auto g = load_graph(o);
  const auto t = load_twist(g, o);
  const auto report = torelli_membership(g, t);
  Report r;
  r.facts["member"] = report.member;
  r.facts["violations"] = json::array();
  for (const auto& v : report.violations) {
    r.facts["violations"].push_back(
        {{"necklace", edge_names(report.graph, v.necklace)}, {"exponent_sum", v.exponent_sum}});
  }
  r.code = report.member ? kOk : kNegative;
  return r;
}

Report do_rank(const Options& o) {
  const auto g = load_graph(o);
  const auto report = multitwist_subgroup_rank(g);
  Report r;
  r.facts["rank"] = report.rank;
  r.facts["basis"] = json::array();
  for (const auto& t : report.basis) r.facts["basis"].push_back(twist_json(g, t));
  return r;
}

Report do_invariants(const Options& o) {
  const auto g = load_graph(o);
  const auto inv = system_invariants(g);
  Report r;
  r.facts["pieces"] = json::array();
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    r.facts["pieces"].push_back({{"vertex", g.vertex(v).name},
                                 {"type", std::string(to_string(piece_type(g, v)))},
                                 {"d", d_invariant(g, v)}});
  }
  r.facts["total_defect"] = inv.total_defect;
  r.facts["irregular_pieces"] = inv.irregular_pieces;
  return r;
}

Report do_bounds(const Options& o) {
  const auto g = load_graph(o);
  const auto b = rank_upper_bounds(g);
  const int rank = multitwist_subgroup_rank(g).rank;
  Report r;
  r.facts["genus"] = b.genus;
  r.facts["rank"] = rank;
  r.facts["total_defect"] = b.total_defect;
  r.facts["irregular_pieces"] = b.irregular_pieces;
  r.facts["generic"] = b.generic;
  r.facts["refined"] = b.refined;
  r.facts["multitwist"] = b.multitwist;
  r.facts["conditional"] = b.conditional_2g4 ? json(*b.conditional_2g4) : json(nullptr);
  r.facts["embedded_piece"] = b.embedded_piece ? json(*b.embedded_piece) : json(nullptr);
  r.facts["exceptional_piece"] = b.exceptional_piece ? json(*b.exceptional_piece) : json(nullptr);
  const bool holds = rank <= b.generic && rank <= b.multitwist &&
                     (!b.conditional_2g4 || rank <= *b.conditional_2g4);
  r.facts["holds"] = holds;
  r.code = holds ? kOk : kNegative;
  return r;
}

Report do_abelian_bound(const Options& o) {
  const auto g = load_graph(o);
  Decoration d;
  d.marked.insert(o.marks.begin(), o.marks.end());
  Report r;
  r.facts["marked"] = json(d.marked);
  r.facts["bound"] = abelian_rank_bound(g, d);
  return r;
}

Report do_two_circles(const Options& o) {
  const auto g = load_graph(o);
  const auto [a, b] = two_transversal_circles(g, g.edge_index(o.edge));
  Report r;
  r.facts["edge"] = o.edge;
  r.facts["a"] = walk_json(g, a.steps);
  r.facts["b"] = walk_json(g, b.steps);
  return r;
}

Report do_paths(const Options& o) {
  const auto g = load_graph(o);
  if (o.k < 1) throw PreconditionError("-k must be positive");
  const auto paths = edge_disjoint_paths(g, g.vertex_index(o.from), g.vertex_index(o.to),
                                         static_cast<std::size_t>(o.k));
  Report r;
  r.facts["from"] = o.from;
  r.facts["to"] = o.to;
  r.facts["k"] = o.k;
  r.facts["found"] = paths.has_value();
  r.facts["paths"] = json::array();
  if (paths) {
    for (const auto& p : *paths) r.facts["paths"].push_back(walk_json(g, p.steps));
  }
  r.code = paths ? kOk : kNegative;
  return r;
}

Report do_bp(const Options& o) {
  const auto g = load_graph(o);
  std::vector<std::set<std::size_t>> sets;
  if (!o.edges.empty()) {
    std::set<std::size_t> s;
    for (const auto& name : o.edges) s.insert(g.edge_index(name));
    sets.push_back(std::move(s));
  } else {
    for (const auto& n : necklace_partition(g).necklaces) {
      if (n.size() >= 2) sets.emplace_back(n.begin(), n.end());
    }
  }
  Report r;
  r.facts["necklaces"] = json::array();
  bool all = true;
  for (const auto& s : sets) {
    const bool bp = necklace_is_bp(g, s);
    all = all && bp;
    r.facts["necklaces"].push_back(
        {{"edges", edge_names(g, {s.begin(), s.end()})}, {"bp", bp}});
  }
  r.facts["all_bp"] = all;
  r.code = all ? kOk : kNegative;
  return r;
}

Report do_normalize(const Options& o) {
  const auto g = load_graph(o);
  const auto n = normalize(g, load_twist(g, o));
  if (!o.twist_out.empty()) {
    std::ofstream out(o.twist_out);
    if (!out) throw ParseError(0, "cannot write '" + o.twist_out + "'");
    out << serialize(n.graph, n.twist);
  }
  Report r;
  r.facts["graph"] = serialize(n.graph);
  r.facts["twist"] = twist_json(n.graph, n.twist);
  return r;
}

EnumSpec enum_spec(const Options& o) {
  EnumSpec spec;
  spec.genus = o.genus;
  spec.max_edges = o.max_edges;
  spec.mode = parse_mode(o.mode);
  spec.dedup = o.dedup;
  check_spec(spec);
  return spec;
}

Report do_enumerate(const Options& o) {
  const auto spec = enum_spec(o);
  Report r;
  r.facts["genus"] = spec.genus;
  r.facts["max_edges"] = spec.effective_max_edges();
  r.facts["mode"] = std::string(to_string(spec.mode));
  r.facts["dedup"] = spec.dedup;
  json graphs = json::array();
  for_each_system(spec, [&](const SurfaceGraph& g) {
    graphs.push_back(serialize(g));
    return true;
  });
  r.facts["count"] = graphs.size();
  r.facts["graphs"] = std::move(graphs);
  return r;
}

Report do_verify(const Options& o) {
  const auto spec = enum_spec(o);
  VerifyOptions options;
  options.seed = o.seed;
  options.exponent_bound = o.exponent_bound;
  options.random_samples = o.samples;
  options.budget_seconds = o.budget;
  const auto report = verify_theorems(spec, options);
  Report r;
  r.facts["genus"] = spec.genus;
  r.facts["max_edges"] = spec.effective_max_edges();
  r.facts["mode"] = std::string(to_string(spec.mode));
  r.facts["seed"] = o.seed;
  r.facts["graphs"] = report.graphs;
  r.facts["twist_pairs"] = report.twist_pairs;
  r.facts["seconds"] = report.seconds;
  r.facts["complete"] = report.complete;
  r.facts["checks"] = json::array();
  for (const auto& c : report.checks) {
    r.facts["checks"].push_back({{"name", c.name},
                                 {"statement", c.statement},
                                 {"passed", c.passed},
                                 {"failed", c.failed},
                                 {"counterexamples", c.counterexamples}});
  }
  r.facts["all_passed"] = report.all_passed();
  r.code = report.all_passed() && report.complete ? kOk : kNegative;
  return r;
}

// ---------------------------------------------------------------------------
// Text rendering (from the same facts as the structured output)

void render_text(const std::string& verb, const json& f, std::ostream& out) {
  if (verb == "validate") {
    out << (f["valid"].get<bool>() ? "valid" : "invalid") << '\n';
    for (const auto& v : f["violations"]) {
      out << "violation " << v["rule"].get<std::string>() << ": "
          << v["message"].get<std::string>() << '\n';
    }
  } else if (verb == "genus") {
    out << f["genus"] << '\n';
  } else if (verb == "necklaces") {
    for (const auto& n : f["necklaces"]) out << "necklace " << join(n) << '\n';
    if (!f["separating"].empty()) out << "separating " << join(f["separating"]) << '\n';
    out << "count " << f["count"] << '\n';
  } else if (verb == "check") {
    out << (f["member"].get<bool>() ? "member" : "not a member") << '\n';
    for (const auto& v : f["violations"]) {
      out << "violated necklace " << join(v["necklace"]) << " sum " << v["exponent_sum"] << '\n';
    }
  } else if (verb == "rank") {
    out << "rank " << f["rank"] << '\n';
    for (const auto& t : f["basis"]) out << "basis " << twist_text(t) << '\n';
  } else if (verb == "invariants") {
    for (const auto& p : f["pieces"]) {
      out << "piece " << p["vertex"].get<std::string>() << ' ' << p["type"].get<std::string>()
          << " d " << p["d"] << '\n';
    }
    out << "total_defect " << f["total_defect"] << '\n';
    out << "irregular_pieces " << f["irregular_pieces"] << '\n';
  } else if (verb == "bounds") {
    for (const char* key : {"genus", "rank", "total_defect", "irregular_pieces", "generic",
                            "refined", "multitwist"}) {
      out << key << ' ' << f[key] << '\n';
    }
    out << "conditional " << (f["conditional"].is_null() ? "none" : f["conditional"].dump());
    if (!f["embedded_piece"].is_null()) out << " embedded " << f["embedded_piece"].get<std::string>();
    if (!f["exceptional_piece"].is_null()) {
      out << " exceptional " << f["exceptional_piece"].get<std::string>();
    }
    out << '\n' << "holds " << (f["holds"].get<bool>() ? "yes" : "no") << '\n';
  } else if (verb == "abelian-bound") {
    out << "bound " << f["bound"] << '\n';
  } else if (verb == "two-circles") {
    out << "a " << join(f["a"]) << '\n' << "b " << join(f["b"]) << '\n';
  } else if (verb == "paths") {
    if (!f["found"].get<bool>()) out << "none\n";
    for (const auto& p : f["paths"]) out << "path " << join(p) << '\n';
  } else if (verb == "bp") {
    for (const auto& n : f["necklaces"]) {
      out << "necklace " << join(n["edges"]) << (n["bp"].get<bool>() ? " bp" : " not-bp") << '\n';
    }
  } else if (verb == "normalize") {
    out << f["graph"].get<std::string>();
    for (const auto& [name, value] : f["twist"].items()) {
      out << "# twist " << name << ' ' << value << '\n';
    }
  } else if (verb == "enumerate") {
    std::size_t i = 0;
    for (const auto& g : f["graphs"]) {
      out << "# graph " << i++ << '\n' << g.get<std::string>() << '\n';
    }
    out << "# count " << f["count"] << '\n';
  } else if (verb == "verify") {
    for (const auto& c : f["checks"]) {
      out << (c["failed"].get<std::size_t>() == 0 ? "PASS " : "FAIL ")
          << c["name"].get<std::string>() << " passed " << c["passed"] << " failed "
          << c["failed"] << '\n';
      for (const auto& x : c["counterexamples"]) out << x.get<std::string>();
    }
    out << "graphs " << f["graphs"] << " twist_pairs " << f["twist_pairs"] << " seconds "
        << f["seconds"] << (f["complete"].get<bool>() ? "" : " incomplete") << '\n';
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Dehn multi-twists and the Torelli group on curve-system graphs", "multitwist"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "text or structured")
      ->check(CLI::IsMember({"text", "structured"}));

  std::map<std::string, std::function<Report(const Options&)>> handlers;
  auto verb = [&](const char* name, const char* help, auto handler) {
    handlers[name] = handler;
    return app.add_subcommand(name, help);
  };
  auto graph_arg = [&](CLI::App* sub) {
    sub->add_option("graph", o.graph_path, "surface graph file")->required();
    return sub;
  };

  graph_arg(verb("validate", "check the graph invariants of its mode", do_validate));
  graph_arg(verb("genus", "genus of the closed surface", do_genus));
  graph_arg(verb("necklaces", "homology-equivalence classes of circles", do_necklaces));
  graph_arg(verb("check", "Torelli membership of a multi-twist", do_check))
      ->add_option("--twist", o.twist_path, "multi-twist file")
      ->required();
  graph_arg(verb("rank", "rank and basis of the multi-twist Torelli subgroup", do_rank));
  graph_arg(verb("invariants", "piece defects d(Q) and their totals", do_invariants));
  graph_arg(verb("bounds", "rank upper bounds", do_bounds));
  graph_arg(verb("abelian-bound", "abelian rank bound for a decoration", do_abelian_bound))
      ->add_option("--mark", o.marks, "vertex carrying a pseudo-Anosov restriction");
  graph_arg(verb("two-circles", "two transversal circles through one circle", do_two_circles))
      ->add_option("--edge", o.edge, "circle to cross")
      ->required();
  {
    auto* sub = graph_arg(verb("paths", "edge-disjoint paths between two pieces", do_paths));
    sub->add_option("--from", o.from, "start vertex")->required();
    sub->add_option("--to", o.to, "end vertex")->required();
    sub->add_option("-k", o.k, "number of paths")->capture_default_str();
  }
  graph_arg(verb("bp", "BP-necklace test", do_bp))
      ->add_option("--edges", o.edges, "circles of one necklace (default: every necklace)");
  {
    auto* sub = graph_arg(verb("normalize", "reduce a general submanifold to a system", do_normalize));
    sub->add_option("--twist", o.twist_path, "multi-twist file");
    sub->add_option("--twist-out", o.twist_out, "write the normalized multi-twist here");
  }
  for (const char* name : {"enumerate", "verify"}) {
    auto* sub = std::string(name) == "enumerate"
                    ? verb(name, "curve systems of a given genus", do_enumerate)
                    : verb(name, "check every property over an enumeration", do_verify);
    sub->add_option("--genus", o.genus, "surface genus")->capture_default_str();
    sub->add_option("--max-edges", o.max_edges, "maximal number of circles (default 3g-3)");
    sub->add_option("--mode", o.mode, "system or general")->capture_default_str();
    sub->add_flag("--dedup,!--no-dedup", o.dedup, "one graph per isomorphism class");
    if (std::string(name) == "verify") {
      sub->add_option("--seed", o.seed, "seed for sampled multi-twists")->capture_default_str();
      sub->add_option("--exponent-bound", o.exponent_bound, "exponents in [-b, b]")
          ->capture_default_str();
      sub->add_option("--samples", o.samples, "random multi-twists per large graph")
          ->capture_default_str();
      sub->add_option("--budget", o.budget, "seconds before stopping early");
    }
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  const auto* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  Report report;
  try {
    report = handlers.at(name)(o);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  if (o.format == "structured") {
    json doc = json::object();
    doc["schema"] = kSchema;
    doc["command"] = name;
    doc["exit_code"] = report.code;
    for (auto& [key, value] : report.facts.items()) doc[key] = value;
    out << doc.dump(2) << '\n';
  } else {
    render_text(name, report.facts, out);
  }
  return report.code;
}

}  // namespace multitwist::cli
