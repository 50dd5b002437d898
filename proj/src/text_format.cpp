#include "multitwist/text_format.hpp"

#include <charconv>
#include <map>
#include <set>
#include <sstream>
#include <string_view>
#include <vector>

namespace multitwist {

namespace {

std::vector<std::string> tokenize(std::string line) {
  if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
  std::istringstream ss(line);
  std::vector<std::string> out;
  for (std::string tok; ss >> tok;) out.push_back(tok);
  return out;
}

template <typename Int>
Int parse_int(const std::string& tok, std::size_t line, const char* what) {
  Int value{};
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  if (!tok.empty() && tok[0] == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw ParseError(line, std::string("invalid ") + what + " '" + tok + "'");
  }
  return value;
}

void expect_arity(const std::vector<std::string>& toks, std::size_t n,
                  std::size_t line) {
  if (toks.size() != n) {
    throw ParseError(line, "'" + toks[0] + "' expects " + std::to_string(n - 1) +
                               " argument(s), got " +
                               std::to_string(toks.size() - 1));
  }
}

}  // namespace

SurfaceGraph parse_surface_graph(std::istream& in) {
  SurfaceGraph::Builder builder;
  std::map<std::string, std::size_t> vertex_lines, edge_lines;
  struct EdgeDecl {
    std::size_t line;
    std::string name, tail, head;
  };
  std::vector<EdgeDecl> edges;
  std::size_t mode_line = 0;

  std::string raw;
  for (std::size_t line = 1; std::getline(in, raw); ++line) {
    const auto toks = tokenize(raw);
    if (toks.empty()) continue;
    const auto& kw = toks[0];
    if (kw == "mode") {
      expect_arity(toks, 2, line);
      if (mode_line) {
        throw ParseError(line, "mode already set on line " + std::to_string(mode_line));
      }
      mode_line = line;
      if (toks[1] == "system") {
        builder.mode(Mode::System);
      } else if (toks[1] == "general") {
        builder.mode(Mode::General);
      } else {
        throw ParseError(line, "unknown mode '" + toks[1] + "'");
      }
    } else if (kw == "vertex") {
      expect_arity(toks, 3, line);
      const int g = parse_int<int>(toks[2], line, "genus");
      if (g < 0) throw ParseError(line, "negative genus '" + toks[2] + "'");
      if (auto [it, fresh] = vertex_lines.emplace(toks[1], line); !fresh) {
        throw ParseError(line, "duplicate vertex '" + toks[1] + "' (first on line " +
                                   std::to_string(it->second) + ")");
      }
      builder.vertex(toks[1], g);
    } else if (kw == "edge") {
      expect_arity(toks, 4, line);
      if (auto [it, fresh] = edge_lines.emplace(toks[1], line); !fresh) {
        throw ParseError(line, "duplicate edge '" + toks[1] + "' (first on line " +
                                   std::to_string(it->second) + ")");
      }
      edges.push_back({line, toks[1], toks[2], toks[3]});
    } else {
      throw ParseError(line, "unknown declaration '" + kw + "'");
    }
  }
  for (const auto& e : edges) {
    for (const auto* end : {&e.tail, &e.head}) {
      if (!vertex_lines.count(*end)) {
        throw ParseError(e.line, "unknown vertex '" + *end + "'");
      }
    }
    builder.edge(e.name, e.tail, e.head);
  }
  return builder.build();
}

SurfaceGraph parse_surface_graph(const std::string& text) {
  std::istringstream in(text);
  return parse_surface_graph(in);
}

std::string serialize(const SurfaceGraph& g) {
  std::ostringstream out;
  out << "mode " << to_string(g.mode()) << '\n';
  for (const auto& v : g.vertices()) {
    out << "vertex " << v.name << ' ' << v.genus << '\n';
  }
  for (const auto& e : g.edges()) {
    out << "edge " << e.name << ' ' << g.vertex(e.tail).name << ' '
        << g.vertex(e.head).name << '\n';
  }
  return out.str();
}

MultiTwist parse_multi_twist(const SurfaceGraph& g, std::istream& in) {
  MultiTwist t = MultiTwist::identity(g);
  std::map<std::string, std::size_t> seen;
  std::string raw;
  for (std::size_t line = 1; std::getline(in, raw); ++line) {
    const auto toks = tokenize(raw);
    if (toks.empty()) continue;
    if (toks[0] != "twist") {
      throw ParseError(line, "unknown declaration '" + toks[0] + "'");
    }
    expect_arity(toks, 3, line);
    const auto e = g.find_edge(toks[1]);
    if (!e) throw ParseError(line, "unknown edge '" + toks[1] + "'");
    if (auto [it, fresh] = seen.emplace(toks[1], line); !fresh) {
      throw ParseError(line, "duplicate twist for '" + toks[1] + "' (first on line " +
                                 std::to_string(it->second) + ")");
    }
    t.exponents[*e] = parse_int<std::int64_t>(toks[2], line, "exponent");
  }
  return t;
}

MultiTwist parse_multi_twist(const SurfaceGraph& g, const std::string& text) {
  std::istringstream in(text);
  return parse_multi_twist(g, in);
}

std::string serialize(const SurfaceGraph& g, const MultiTwist& t) {
  std::ostringstream out;
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    if (t[e] != 0) out << "twist " << g.edge(e).name << ' ' << t[e] << '\n';
  }
  return out.str();
}

}  // namespace multitwist
