#pragma once

// Line-oriented text formats.
//
// Surface graph:            Multi-twist:
//   # comment                 twist <edge> <integer>
//   mode system|general
//   vertex <name> <genus>
//   edge <name> <tail> <head>
//
// Declarations may appear in any order.  The default mode is `system`.
// Serialization is canonical: mode first, then vertices and edges sorted by
// name, so parse(serialize(g)) == g and serialize(parse(text)) is stable.

#include <istream>
#include <string>

#include "multitwist/multi_twist.hpp"
#include "multitwist/surface_graph.hpp"

namespace multitwist {

/// Throws ParseError with the offending line number.
SurfaceGraph parse_surface_graph(std::istream& in);
SurfaceGraph parse_surface_graph(const std::string& text);
std::string serialize(const SurfaceGraph& g);

/// Edges not mentioned get exponent 0.  Unknown edges are a ParseError
/// naming the token.
MultiTwist parse_multi_twist(const SurfaceGraph& g, std::istream& in);
MultiTwist parse_multi_twist(const SurfaceGraph& g, const std::string& text);
/// Nonzero exponents only, in canonical edge order.
std::string serialize(const SurfaceGraph& g, const MultiTwist& t);

}  // namespace multitwist
