#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "eccspec/graph.hpp"

namespace eccspec {

/// 12 significant digits, locale independent. Magnitudes below 5e-13 (solver
/// noise around zero eigenvalues) and -0 print as 0.
std::string format_number(double x);

/// "n m" header followed by m lines "u v". Duplicate edges are tolerated.
/// Throws MalformedHeader, VertexOutOfRange or SelfLoop.
Graph parse_edge_list(std::string_view text);
std::string emit_edge_list(const Graph& g);

/// Decodes one graph6 string (an optional ">>graph6<<" header is accepted).
/// Throws InvalidByte for bytes outside 63..126 and TruncatedPayload when the
/// string is shorter than its size field requires.
Graph parse_graph6(std::string_view line);
std::string emit_graph6(const Graph& g);

/// "3,1,2" -> canonical MultipartiteSpec. Throws ParseError or InvalidSpec.
MultipartiteSpec parse_parts(std::string_view text);

/// Small expression language naming generated graphs:
///   K(a,b,...)  star(n)  complete(n)  split(p1,p2)
///   strong(e1,e2)  complement(e)
struct GeneratorExpr {
    enum class Kind { Multipartite, Star, Complete, Split, Strong, Complement };

    Kind kind = Kind::Multipartite;
    std::vector<int> args;
    std::vector<GeneratorExpr> children;

    friend bool operator==(const GeneratorExpr&, const GeneratorExpr&) = default;
};

/// Throws ParseError on malformed input.
GeneratorExpr parse_generator(std::string_view text);
std::string print_generator(const GeneratorExpr& expr);
Graph build_generator(const GeneratorExpr& expr);

}  // namespace eccspec
