#include "eccspec/io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "eccspec/errors.hpp"

namespace eccspec {

std::string format_number(double x)
{
    if (x == 0.0 || std::abs(x) < 5e-13) x = 0.0;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

namespace {

bool parse_int(std::string_view s, long long& out)
{
    if (s.empty()) return false;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
}

std::vector<std::string_view> split_fields(std::string_view line)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

std::vector<std::string_view> nonblank_lines(std::string_view text)
{
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        auto line = text.substr(start, end - start);
        if (!split_fields(line).empty()) lines.push_back(line);
        start = end + 1;
    }
    return lines;
}

}  // namespace

Graph parse_edge_list(std::string_view text)
{
    const auto lines = nonblank_lines(text);
    if (lines.empty()) throw MalformedHeader("edge list is empty");
    const auto header = split_fields(lines[0]);
    long long n = 0, m = 0;
    if (header.size() != 2 || !parse_int(header[0], n) || !parse_int(header[1], m) || n < 1 || m < 0)
        throw MalformedHeader("edge list header must be \"n m\" with n >= 1, m >= 0");
    if (lines.size() - 1 != static_cast<std::size_t>(m))
        throw MalformedHeader("header announces " + std::to_string(m) + " edges, found " +
                              std::to_string(lines.size() - 1));

    Graph g(static_cast<std::size_t>(n));
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const auto f = split_fields(lines[k]);
        long long u = 0, v = 0;
        if (f.size() != 2 || !parse_int(f[0], u) || !parse_int(f[1], v))
            throw MalformedHeader("edge line " + std::to_string(k) + " must be \"u v\"");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw VertexOutOfRange("edge " + std::to_string(u) + " " + std::to_string(v) + " outside 0.." +
                                   std::to_string(n - 1));
        if (u == v) throw SelfLoop("self-loop at vertex " + std::to_string(u));
        g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    return g;
}

std::string emit_edge_list(const Graph& g)
{
    const auto edges = g.edges();
    std::ostringstream out;
    out << g.order() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges) out << u << ' ' << v << '\n';
    return out.str();
}

Graph parse_graph6(std::string_view line)
{
    constexpr std::string_view header = ">>graph6<<";
    if (line.starts_with(header)) line.remove_prefix(header.size());
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);

    for (char ch : line) {
        const int b = static_cast<unsigned char>(ch);
        if (b < 63 || b > 126) throw InvalidByte("graph6 byte " + std::to_string(b) + " outside 63..126");
    }
    auto byte = [&](std::size_t i) { return static_cast<unsigned>(static_cast<unsigned char>(line[i]) - 63); };

    if (line.empty()) throw TruncatedPayload("graph6 string is empty");
    std::size_t pos = 0;
    std::size_t n = 0;
    if (byte(0) < 63) {
        n = byte(0);
        pos = 1;
    } else if (line.size() >= 2 && byte(1) < 63) {
        if (line.size() < 4) throw TruncatedPayload("graph6 size field is truncated");
        n = (byte(1) << 12) | (byte(2) << 6) | byte(3);
        pos = 4;
    } else {
        if (line.size() < 8) throw TruncatedPayload("graph6 size field is truncated");
        for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | byte(i);
        pos = 8;
    }
    if (n == 0) throw PreconditionViolated("graphs need at least one vertex");

    const std::size_t bits = n * (n - 1) / 2;
    const std::size_t need = (bits + 5) / 6;
    if (line.size() - pos < need) throw TruncatedPayload("graph6 payload is truncated");
    if (line.size() - pos > need) throw InvalidByte("graph6 string has trailing bytes");

    Graph g(n);
    std::size_t k = 0;
    for (std::size_t v = 1; v < n; ++v) {
        for (std::size_t u = 0; u < v; ++u, ++k) {
            const unsigned chunk = byte(pos + k / 6);
            if ((chunk >> (5 - k % 6)) & 1u) g.add_edge(u, v);
        }
    }
    return g;
}

std::string emit_graph6(const Graph& g)
{
    const std::size_t n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
    unsigned chunk = 0;
    int filled = 0;
    for (std::size_t v = 1; v < n; ++v) {
        for (std::size_t u = 0; u < v; ++u) {
            chunk = (chunk << 1) | (g.adjacent(u, v) ? 1u : 0u);
            if (++filled == 6) {
                out.push_back(static_cast<char>(chunk + 63));
                chunk = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + 63));
    return out;
}

MultipartiteSpec parse_parts(std::string_view text)
{
    std::vector<int> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t end = text.find(',', start);
        auto field = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
        while (!field.empty() && std::isspace(static_cast<unsigned char>(field.front()))) field.remove_prefix(1);
        while (!field.empty() && std::isspace(static_cast<unsigned char>(field.back()))) field.remove_suffix(1);
        long long v = 0;
        if (!parse_int(field, v) || v > 1'000'000 || v < -1'000'000)
            throw ParseError("parts must be a comma-separated list of integers");
        parts.push_back(static_cast<int>(v));
        if (end == std::string_view::npos) break;
        start = end + 1;
    }
    return MultipartiteSpec(std::move(parts));
}

namespace {

class GeneratorParser {
public:
    explicit GeneratorParser(std::string_view text) : text_(text) {}

    GeneratorExpr parse()
    {
        auto e = expr();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return e;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what)
    {
        throw ParseError("generator expression: " + what + " at offset " + std::to_string(pos_));
    }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    void expect(char c)
    {
        skip_space();
        if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    bool accept(char c)
    {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::string_view name()
    {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return text_.substr(start, pos_ - start);
    }

    int integer()
    {
        skip_space();
        const std::size_t start = pos_;
        if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        long long v = 0;
        if (!parse_int(text_.substr(start, pos_ - start), v) || v > 100000 || v < -100000) fail("expected an integer");
        return static_cast<int>(v);
    }

    std::vector<int> integers()
    {
        std::vector<int> out{integer()};
        while (accept(',')) out.push_back(integer());
        return out;
    }

    GeneratorExpr expr()
    {
        using Kind = GeneratorExpr::Kind;
        const auto word = name();
        GeneratorExpr e;
        expect('(');
        if (word == "K") {
            e.kind = Kind::Multipartite;
            e.args = MultipartiteSpec(integers()).parts();
        } else if (word == "star" || word == "complete") {
            e.kind = word == "star" ? Kind::Star : Kind::Complete;
            e.args = {integer()};
        } else if (word == "split") {
            e.kind = Kind::Split;
            e.args = {integer()};
            expect(',');
            e.args.push_back(integer());
        } else if (word == "strong") {
            e.kind = Kind::Strong;
            e.children.push_back(expr());
            expect(',');
            e.children.push_back(expr());
        } else if (word == "complement") {
            e.kind = Kind::Complement;
            e.children.push_back(expr());
        } else {
            fail("unknown generator '" + std::string(word) + "'");
        }
        expect(')');
        return e;
    }
};

std::string join_ints(const std::vector<int>& v)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
    return out;
}

}  // namespace

GeneratorExpr parse_generator(std::string_view text)
{
    return GeneratorParser(text).parse();
}

std::string print_generator(const GeneratorExpr& e)
{
    using Kind = GeneratorExpr::Kind;
    switch (e.kind) {
    case Kind::Multipartite: return "K(" + join_ints(e.args) + ")";
    case Kind::Star: return "star(" + join_ints(e.args) + ")";
    case Kind::Complete: return "complete(" + join_ints(e.args) + ")";
    case Kind::Split: return "split(" + join_ints(e.args) + ")";
    case Kind::Strong: return "strong(" + print_generator(e.children[0]) + "," + print_generator(e.children[1]) + ")";
    case Kind::Complement: return "complement(" + print_generator(e.children[0]) + ")";
    }
    return {};
}

Graph build_generator(const GeneratorExpr& e)
{
    using Kind = GeneratorExpr::Kind;
    switch (e.kind) {
    case Kind::Multipartite: return build_multipartite(MultipartiteSpec(e.args));
    case Kind::Star: return star(e.args.at(0));
    case Kind::Complete: return complete(e.args.at(0));
    case Kind::Split: return complete_split(e.args.at(0), e.args.at(1));
    case Kind::Strong: return strong_product(build_generator(e.children.at(0)), build_generator(e.children.at(1)));
    case Kind::Complement: return complement(build_generator(e.children.at(0)));
    }
    throw ParseError("unknown generator kind");
}

}  // namespace eccspec
