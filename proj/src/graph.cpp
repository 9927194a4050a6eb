#include "eccspec/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>

#include "eccspec/errors.hpp"

namespace eccspec {

Graph::Graph(std::size_t n) : n_(n), adj_(n * n, 0)
{
    if (n == 0) throw PreconditionViolated("graph must have at least one vertex");
}

void Graph::add_edge(Vertex u, Vertex v)
{
    if (u >= n_ || v >= n_) throw PreconditionViolated("edge endpoint out of range");
    if (u == v) throw PreconditionViolated("self-loops are not allowed");
    adj_[u * n_ + v] = 1;
    adj_[v * n_ + u] = 1;
}

std::size_t Graph::edge_count() const
{
    return static_cast<std::size_t>(std::count(adj_.begin(), adj_.end(), 1)) / 2;
}

std::size_t Graph::degree(Vertex u) const
{
    auto first = adj_.begin() + static_cast<std::ptrdiff_t>(u * n_);
    return static_cast<std::size_t>(std::count(first, first + static_cast<std::ptrdiff_t>(n_), 1));
}

std::size_t Graph::max_degree() const
{
    std::size_t best = 0;
    for (Vertex u = 0; u < n_; ++u) best = std::max(best, degree(u));
    return best;
}

std::vector<Vertex> Graph::neighbors(Vertex u) const
{
    std::vector<Vertex> out;
    for (Vertex v = 0; v < n_; ++v)
        if (adjacent(u, v)) out.push_back(v);
    return out;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const
{
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v = u + 1; v < n_; ++v)
            if (adjacent(u, v)) out.emplace_back(u, v);
    return out;
}

bool Graph::is_connected() const
{
    std::vector<char> seen(n_, 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        for (Vertex v = 0; v < n_; ++v) {
            if (adjacent(u, v) && !seen[v]) {
                seen[v] = 1;
                ++reached;
                stack.push_back(v);
            }
        }
    }
    return reached == n_;
}

MultipartiteSpec::MultipartiteSpec(std::vector<int> parts) : parts_(std::move(parts))
{
    if (parts_.empty()) throw InvalidSpec("multipartite spec needs at least one part");
    for (int part : parts_)
        if (part < 1) throw InvalidSpec("multipartite parts must be positive");
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
    for (int part : parts_) n_ += part;
}

std::string MultipartiteSpec::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

std::vector<int> multipartite_classes(const MultipartiteSpec& spec)
{
    std::vector<int> cls;
    cls.reserve(static_cast<std::size_t>(spec.order()));
    for (int i = 0; i < spec.part_count(); ++i)
        cls.insert(cls.end(), static_cast<std::size_t>(spec.parts()[static_cast<std::size_t>(i)]), i);
    return cls;
}

Graph build_multipartite(const MultipartiteSpec& spec)
{
    const auto cls = multipartite_classes(spec);
    Graph g(cls.size());
    for (Vertex u = 0; u < cls.size(); ++u)
        for (Vertex v = u + 1; v < cls.size(); ++v)
            if (cls[u] != cls[v]) g.add_edge(u, v);
    return g;
}

Graph star(int n)
{
    if (n < 2) throw PreconditionViolated("star needs n >= 2");
    return build_multipartite(MultipartiteSpec({n - 1, 1}));
}

Graph complete(int n)
{
    return build_multipartite(MultipartiteSpec(std::vector<int>(static_cast<std::size_t>(std::max(n, 0)), 1)));
}

Graph complete_split(int independent, int clique)
{
    if (clique < 0) throw InvalidSpec("clique size must be non-negative");
    std::vector<int> parts{independent};
    parts.insert(parts.end(), static_cast<std::size_t>(clique), 1);
    return build_multipartite(MultipartiteSpec(std::move(parts)));
}

Graph complement(const Graph& g)
{
    Graph out(g.order());
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v)
            if (!g.adjacent(u, v)) out.add_edge(u, v);
    return out;
}

Graph strong_product(const Graph& g, const Graph& h)
{
    const std::size_t nh = h.order();
    Graph out(g.order() * nh);
    for (Vertex v1 = 0; v1 < g.order(); ++v1) {
        for (Vertex v2 = 0; v2 < g.order(); ++v2) {
            const bool eq_g = v1 == v2;
            const bool adj_g = g.adjacent(v1, v2);
            if (!eq_g && !adj_g) continue;
            for (Vertex w1 = 0; w1 < nh; ++w1) {
                for (Vertex w2 = 0; w2 < nh; ++w2) {
                    const bool eq_h = w1 == w2;
                    if (eq_g && eq_h) continue;
                    if (eq_h || h.adjacent(w1, w2)) out.add_edge(v1 * nh + w1, v2 * nh + w2);
                }
            }
        }
    }
    return out;
}

DistanceMatrix::DistanceMatrix(IntMatrix d) : d_(std::move(d)), ecc_(d_.size(), 0)
{
    for (std::size_t u = 0; u < d_.size(); ++u) {
        for (int x : d_.row(u)) ecc_[u] = std::max(ecc_[u], x);
        diameter_ = std::max(diameter_, ecc_[u]);
    }
}

DistanceMatrix all_pairs_distances(const Graph& g)
{
    const std::size_t n = g.order();
    std::vector<std::vector<Vertex>> adj(n);
    for (Vertex u = 0; u < n; ++u) adj[u] = g.neighbors(u);

    constexpr int unreached = std::numeric_limits<int>::max();
    IntMatrix d(n, unreached);
    std::deque<Vertex> queue;
    for (Vertex s = 0; s < n; ++s) {
        d(s, s) = 0;
        queue.assign(1, s);
        while (!queue.empty()) {
            Vertex u = queue.front();
            queue.pop_front();
            for (Vertex v : adj[u]) {
                if (d(s, v) == unreached) {
                    d(s, v) = d(s, u) + 1;
                    queue.push_back(v);
                }
            }
        }
        for (Vertex v = 0; v < n; ++v)
            if (d(s, v) == unreached) throw DisconnectedGraph();
    }
    return DistanceMatrix(std::move(d));
}

std::optional<int> antipodal_class(const Graph& g)
{
    const std::size_t n = g.order();
    if (n < 2) throw PreconditionViolated("antipodal_class needs n >= 2");
    const auto dist = all_pairs_distances(g);
    const int diam = dist.diameter();

    // Fibre of u = {u} plus everything at the diameter. The relation is an
    // equivalence exactly when every fibre member reproduces the same fibre.
    std::vector<int> fibre_of(n, -1);
    std::vector<std::size_t> sizes;
    for (Vertex u = 0; u < n; ++u) {
        if (fibre_of[u] >= 0) continue;
        const int id = static_cast<int>(sizes.size());
        std::vector<Vertex> members{u};
        for (Vertex v = 0; v < n; ++v)
            if (v != u && dist(u, v) == diam) members.push_back(v);
        for (Vertex v : members) {
            if (fibre_of[v] >= 0) return std::nullopt;
            fibre_of[v] = id;
        }
        for (Vertex a : members)
            for (Vertex b : members)
                if (a != b && dist(a, b) != diam) return std::nullopt;
        sizes.push_back(members.size());
    }
    // Closure: a vertex outside u's fibre must not be at distance diam from u.
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
            if (u != v && (dist(u, v) == diam) != (fibre_of[u] == fibre_of[v])) return std::nullopt;

    if (std::adjacent_find(sizes.begin(), sizes.end(), std::not_equal_to<>()) != sizes.end())
        return std::nullopt;
    return static_cast<int>(sizes.front());
}

}  // namespace eccspec
