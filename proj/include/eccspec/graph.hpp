#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eccspec/matrix.hpp"

namespace eccspec {

using Vertex = std::size_t;

/// Simple undirected graph on vertices 0..n-1, stored as a dense symmetric
/// bit table with an empty diagonal.
class Graph {
public:
    explicit Graph(std::size_t n = 1);

    std::size_t order() const { return n_; }
    std::size_t edge_count() const;

    bool adjacent(Vertex u, Vertex v) const { return adj_[u * n_ + v] != 0; }

    /// Idempotent; rejects self-loops and out-of-range vertices.
    void add_edge(Vertex u, Vertex v);

    std::size_t degree(Vertex u) const;
    std::size_t max_degree() const;
    std::vector<Vertex> neighbors(Vertex u) const;
    std::vector<std::pair<Vertex, Vertex>> edges() const;

    bool is_connected() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::size_t n_;
    std::vector<unsigned char> adj_;
};

/// Partition n_1 >= n_2 >= ... >= n_p >= 1 naming K_{n_1,...,n_p}.
class MultipartiteSpec {
public:
    /// Sorts into canonical non-increasing order. Throws InvalidSpec on an
    /// empty list or a part < 1.
    explicit MultipartiteSpec(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int order() const { return n_; }
    int part_count() const { return static_cast<int>(parts_.size()); }

    bool all_parts_at_least_two() const { return parts_.back() >= 2; }
    bool all_parts_one() const { return parts_.front() == 1; }

    /// "3,1"
    std::string to_string() const;

    friend bool operator==(const MultipartiteSpec&, const MultipartiteSpec&) = default;
    friend auto operator<=>(const MultipartiteSpec&, const MultipartiteSpec&) = default;

private:
    std::vector<int> parts_;
    int n_ = 0;
};

// Generators. Vertices of K_{n_1,...,n_p} are numbered class by class in
// canonical part order.
Graph build_multipartite(const MultipartiteSpec& spec);
Graph star(int n);
Graph complete(int n);
Graph complete_split(int independent, int clique);

/// Class index of every vertex of build_multipartite(spec).
std::vector<int> multipartite_classes(const MultipartiteSpec& spec);

Graph complement(const Graph& g);

/// Strong product; vertex (v, w) has index v * h.order() + w.
Graph strong_product(const Graph& g, const Graph& h);

/// All-pairs BFS distances with per-vertex eccentricities and the diameter.
class DistanceMatrix {
public:
    explicit DistanceMatrix(IntMatrix d);

    std::size_t size() const { return d_.size(); }
    int operator()(Vertex u, Vertex v) const { return d_(u, v); }
    const IntMatrix& matrix() const { return d_; }
    int eccentricity(Vertex u) const { return ecc_[u]; }
    const std::vector<int>& eccentricities() const { return ecc_; }
    int diameter() const { return diameter_; }

private:
    IntMatrix d_;
    std::vector<int> ecc_;
    int diameter_ = 0;
};

/// Throws DisconnectedGraph if some pair is unreachable.
DistanceMatrix all_pairs_distances(const Graph& g);

/// Size of the antipodal fibres when "u = v or d(u,v) = diameter" is an
/// equivalence relation with equal-size classes; empty otherwise. K_n yields
/// n since every pair sits at the diameter.
std::optional<int> antipodal_class(const Graph& g);

}  // namespace eccspec
