#pragma once

#include "eccspec/graph.hpp"
#include "eccspec/matrix.hpp"

namespace eccspec {

enum class EccProvenance { Definition, ComplementAdjacency };

/// Eccentricity (anti-adjacency) matrix: entry (u,v) keeps d(u,v) when it
/// equals min(ecc(u), ecc(v)) and is 0 otherwise.
struct EccentricityMatrix {
    IntMatrix values;
    EccProvenance provenance = EccProvenance::Definition;

    std::size_t size() const { return values.size(); }
    int operator()(Vertex u, Vertex v) const { return values(u, v); }
};

IntMatrix adjacency_matrix(const Graph& g);

EccentricityMatrix eccentricity_matrix(const Graph& g);
EccentricityMatrix eccentricity_matrix(const DistanceMatrix& d);

/// 2 * A(complement(g)). Requires diameter exactly 2 and max degree < n - 1,
/// under which it coincides with eccentricity_matrix(g).
EccentricityMatrix ecc_via_complement(const Graph& g);

}  // namespace eccspec
