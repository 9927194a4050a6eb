#include "eccspec/ecc_matrix.hpp"

#include <algorithm>

#include "eccspec/errors.hpp"

namespace eccspec {

IntMatrix adjacency_matrix(const Graph& g)
{
    IntMatrix a(g.order());
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = 0; v < g.order(); ++v) a(u, v) = g.adjacent(u, v) ? 1 : 0;
    return a;
}

EccentricityMatrix eccentricity_matrix(const DistanceMatrix& d)
{
    const std::size_t n = d.size();
    IntMatrix e(n);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = 0; v < n; ++v) {
            const int dist = d(u, v);
            if (u != v && dist == std::min(d.eccentricity(u), d.eccentricity(v))) e(u, v) = dist;
        }
    }
    return {std::move(e), EccProvenance::Definition};
}

EccentricityMatrix eccentricity_matrix(const Graph& g)
{
    return eccentricity_matrix(all_pairs_distances(g));
}

EccentricityMatrix ecc_via_complement(const Graph& g)
{
    const auto d = all_pairs_distances(g);
    if (d.diameter() != 2) throw PreconditionViolated("complement route needs diameter exactly 2");
    if (g.max_degree() >= g.order() - 1)
        throw PreconditionViolated("complement route needs max degree < n - 1");

    IntMatrix e = adjacency_matrix(complement(g));
    for (Vertex u = 0; u < e.size(); ++u)
        for (Vertex v = 0; v < e.size(); ++v) e(u, v) *= 2;
    return {std::move(e), EccProvenance::ComplementAdjacency};
}

}  // namespace eccspec
