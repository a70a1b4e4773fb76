/**
 * @file weak_degeneracy.hpp
 * @brief Certificate transformations: monotone lifting, restriction to induced
 *        subgraphs, the two-way partition, and the constructive (deg-1) recipe.
 */
#ifndef WDEG_WEAK_DEGENERACY_HPP
#define WDEG_WEAK_DEGENERACY_HPP

#include "wdeg/certificate.hpp"

#include <optional>

namespace wdeg {

/// Replays `cert` with the larger weights `gfun`, turning a DelSave into a
/// Delete exactly where it stops being legal. Throws PreconditionError if
/// gfun < initial_f somewhere or cert does not verify.
Certificate monotone_lift(const Graph& g, const Certificate& cert, const WeightFn& gfun);

/// Restricts a certificate for g to the induced subgraph on `keep`, with
/// weights `gfun` (indexed by g's ids, read only on `keep`) that dominate the
/// certificate's initial weights there. Saves toward dropped vertices become
/// Deletes. Result uses the subgraph's local ids (see induced_subgraph).
Certificate restrict_certificate(const Graph& g, const Certificate& cert, const VertexSet& keep,
                                 const WeightFn& gfun);

/// Transfers a certificate for g to a subgraph h of g, where h_to_g maps h's
/// vertices injectively into g and every edge of h maps to an edge of g.
/// `h_f` must dominate the certificate's weights on the mapped vertices.
/// Saves that become illegal or lose their edge turn into Deletes.
Certificate certificate_for_subgraph(const Graph& g, const Certificate& cert, const Graph& h,
                                     const std::vector<Vertex>& h_to_g, const WeightFn& h_f);

struct PartitionResult {
    VertexSet v1, v2;
    InducedSubgraph part1, part2;
    /// Certificates in local ids of part1 / part2, with initial weights f1 / f2
    /// restricted to the part.
    Certificate cert1, cert2;
};

/// Splits V(g) so that g[V_i] is weakly f_i-degenerate, given a verified
/// certificate for f with f1 + f2 = f - 1. Shares may be negative.
PartitionResult partition(const Graph& g, const Certificate& cert, const WeightFn& f1,
                          const WeightFn& f2);

/// Delete-only certificate for a connected g with f >= deg - 1 everywhere and
/// f(x) >= deg(x), removing vertices by decreasing distance from x.
Certificate greedy_delete_certificate(const Graph& g, const WeightFn& f, Vertex x);

/// Vertex set of a connected, non-regular induced subgraph without cut
/// vertices, or nullopt if none exists (exactly when g is a GDP-tree).
/// Requires g connected.
std::optional<VertexSet> find_nonregular_biconnected(const Graph& g);

/// Certificate for f = deg - 1 on a connected graph, or nullopt when g is a
/// GDP-tree. Throws PreconditionError on disconnected input.
std::optional<Certificate> deg_minus_one_certificate(const Graph& g);

} // namespace wdeg

#endif
