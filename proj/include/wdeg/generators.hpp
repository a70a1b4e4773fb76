#ifndef WDEG_GENERATORS_HPP
#define WDEG_GENERATORS_HPP

#include "wdeg/graph.hpp"

#include <random>

namespace wdeg {

using Rng = std::mt19937_64;

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
/// Center 0, leaves 1..leaves.
Graph star_graph(int leaves);
/// Sides 0..a-1 and a..a+b-1.
Graph complete_bipartite(int a, int b);
/// Hub 0 joined to the cycle 1..rim.
Graph wheel_graph(int rim);
/// Two n-cycles 0..n-1 and n..2n-1 joined by a perfect matching i ~ n+i.
Graph prism_graph(int n);
Graph petersen_graph();
Graph cube_graph();

Graph gnp(int n, double p, Rng& rng);
Graph random_tree(int n, Rng& rng);
/// Uniform-ish random d-regular graph: a circulant start mixed by random
/// degree-preserving double-edge switches. Requires n*d even, d < n.
Graph random_regular(int n, int d, Rng& rng);
/// d-regular bipartite graph with sides 0..half-1 and half..2*half-1.
Graph random_bipartite_regular(int half, int d, Rng& rng);
/// Point-line incidence graph of PG(2, q), q prime: (q+1)-regular, girth 6,
/// points 0..q^2+q, lines after.
Graph projective_plane_incidence(int q);
/// Vertices (v, 0) -> v and (v, 1) -> n + v; edges (u,0)(v,1) for uv in E.
Graph bipartite_double_cover(const Graph& g);

bool is_prime(int q);

} // namespace wdeg

#endif
