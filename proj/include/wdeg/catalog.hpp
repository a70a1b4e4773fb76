/**
 * @file catalog.hpp
 * @brief Exhaustive lists of non-isomorphic small graphs, with canonical
 *        forms and an on-disk cache.
 */
#ifndef WDEG_CATALOG_HPP
#define WDEG_CATALOG_HPP

#include "wdeg/graph.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace wdeg {

inline constexpr int kMaxCatalogOrder = 9;

/// Upper-triangle adjacency bits under a canonical labelling found by
/// individualization and refinement. Equal iff the graphs are isomorphic.
/// Requires n <= 11.
std::uint64_t canonical_form(const Graph& g);
Graph graph_from_form(int n, std::uint64_t form);

/// All graphs on n vertices up to isomorphism, sorted by canonical form.
/// Loaded from $WDEG_CATALOG_DIR/graphs<n>.txt when present, generated and
/// written there otherwise. Thread-safe; results are memoized in memory.
const std::vector<Graph>& catalog(int n);
std::vector<Graph> connected_catalog(int n);

/// One graph per line: "n u1 v1 u2 v2 ...".
std::string dump_catalog(const std::vector<Graph>& graphs);
std::vector<Graph> parse_catalog(const std::string& text);

} // namespace wdeg

#endif
