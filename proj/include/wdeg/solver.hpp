/**
 * @file solver.hpp
 * @brief Exact search for weak f-degeneracy certificates on small graphs.
 */
#ifndef WDEG_SOLVER_HPP
#define WDEG_SOLVER_HPP

#include "wdeg/certificate.hpp"

#include <cstdint>
#include <optional>

namespace wdeg {

struct SolverOptions {
    int max_vertices = 16;
    std::int64_t max_states = 20'000'000;
    /// Explore top-level branches on separate threads with a shared failure
    /// table. The returned certificate is still the one of the first
    /// successful branch in branch order.
    bool parallel = false;
};

struct SolverStats {
    std::int64_t states = 0;
    std::int64_t memo_hits = 0;
};

/// A verified certificate for (g, f) if one exists, std::nullopt if none does.
/// With `safe_set`, every vertex of the set must be removed by Delete.
/// Throws ResourceError when a cap in `opt` is exceeded.
std::optional<Certificate> is_weakly_f_degenerate(const Graph& g, const WeightFn& f,
                                                  const std::optional<VertexSet>& safe_set = {},
                                                  const SolverOptions& opt = {},
                                                  SolverStats* stats = nullptr);

struct WeakDegeneracy {
    int value = 0;
    Certificate certificate;
};

/// wd(g) with a constant-wd witness. The empty graph has wd 0.
WeakDegeneracy weak_degeneracy_exact(const Graph& g, const SolverOptions& opt = {});

} // namespace wdeg

#endif
