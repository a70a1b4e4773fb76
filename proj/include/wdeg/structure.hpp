/**
 * @file structure.hpp
 * @brief GDP-tree and Gallai-tree recognition, closed-form lower bounds on
 *        weak degeneracy, and checkers for the clique-or-mad dichotomy and
 *        for the structure of minimal graphs of given weak degeneracy.
 */
#ifndef WDEG_STRUCTURE_HPP
#define WDEG_STRUCTURE_HPP

#include "wdeg/graph.hpp"
#include "wdeg/solver.hpp"

#include <optional>
#include <string>

namespace wdeg {

struct StructureVerdict {
    bool is_gdp_tree = false;
    bool is_gallai_tree = false;
    /// First block that is neither a clique nor a cycle.
    std::optional<VertexSet> offending_block;
};

/// Blocks of a connected graph classified as cliques / cycles. K1 and K2
/// count as cliques. Throws PreconditionError on disconnected input and
/// DomainError on the empty graph.
StructureVerdict is_gdp_tree(const Graph& g);

/// d - sqrt(2n); n >= 2.
double lower_bound_regular(int d, int n);
/// d - sqrt(n) - 1, a strict bound; n >= 4.
double lower_bound_trianglefree(int d, int n);
/// Exact integer forms: wd >= d - sqrt(2n), respectively wd > d - sqrt(n) - 1.
bool meets_regular_bound(int wd, int d, int n);
bool meets_trianglefree_bound(int wd, int d, int n);

/// 2|E| / |V|; DomainError on the empty graph.
Rational average_degree(const Graph& g);
/// d + (d - 2) / (d^2 + 2d - 2).
Rational mad_threshold(int d);

enum class MadOutcome { hypothesis_not_met, clique, mad_bound, violated };

struct MadReport {
    int d = 0;          ///< the weak degeneracy level the check was run at
    bool exact = false; ///< d is the exact weak degeneracy
    bool has_clique = false;
    Rational mad{0};
    Rational threshold{0};
    MadOutcome outcome = MadOutcome::hypothesis_not_met;
};

struct MadCheckOptions {
    /// Check at this level instead of wd(g); must not exceed wd(g) when
    /// wd(g) is computed, and is trusted as a lower bound otherwise.
    std::optional<int> level;
    SolverOptions solver;
};

/// Evaluates "(d+1)-clique or mad >= d + (d-2)/(d^2+2d-2)" at d = wd(g)
/// (or the supplied level). A graph beyond the solver's size guard needs a
/// supplied level.
MadReport mad_theorem_check(const Graph& g, const MadCheckOptions& opt = {});
std::string to_string(MadOutcome o);

struct MinimalityReport {
    int wd = 0;
    bool minimal = false;
    /// Filled when minimal: min degree >= wd, and every component of the
    /// subgraph induced by degree-wd vertices is a GDP-tree.
    bool min_degree_ok = true;
    bool components_ok = true;
    /// A one-step deletion keeping wd, when not minimal.
    std::string witness;
};

/// Minimal means every proper subgraph has smaller weak degeneracy; the
/// vertexless graph counts as smaller than anything. Since weak degeneracy
/// is monotone, single vertex and single edge deletions decide this.
MinimalityReport minimality_check(const Graph& g, const SolverOptions& opt = {});

} // namespace wdeg

#endif
