/**
 * @file dp_coloring.hpp
 * @brief DP-coloring (correspondence coloring) covers, coloring from a
 *        certificate, and the brute-force colorability oracle.
 */
#ifndef WDEG_DP_COLORING_HPP
#define WDEG_DP_COLORING_HPP

#include "wdeg/certificate.hpp"
#include "wdeg/generators.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace wdeg {

using ColorPair = std::pair<int, int>;

/// Color lists per vertex plus a partial matching per edge. The matching of
/// edge {a, b} with a < b is stored under key (a, b) as pairs
/// (color at a, color at b).
struct Cover {
    std::vector<std::vector<int>> lists;
    std::map<Edge, std::vector<ColorPair>> matchings;

    /// The color of `v` matched to color `c` of `u`, or -1.
    int partner(Vertex u, Vertex v, int c) const;
    void add_pair(Vertex u, int cu, Vertex v, int cv);
    bool operator==(const Cover&) const = default;
};

/// Throws StructuralError when lists are unsorted/duplicated, a matching sits
/// on a non-edge, uses colors outside the lists, or is not injective.
void validate_cover(const Graph& g, const Cover& cover);

/// True iff phi is a proper (L, C)-coloring. A color outside L(u) is a
/// StructuralError, not an improper coloring.
bool is_proper(const Graph& g, const Cover& cover, const std::vector<int>& phi);

/// Identity matchings on list intersections.
Cover list_cover(const Graph& g, const std::vector<std::vector<int>>& lists);

/// Lists of the given sizes drawn from colors 0..palette-1, and random partial
/// matchings where each color of the lower endpoint is matched with
/// probability `density` to a still free color of the other endpoint.
Cover random_cover(const Graph& g, const std::vector<int>& sizes, int palette, double density,
                   Rng& rng);

/// Proper coloring obtained by replaying a verified certificate, given
/// |L(u)| >= initial_f(u) + 1 for every u.
std::vector<int> color_from_certificate(const Graph& g, const Cover& cover,
                                        const Certificate& cert);

struct DpOracleResult {
    bool colorable = true;
    /// An uncolorable cover (lists {1..k}, perfect matchings) when !colorable.
    std::optional<Cover> witness;
};

struct DpOracleLimits {
    int max_vertices = 7;
    int max_colors = 4;
    /// Cap on the number of enumerated covers after normalization.
    double max_covers = 5e8;
};

/// Whether every cover with lists {1..k} and a perfect matching on every edge
/// admits a proper coloring.
DpOracleResult brute_force_dp_colorable(const Graph& g, int k, const DpOracleLimits& lim = {});

/// Least k with brute_force_dp_colorable(g, k); 0 for the empty graph.
/// Throws ResourceError when the answer would exceed the oracle's color cap.
int dp_chromatic_exact(const Graph& g, const DpOracleLimits& lim = {});

std::string dump_cover(const Cover& cover);
Cover parse_cover(const std::string& text);

} // namespace wdeg

#endif
