/**
 * @file schemes.hpp
 * @brief Removal schemes (order plus save map), their gap and conversion to
 *        certificates, Hall-type save assignments, (p, eps)-regular subsets,
 *        the two randomized scheme pipelines and the regular embeddings they
 *        rely on.
 */
#ifndef WDEG_SCHEMES_HPP
#define WDEG_SCHEMES_HPP

#include "wdeg/certificate.hpp"
#include "wdeg/generators.hpp"
#include "wdeg/graph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace wdeg {

struct RemovalScheme {
    std::vector<Vertex> order;
    /// save[u] is the vertex u saves, -1 when blank.
    std::vector<Vertex> save;
};

/// Throws StructuralError unless `order` is a permutation and every save
/// target is a neighbor appearing later.
void check_scheme_structure(const Graph& g, const RemovalScheme& s);

struct LegalityReport {
    bool ok = true;
    Vertex violator = -1;
    int lhs = 0; ///< earlier neighbors of the saver that do not save it
    int rhs = 0; ///< neighbors of the target before the saver that do not save the target
};

LegalityReport scheme_is_legal(const Graph& g, const RemovalScheme& s);

struct GapReport {
    std::vector<int> gap;
    int min_gap = 0; ///< 0 on the empty graph
};

GapReport scheme_gap(const Graph& g, const RemovalScheme& s);
/// One line per vertex: "vertex later saved gap", then "min <value>".
std::string format_gap_report(const Graph& g, const RemovalScheme& s, const GapReport& r);

/// Certificate with constant weight d - gap. Requires a legal scheme and
/// d >= max degree (PreconditionError otherwise).
Certificate scheme_to_certificate(const Graph& g, const RemovalScheme& s, int d);

std::string dump_scheme(const RemovalScheme& s);
RemovalScheme parse_scheme(const std::string& text);

/// Partial map A -> B (entry -1 when undefined) whose fibres over B all have
/// size exactly t and which maps only along edges. Requires disjoint A, B
/// and t * d1 <= d2 for d1 = max |N(a) & B|, d2 = min |N(b) & A|.
std::vector<Vertex> hall_save(const Graph& g, const VertexSet& a, const VertexSet& b, int t);

/// Same assignment without the degree hypothesis; nullopt when no map with
/// all fibres of size t exists.
std::optional<std::vector<Vertex>> saturating_save(const Graph& g, const VertexSet& a,
                                                   const VertexSet& b, int t);

/// 9 ln(d) / (eps^2 p), with d the maximum degree; 0 when d <= 1.
double regularity_threshold(int d, double p, double eps);

/// Checks the (p, eps)-regularity definition vertex by vertex. `violator`
/// receives the first failing vertex.
bool is_regular_subset(const Graph& g, const VertexSet& a, const VertexSet& sub, double p,
                       double eps, double threshold, Vertex* violator = nullptr);

struct RegularSubsetOptions {
    std::uint64_t seed = 0;
    /// Maximum number of local resamplings before ResourceError.
    std::int64_t cap = 1'000'000;
    /// Replaces 9 ln(d) / (eps^2 p) when set.
    std::optional<double> threshold;
};

/// Independent p-sampling of A followed by resampling of the A-neighborhood
/// of a violated vertex until the definition holds. Returns A unchanged
/// when no vertex reaches the threshold.
VertexSet regular_subset(const Graph& g, const VertexSet& a, double p, double eps,
                         const RegularSubsetOptions& opt = {});

struct PipelineConfig {
    int k = 2;
    /// Scales the target saver count ceil(c sqrt(d)); <= 0 selects the default.
    double c = 0;
    double eps = 0.5;
    /// Sampling densities p_1..p_k of the C_i / D_i layers; empty means
    /// N_i / (6 k N_k) with N_1 = 1, N_i = 20 k (N_1 + ... + N_{i-1}).
    std::vector<double> p;
    /// Regularity threshold override used by every regular_subset call.
    std::optional<double> threshold;
    std::uint64_t seed = 0;
    std::int64_t cap = 1'000'000;
};

std::vector<double> default_layer_densities(int k);
/// Largest c with 32 k c < p_1, halved.
double default_chrom_c(int k);
inline constexpr double kDefaultGirth5C = 0.125;

/// key=value lines: k, c, eps, p (comma separated), threshold, seed, cap.
PipelineConfig parse_pipeline_config(const std::string& text);

struct WindowCheck {
    std::string name;
    bool ok = true;
    std::string detail;
};

struct SchemeBuild {
    RemovalScheme scheme;
    LegalityReport legality;
    GapReport gap;
    VertexSet b;
    /// ceil(c sqrt(d)), the saver count each target aims for.
    int target = 0;
    /// Saves withdrawn to restore legality (0 whenever the degree windows
    /// carry the argument through).
    int dropped_saves = 0;
    std::vector<WindowCheck> windows;
};

/// Layered construction for d-regular graphs with a proper coloring using
/// colors 0..k-1. A failing degree window throws PreconditionError naming it.
SchemeBuild chrom_scheme(const Graph& g, const std::vector<int>& coloring,
                         const PipelineConfig& cfg);

/// Random-order construction for d-regular graphs (girth >= 5 recommended;
/// a shorter girth is recorded as a failed advisory window).
SchemeBuild girth5_scheme(const Graph& g, const PipelineConfig& cfg);

/// Number of coordinates of x below alpha.
int alpha_power(const std::vector<double>& x, double alpha);
/// Monte-Carlo estimate of P[pi(y, alpha) < pi(x, alpha)] for uniform
/// alpha in [0, 1] and uniform y in [0, 1]^d.
double powerful_estimate(const std::vector<double>& x, int d, int trials, std::uint64_t seed);

struct RegularEmbedding {
    Graph graph; ///< contains the input on vertices 0..n-1 as an induced subgraph
    std::vector<int> coloring; ///< proper, colors 0..k-1 (chromatic embedding only)
};

/// Repeated doubling: two copies, each deficient vertex joined to its twin,
/// colors shifted by one in the copy.
RegularEmbedding embed_regular_chrom(const Graph& g, int d, int k,
                                     std::optional<std::vector<int>> coloring = std::nullopt);

/// Built-in N-regular graphs of girth >= target: K2, long cycles, K_{N+1},
/// K_{N,N} and point-line incidence graphs of prime order planes.
std::optional<Graph> girth_regular_provider(int n_regular, int girth_target);

/// Copy-and-stitch over the edges of gamma (or of the built-in provider).
RegularEmbedding embed_regular_girth(const Graph& g, int d, int girth_target,
                                     std::optional<Graph> gamma = std::nullopt);

} // namespace wdeg

#endif
