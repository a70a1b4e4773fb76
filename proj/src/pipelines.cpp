#include "wdeg/errors.hpp"
#include "wdeg/schemes.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace wdeg {

namespace {

std::string fmt(double x)
{
    std::ostringstream os;
    os << x;
    return os.str();
}

void fail_window(const std::string& name, const std::string& detail)
{
    throw PreconditionError("window '" + name + "' failed: " + detail);
}

int regular_degree(const Graph& g)
{
    if (g.order() == 0)
        throw DomainError("empty graph");
    if (!g.is_regular())
        throw PreconditionError("graph must be regular; embed it first");
    return g.max_degree();
}

// The sparse set B every vertex sees roughly 2 sqrt(d) times.
VertexSet sparse_layer(const Graph& g, int d, const PipelineConfig& cfg, Rng& seeds,
                       std::vector<WindowCheck>& windows)
{
    const int n = g.order();
    if (d == 0) {
        windows.push_back({"S", true, "edgeless"});
        return VertexSet(n);
    }
    const double root = std::sqrt(static_cast<double>(d));
    auto b = regular_subset(g, VertexSet::full(n), std::min(1.0, 2 / root), cfg.eps,
                            {seeds(), cfg.cap, cfg.threshold});
    for (Vertex u = 0; u < n; ++u) {
        int x = g.degree_in(u, b);
        if (x < root || x > 3 * root)
            fail_window("S", "vertex " + std::to_string(u) + " has " + std::to_string(x) +
                                 " neighbors in B, outside [" + fmt(root) + ", " + fmt(3 * root) +
                                 "]");
    }
    windows.push_back({"S", true, "sqrt(d) <= deg_B <= 3 sqrt(d) everywhere"});
    return b;
}

// Withdraws violating saves until the scheme is legal. Withdrawing u's save
// of w only enlarges the right-hand side for the other savers of w.
int repair(const Graph& g, RemovalScheme& s)
{
    int dropped = 0;
    for (auto r = scheme_is_legal(g, s); !r.ok; r = scheme_is_legal(g, s)) {
        s.save[r.violator] = -1;
        ++dropped;
    }
    return dropped;
}

int target_count(double c, int d)
{
    return static_cast<int>(std::ceil(c * std::sqrt(static_cast<double>(d)) - 1e-12));
}

} // namespace

SchemeBuild chrom_scheme(const Graph& g, const std::vector<int>& coloring,
                         const PipelineConfig& cfg)
{
    const int d = regular_degree(g);
    const int n = g.order();
    const int k = cfg.k;
    if (k < 1)
        throw PreconditionError("k must be positive");
    if (static_cast<int>(coloring.size()) != n)
        throw PreconditionError("coloring must assign every vertex");
    for (int c : coloring)
        if (c < 0 || c >= k)
            throw PreconditionError("coloring uses a color outside 0..k-1");
    if (!is_proper_coloring(g, coloring))
        throw PreconditionError("coloring is not proper");
    auto p = cfg.p.empty() ? default_layer_densities(k) : cfg.p;
    if (static_cast<int>(p.size()) != k)
        throw PreconditionError("need one layer density per color class");
    const double c = cfg.c > 0 ? cfg.c : default_chrom_c(k);
    if (cfg.p.empty() && !(32 * k * c < p[0]))
        throw PreconditionError("c violates 32 k c < p_1");

    SchemeBuild out;
    Rng seeds(cfg.seed);
    out.b = sparse_layer(g, d, cfg, seeds, out.windows);
    out.target = d ? target_count(c, d) : 0;
    const VertexSet a = VertexSet::full(n) - out.b;

    std::vector<VertexSet> ai(k, VertexSet(n)), ci, di;
    for (Vertex v : a.members())
        ai[coloring[v]].insert(v);
    for (int i = 0; i < k; ++i) {
        ci.push_back(regular_subset(g, ai[i], p[i], cfg.eps, {seeds(), cfg.cap, cfg.threshold}));
        di.push_back(
            regular_subset(g, ai[i] - ci[i], p[i], cfg.eps, {seeds(), cfg.cap, cfg.threshold}));
    }
    for (int i = 0; i < k; ++i) {
        const double cap = 1.5 * p[i] * d;
        for (Vertex u = 0; u < n; ++u)
            if (g.degree_in(u, ci[i]) > cap || g.degree_in(u, di[i]) > cap)
                fail_window("CD-upper", "vertex " + std::to_string(u) + " has more than " +
                                            fmt(cap) + " neighbors in layer " +
                                            std::to_string(i + 1));
    }
    out.windows.push_back({"CD-upper", true, "layer degrees at most 3 p_i d / 2"});

    std::vector<VertexSet> bi(k, VertexSet(n));
    for (Vertex w : out.b.members()) {
        int best = 0;
        for (int i = 1; i < k; ++i)
            if (g.degree_in(w, ai[i]) > g.degree_in(w, ai[best]))
                best = i;
        if (g.degree_in(w, ai[best]) < d / (2.0 * k))
            fail_window("B-partition", "vertex " + std::to_string(w) + " has fewer than " +
                                           fmt(d / (2.0 * k)) + " neighbors in every class");
        bi[best].insert(w);
    }
    out.windows.push_back({"B-partition", true, "each B-vertex sees d/(2k) of its class"});
    for (int i = 0; i < k; ++i)
        for (Vertex w : bi[i].members())
            if (g.degree_in(w, ci[i]) < p[i] * d / (4.0 * k) ||
                g.degree_in(w, di[i]) < p[i] * d / (8.0 * k))
                fail_window("CD-lower", "vertex " + std::to_string(w) +
                                            " has too few neighbors in C_" +
                                            std::to_string(i + 1) + " or D_" +
                                            std::to_string(i + 1));
    out.windows.push_back({"CD-lower", true, "B_i-vertices see p_i d/(4k) of C_i, p_i d/(8k) of D_i"});

    RemovalScheme& s = out.scheme;
    s.save.assign(n, -1);
    for (int i = 0; i < k; ++i) {
        int d1 = 0, d2 = bi[i].empty() ? 0 : n;
        for (Vertex u : di[i].members())
            d1 = std::max(d1, g.degree_in(u, bi[i]));
        for (Vertex w : bi[i].members())
            d2 = std::min(d2, g.degree_in(w, di[i]));
        bool hyp = bi[i].empty() || static_cast<long long>(out.target) * d1 <= d2;
        out.windows.push_back({"Hall-" + std::to_string(i + 1), hyp,
                               "t=" + std::to_string(out.target) + " d1=" + std::to_string(d1) +
                                   " d2=" + std::to_string(d2)});
        auto si = saturating_save(g, di[i], bi[i], out.target);
        if (!si)
            throw PreconditionError("Hall assignment D_" + std::to_string(i + 1) + " -> B_" +
                                    std::to_string(i + 1) + " does not exist at t=" +
                                    std::to_string(out.target));
        for (Vertex u : di[i].members())
            if ((*si)[u] != -1)
                s.save[u] = (*si)[u];
    }

    VertexSet placed(n);
    for (int i = 0; i < k; ++i) {
        for (Vertex v : ci[i].members())
            s.order.push_back(v);
        for (Vertex v : di[i].members())
            s.order.push_back(v);
        placed = placed | ci[i] | di[i];
    }
    for (Vertex v : (a - placed).members())
        s.order.push_back(v);
    const std::size_t b_start = s.order.size();
    for (Vertex v : out.b.members())
        s.order.push_back(v);

    out.dropped_saves = repair(g, s);
    // B goes last; listing it by increasing number of savers keeps well-saved
    // vertices at the end, where they have no later neighbors to rely on
    std::vector<int> savers(n, 0);
    for (Vertex u = 0; u < n; ++u)
        if (s.save[u] != -1)
            ++savers[s.save[u]];
    std::stable_sort(s.order.begin() + static_cast<long>(b_start), s.order.end(),
                     [&](Vertex x, Vertex y) { return savers[x] < savers[y]; });

    out.legality = scheme_is_legal(g, s);
    WDEG_ENSURE(out.legality.ok, "repaired scheme is not legal");
    out.gap = scheme_gap(g, s);
    return out;
}

SchemeBuild girth5_scheme(const Graph& g, const PipelineConfig& cfg)
{
    const int d = regular_degree(g);
    const int n = g.order();
    const double c = cfg.c > 0 ? cfg.c : kDefaultGirth5C;
    SchemeBuild out;
    const int gi = girth(g);
    out.windows.push_back({"girth", gi >= 5,
                           gi == kInfiniteGirth ? "acyclic" : "girth " + std::to_string(gi)});
    Rng seeds(cfg.seed);
    out.b = sparse_layer(g, d, cfg, seeds, out.windows);
    const VertexSet a = VertexSet::full(n) - out.b;
    const double root = std::sqrt(static_cast<double>(d));
    const int t = d ? static_cast<int>(std::ceil(root / 8 - 1e-12)) : 0;
    out.target = d ? target_count(c, d) : 0;

    int d1 = 0, d2 = out.b.empty() ? 0 : n;
    for (Vertex u : a.members())
        d1 = std::max(d1, g.degree_in(u, out.b));
    for (Vertex w : out.b.members())
        d2 = std::min(d2, g.degree_in(w, a));
    out.windows.push_back({"Hall", out.b.empty() || static_cast<long long>(t) * d1 <= d2,
                           "t=" + std::to_string(t) + " d1=" + std::to_string(d1) +
                               " d2=" + std::to_string(d2)});
    auto s_map = saturating_save(g, a, out.b, t);
    if (!s_map)
        throw PreconditionError("Hall assignment A -> B does not exist at t=" + std::to_string(t));
    std::vector<char> in_s(n, 0);
    for (Vertex u : a.members())
        in_s[u] = (*s_map)[u] != -1;

    // random order on A from 64-bit keys; a tie redraws every key
    std::vector<std::uint64_t> theta(n, 0);
    auto am = a.members();
    Rng order_rng(seeds());
    for (bool ties = true; ties;) {
        for (Vertex u : am)
            theta[u] = order_rng();
        std::vector<std::uint64_t> sorted;
        for (Vertex u : am)
            sorted.push_back(theta[u]);
        std::sort(sorted.begin(), sorted.end());
        ties = std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
    }
    std::sort(am.begin(), am.end(), [&](Vertex x, Vertex y) { return theta[x] < theta[y]; });

    RemovalScheme& s = out.scheme;
    s.save.assign(n, -1);
    for (Vertex u : am) {
        Vertex w = (*s_map)[u];
        if (w == -1)
            continue;
        int lhs = 0, rhs = 0;
        for (Vertex v : g.neighbors(u))
            lhs += a.contains(v) && theta[v] < theta[u];
        for (Vertex v : g.neighbors(w))
            rhs += a.contains(v) && (*s_map)[v] != w && theta[v] < theta[u];
        if (lhs < rhs)
            s.save[u] = w;
    }
    std::vector<int> savers(n, 0);
    for (Vertex u = 0; u < n; ++u)
        if (s.save[u] != -1)
            ++savers[s.save[u]];
    VertexSet happy(n);
    for (Vertex w : out.b.members())
        if (savers[w] >= c * root)
            happy.insert(w);
    s.order = am;
    for (Vertex w : (out.b - happy).members())
        s.order.push_back(w);
    for (Vertex w : happy.members())
        s.order.push_back(w);

    bool covered = true;
    for (Vertex u = 0; u < n && covered; ++u)
        covered = g.degree_in(u, happy) >= c * root;
    out.windows.push_back({"happy-neighbors", covered,
                           std::to_string(happy.count()) + " happy of " +
                               std::to_string(out.b.count())});

    out.legality = scheme_is_legal(g, s);
    WDEG_ENSURE(out.legality.ok, "successful saves produced an illegal scheme");
    out.gap = scheme_gap(g, s);
    return out;
}

} // namespace wdeg
