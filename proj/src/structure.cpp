#include "wdeg/structure.hpp"
#include "wdeg/errors.hpp"

#include <cmath>

namespace wdeg {

namespace {

bool is_clique_block(const Graph& g, const std::vector<Vertex>& b)
{
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = i + 1; j < b.size(); ++j)
            if (!g.adjacent(b[i], b[j]))
                return false;
    return true;
}

bool is_cycle_block(const Graph& g, const VertexSet& s)
{
    if (s.count() < 3)
        return false;
    for (Vertex v : s.members())
        if (g.degree_in(v, s) != 2)
            return false;
    return true;
}

} // namespace

StructureVerdict is_gdp_tree(const Graph& g)
{
    if (g.order() == 0)
        throw DomainError("empty graph");
    if (!is_connected(g))
        throw PreconditionError("graph must be connected");
    StructureVerdict v{true, true, std::nullopt};
    for (const auto& b : blocks(g).blocks) {
        auto m = b.members();
        bool clique = is_clique_block(g, m);
        bool cycle = !clique && is_cycle_block(g, b);
        if (!clique && !cycle) {
            v.is_gdp_tree = v.is_gallai_tree = false;
            if (!v.offending_block)
                v.offending_block = b;
        } else if (cycle && m.size() % 2 == 0) {
            v.is_gallai_tree = false;
        }
    }
    return v;
}

double lower_bound_regular(int d, int n)
{
    if (n < 2)
        throw PreconditionError("n must be at least 2");
    return d - std::sqrt(2.0 * n);
}

double lower_bound_trianglefree(int d, int n)
{
    if (n < 4)
        throw PreconditionError("n must be at least 4");
    return d - std::sqrt(static_cast<double>(n)) - 1;
}

bool meets_regular_bound(int wd, int d, int n)
{
    long long x = d - wd;
    return x <= 0 || x * x <= 2LL * n;
}

bool meets_trianglefree_bound(int wd, int d, int n)
{
    long long x = d - wd - 1;
    return x < 0 || x * x < n;
}

Rational average_degree(const Graph& g)
{
    if (g.order() == 0)
        throw DomainError("empty graph");
    return Rational(2 * static_cast<std::int64_t>(g.size()), g.order());
}

Rational mad_threshold(int d)
{
    return Rational(d) + Rational(d - 2, static_cast<std::int64_t>(d) * d + 2 * d - 2);
}

MadReport mad_theorem_check(const Graph& g, const MadCheckOptions& opt)
{
    if (g.order() == 0)
        throw DomainError("empty graph");
    MadReport r;
    if (g.order() <= opt.solver.max_vertices) {
        int wd = weak_degeneracy_exact(g, opt.solver).value;
        if (opt.level && *opt.level > wd)
            throw PreconditionError("requested level exceeds the weak degeneracy " +
                                    std::to_string(wd));
        r.d = opt.level.value_or(wd);
        r.exact = !opt.level || *opt.level == wd;
    } else if (opt.level) {
        r.d = *opt.level;
    } else {
        throw ResourceError("graph exceeds the exact solver guard; supply a weak degeneracy "
                            "lower bound");
    }
    r.mad = max_average_degree(g);
    if (r.d < 3)
        return r;
    r.threshold = mad_threshold(r.d);
    r.has_clique = has_clique(g, r.d + 1);
    if (r.has_clique)
        r.outcome = MadOutcome::clique;
    else if (r.mad >= r.threshold)
        r.outcome = MadOutcome::mad_bound;
    else
        r.outcome = MadOutcome::violated;
    return r;
}

std::string to_string(MadOutcome o)
{
    switch (o) {
    case MadOutcome::hypothesis_not_met:
        return "hypothesis not met";
    case MadOutcome::clique:
        return "clique";
    case MadOutcome::mad_bound:
        return "mad bound";
    case MadOutcome::violated:
        return "violated";
    }
    return "?";
}

MinimalityReport minimality_check(const Graph& g, const SolverOptions& opt)
{
    if (g.order() == 0)
        throw DomainError("empty graph");
    if (g.order() > opt.max_vertices)
        throw ResourceError("graph exceeds the exact solver guard");
    MinimalityReport r;
    r.wd = weak_degeneracy_exact(g, opt).value;
    auto wd_of = [&](const Graph& h) {
        return h.order() == 0 ? -1 : weak_degeneracy_exact(h, opt).value;
    };
    for (Vertex v = 0; v < g.order(); ++v) {
        if (wd_of(remove_vertex(g, v)) >= r.wd) {
            r.witness = "delete vertex " + std::to_string(v);
            return r;
        }
    }
    for (auto e : g.edges()) {
        if (wd_of(remove_edge(g, e)) >= r.wd) {
            r.witness = "delete edge " + std::to_string(e.first) + "-" + std::to_string(e.second);
            return r;
        }
    }
    r.minimal = true;
    r.min_degree_ok = g.min_degree() >= r.wd;
    VertexSet u(g.order());
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) == r.wd)
            u.insert(v);
    auto sub = induced_subgraph(g, u);
    for (const auto& comp : connected_components(sub.graph)) {
        auto c = induced_subgraph(sub.graph, comp);
        if (!is_gdp_tree(c.graph).is_gdp_tree)
            r.components_ok = false;
    }
    return r;
}

} // namespace wdeg
