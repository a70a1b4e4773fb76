#include "wdeg/errors.hpp"
#include "wdeg/schemes.hpp"

namespace wdeg {

RegularEmbedding embed_regular_chrom(const Graph& g, int d, int k,
                                     std::optional<std::vector<int>> coloring)
{
    const int n = g.order();
    if (n > 0 && g.max_degree() > d)
        throw PreconditionError("maximum degree exceeds d");
    if (k < 1)
        throw PreconditionError("k must be positive");
    if (k == 1 && (g.size() > 0 || (d > 0 && n > 0)))
        throw PreconditionError("a single color class cannot carry a d-regular graph with edges");
    if (!coloring) {
        coloring = find_coloring(g, k);
        if (!coloring)
            throw PreconditionError("graph is not " + std::to_string(k) + "-colorable");
    }
    if (static_cast<int>(coloring->size()) != n || !is_proper_coloring(g, *coloring))
        throw PreconditionError("supplied coloring is not proper");
    for (int c : *coloring)
        if (c < 0 || c >= k)
            throw PreconditionError("coloring uses a color outside 0..k-1");

    RegularEmbedding cur{g, *coloring};
    while (cur.graph.order() > 0 && cur.graph.min_degree() < d) {
        const int m = cur.graph.order();
        std::vector<Edge> es = cur.graph.edges();
        for (auto [u, v] : cur.graph.edges())
            es.emplace_back(u + m, v + m);
        for (Vertex v = 0; v < m; ++v)
            if (cur.graph.degree(v) < d)
                es.emplace_back(v, v + m);
        std::vector<int> col = cur.coloring;
        for (Vertex v = 0; v < m; ++v)
            col.push_back((cur.coloring[v] + 1) % k);
        cur = {Graph(2 * m, es), col};
    }
    return cur;
}

std::optional<Graph> girth_regular_provider(int r, int girth_target)
{
    if (r < 0)
        return std::nullopt;
    if (r == 1)
        return complete_graph(2);
    if (r == 2)
        return cycle_graph(std::max(3, girth_target));
    if (girth_target <= 3)
        return complete_graph(r + 1);
    if (girth_target <= 4)
        return complete_bipartite(r, r);
    if (girth_target <= 6 && is_prime(r - 1))
        return projective_plane_incidence(r - 1);
    return std::nullopt;
}

RegularEmbedding embed_regular_girth(const Graph& g, int d, int girth_target,
                                     std::optional<Graph> gamma)
{
    const int n = g.order();
    if (n > 0 && g.max_degree() > d)
        throw PreconditionError("maximum degree exceeds d");
    long long deficit = 0;
    for (Vertex v = 0; v < n; ++v)
        deficit += d - g.degree(v);
    if (deficit == 0)
        return {g, {}};
    if (deficit > 1'000'000)
        throw ResourceError("total deficiency too large");
    const int r = static_cast<int>(deficit);
    if (gamma) {
        if (gamma->order() == 0 || !gamma->is_regular() || gamma->max_degree() != r)
            throw PreconditionError("supplied gamma is not " + std::to_string(r) + "-regular");
        if (girth(*gamma) < girth_target)
            throw PreconditionError("supplied gamma has girth below the target");
    } else {
        gamma = girth_regular_provider(r, girth_target);
        if (!gamma)
            throw PreconditionError("no built-in " + std::to_string(r) + "-regular graph of girth " +
                                    std::to_string(girth_target) + "; supply one");
    }

    const int q = gamma->order();
    if (static_cast<long long>(q) * n > 50'000'000)
        throw ResourceError("embedding would exceed the vertex limit");
    std::vector<Edge> es;
    for (int i = 0; i < q; ++i)
        for (auto [u, v] : g.edges())
            es.emplace_back(i * n + u, i * n + v);
    std::vector<std::vector<int>> missing(q, std::vector<int>(n));
    std::vector<int> cursor(q, 0);
    for (int i = 0; i < q; ++i)
        for (Vertex v = 0; v < n; ++v)
            missing[i][v] = d - g.degree(v);
    // lowest deficient vertex of copy i
    auto take = [&](int i) {
        while (missing[i][cursor[i]] == 0)
            ++cursor[i];
        --missing[i][cursor[i]];
        return i * n + cursor[i];
    };
    for (auto [i, j] : gamma->edges()) {
        int u = take(i);
        int v = take(j);
        es.emplace_back(u, v);
    }
    RegularEmbedding out{Graph(q * n, es), {}};
    WDEG_ENSURE(out.graph.is_regular() && out.graph.max_degree() == d,
                "stitched graph is not regular");
    return out;
}

} // namespace wdeg
