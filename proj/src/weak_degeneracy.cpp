#include "wdeg/weak_degeneracy.hpp"
#include "wdeg/errors.hpp"

#include <algorithm>
#include <array>

namespace wdeg {

namespace {

void require_verified(const Graph& g, const Certificate& cert)
{
    auto rep = verify_certificate(g, cert);
    if (!rep.ok)
        throw PreconditionError("input certificate does not verify: " + rep.reason);
}

} // namespace

Certificate certificate_for_subgraph(const Graph& g, const Certificate& cert, const Graph& h,
                                     const std::vector<Vertex>& h_to_g, const WeightFn& h_f)
{
    check_covers(g, cert);
    const int k = h.order();
    if (static_cast<int>(h_to_g.size()) != k || static_cast<int>(h_f.size()) != k)
        throw StructuralError("subgraph mapping does not match the subgraph");
    std::vector<int> from_g(g.order(), -1);
    for (int i = 0; i < k; ++i) {
        int p = h_to_g[i];
        if (p < 0 || p >= g.order() || from_g[p] >= 0)
            throw StructuralError("subgraph mapping is not injective into the graph");
        from_g[p] = i;
        if (h_f[i] < cert.initial_f[p])
            throw PreconditionError("new weight of vertex " + std::to_string(p) +
                                    " is below the certified weight");
    }
    for (auto [a, b] : h.edges())
        if (!g.adjacent(h_to_g[a], h_to_g[b]))
            throw StructuralError("subgraph edge is not an edge of the graph");
    Certificate out;
    out.initial_f = h_f;
    if (cert.safe_set) {
        VertexSet s(k);
        for (int i = 0; i < k; ++i)
            if (cert.safe_set->contains(h_to_g[i]))
                s.insert(i);
        out.safe_set = s;
    }
    // the running weights on h dominate those of the replay on g, so a Delete
    // can always stand in for a save that is no longer legal
    auto cur = h_f;
    std::vector<char> alive(k, 1);
    for (const auto& op : cert.ops) {
        int u = from_g[op.u];
        if (u < 0)
            continue;
        int w = op.is_save() ? from_g[op.w] : -1;
        if (w >= 0 && (!alive[w] || !h.adjacent(u, w) || cur[u] <= cur[w]))
            w = -1;
        for (int v : h.neighbors(u))
            if (alive[v] && v != w)
                --cur[v];
        alive[u] = 0;
        out.ops.push_back(w >= 0 ? Operation::save(u, w) : Operation::remove(u));
    }
    auto rep = verify_certificate(h, out);
    WDEG_ENSURE(rep.ok, "transferred certificate failed: " + rep.reason);
    return out;
}

Certificate restrict_certificate(const Graph& g, const Certificate& cert, const VertexSet& keep,
                                 const WeightFn& gfun)
{
    if (static_cast<int>(gfun.size()) != g.order())
        throw StructuralError("weight function size does not match the graph");
    auto sub = induced_subgraph(g, keep);
    WeightFn hf;
    for (int p : sub.to_parent)
        hf.push_back(gfun[p]);
    return certificate_for_subgraph(g, cert, sub.graph, sub.to_parent, hf);
}

Certificate monotone_lift(const Graph& g, const Certificate& cert, const WeightFn& gfun)
{
    require_verified(g, cert);
    if (static_cast<int>(gfun.size()) != g.order())
        throw StructuralError("weight function size does not match the graph");
    for (int v = 0; v < g.order(); ++v)
        if (gfun[v] < cert.initial_f[v])
            throw PreconditionError("lifted weight of vertex " + std::to_string(v) +
                                    " is below the certified weight");
    return restrict_certificate(g, cert, VertexSet::full(g.order()), gfun);
}

PartitionResult partition(const Graph& g, const Certificate& cert, const WeightFn& f1,
                          const WeightFn& f2)
{
    require_verified(g, cert);
    const int n = g.order();
    if (static_cast<int>(f1.size()) != n || static_cast<int>(f2.size()) != n)
        throw StructuralError("share functions do not match the graph");
    for (int v = 0; v < n; ++v)
        if (f1[v] + f2[v] != cert.initial_f[v] - 1)
            throw PreconditionError("f1 + f2 != f - 1 at vertex " + std::to_string(v));

    // cur[0]/cur[1] are the running shares; lowered[i][v] records how far the
    // rebalancing step pushed part i's share of v below the running value.
    std::array<WeightFn, 2> cur{f1, f2};
    std::array<WeightFn, 2> lowered{WeightFn(n, 0), WeightFn(n, 0)};
    WeightFn f = cert.initial_f;
    std::vector<int> side(n, -1);
    std::vector<char> alive(n, 1);

    for (const auto& op : cert.ops) {
        const int u = op.u;
        int s;
        if (!op.is_save()) {
            s = cur[0][u] >= 0 ? 0 : 1;
        } else {
            const int w = op.w;
            for (int i = 0; i < 2; ++i) {
                if (cur[i][w] < -1) {
                    const int j = 1 - i;
                    lowered[j][w] += cur[j][w] - f[w];
                    cur[i][w] = -1;
                    cur[j][w] = f[w];
                }
            }
            s = cur[0][u] > cur[0][w] ? 0 : 1;
            WDEG_ENSURE(cur[s][u] > cur[s][w], "no part can absorb the save");
        }
        WDEG_ENSURE(cur[s][u] >= 0, "removed vertex has a negative share");
        side[u] = s;
        alive[u] = 0;
        for (int v : g.neighbors(u)) {
            if (!alive[v] || (op.is_save() && v == op.w))
                continue;
            --cur[s][v];
            --f[v];
        }
    }

    PartitionResult r;
    r.v1 = VertexSet(n);
    r.v2 = VertexSet(n);
    for (int v = 0; v < n; ++v)
        (side[v] == 0 ? r.v1 : r.v2).insert(v);

    std::array<const WeightFn*, 2> shares{&f1, &f2};
    std::array<InducedSubgraph*, 2> parts{&r.part1, &r.part2};
    std::array<Certificate*, 2> certs{&r.cert1, &r.cert2};
    for (int i = 0; i < 2; ++i) {
        *parts[i] = induced_subgraph(g, i == 0 ? r.v1 : r.v2);
        const auto& sub = *parts[i];
        Certificate eff;
        for (int p : sub.to_parent)
            eff.initial_f.push_back((*shares[i])[p] - lowered[i][p]);
        for (const auto& op : cert.ops) {
            if (side[op.u] != i)
                continue;
            int lu = sub.from_parent[op.u];
            if (op.is_save() && side[op.w] == i)
                eff.ops.push_back(Operation::save(lu, sub.from_parent[op.w]));
            else
                eff.ops.push_back(Operation::remove(lu));
        }
        auto rep = verify_certificate(sub.graph, eff);
        WDEG_ENSURE(rep.ok, "partition part " + std::to_string(i + 1) + " failed: " + rep.reason);
        WeightFn target;
        for (int p : sub.to_parent)
            target.push_back((*shares[i])[p]);
        *certs[i] = monotone_lift(sub.graph, eff, target);
    }
    return r;
}

Certificate greedy_delete_certificate(const Graph& g, const WeightFn& f, Vertex x)
{
    const int n = g.order();
    if (static_cast<int>(f.size()) != n)
        throw StructuralError("weight function size does not match the graph");
    if (x < 0 || x >= n)
        throw PreconditionError("witness vertex out of range");
    if (!is_connected(g))
        throw PreconditionError("graph must be connected");
    for (int v = 0; v < n; ++v)
        if (f[v] < g.degree(v) - 1 || f[v] < 0)
            throw PreconditionError("f(" + std::to_string(v) + ") < deg - 1");
    if (f[x] < g.degree(x))
        throw PreconditionError("witness vertex has f(x) < deg(x)");
    auto dist = bfs_distances(g, x);
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v)
        order[v] = v;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return dist[a] > dist[b]; });
    Certificate c{f, {}, {}};
    for (int v : order)
        c.ops.push_back(Operation::remove(v));
    auto rep = verify_certificate(g, c);
    WDEG_ENSURE(rep.ok, "greedy deletion failed: " + rep.reason);
    return c;
}

namespace {

std::optional<VertexSet> search_core(const Graph& g, const VertexSet& s)
{
    auto sub = induced_subgraph(g, s);
    for (const auto& blk : blocks(sub.graph).blocks) {
        const int size = blk.count();
        if (size < 3)
            continue;
        auto b = induced_subgraph(sub.graph, blk);
        VertexSet in_parent(g.order());
        for (int v : b.to_parent)
            in_parent.insert(sub.to_parent[v]);
        if (!b.graph.is_regular())
            return in_parent;
        const int d = b.graph.max_degree();
        if (d == size - 1 || d == 2)
            continue;
        // regular, 2-connected, neither clique nor cycle: removing any vertex
        // leaves a connected non-GDP-tree, so the search recurses into it
        VertexSet smaller = in_parent;
        smaller.erase(in_parent.members().front());
        if (auto r = search_core(g, smaller))
            return r;
        WDEG_ENSURE(false, "regular biconnected block without a non-regular core");
    }
    return std::nullopt;
}

} // namespace

std::optional<VertexSet> find_nonregular_biconnected(const Graph& g)
{
    if (!is_connected(g))
        throw PreconditionError("graph must be connected");
    return search_core(g, VertexSet::full(g.order()));
}

std::optional<Certificate> deg_minus_one_certificate(const Graph& g)
{
    const int n = g.order();
    if (n == 0 || !is_connected(g))
        throw PreconditionError("graph must be connected and nonempty");
    auto core = find_nonregular_biconnected(g);
    if (!core)
        return std::nullopt;
    const VertexSet& a = *core;
    Certificate c{degree_f(g, -1), {}, {}};

    // components of G - A, each emptied by decreasing distance from a vertex
    // that has a neighbor in A
    auto rest = induced_subgraph(g, VertexSet::full(n) - a);
    for (const auto& comp : connected_components(rest.graph)) {
        auto k = induced_subgraph(rest.graph, comp);
        int x = -1;
        for (int i = 0; i < k.graph.order() && x < 0; ++i)
            if (g.degree_in(rest.to_parent[k.to_parent[i]], a) > 0)
                x = i;
        WDEG_ENSURE(x >= 0, "component of G - A without an edge into A");
        auto dist = bfs_distances(k.graph, x);
        std::vector<int> order(k.graph.order());
        for (int i = 0; i < k.graph.order(); ++i)
            order[i] = i;
        std::stable_sort(order.begin(), order.end(),
                         [&](int p, int q) { return dist[p] > dist[q]; });
        for (int i : order)
            c.ops.push_back(Operation::remove(rest.to_parent[k.to_parent[i]]));
    }

    auto ga = induced_subgraph(g, a);
    int x = -1, y = -1;
    for (auto [p, q] : ga.graph.edges()) {
        int dp = ga.graph.degree(p), dq = ga.graph.degree(q);
        if (dp != dq) {
            x = dp < dq ? p : q;
            y = dp < dq ? q : p;
            break;
        }
    }
    WDEG_ENSURE(x >= 0, "non-regular connected core without an unbalanced edge");
    c.ops.push_back(Operation::save(ga.to_parent[y], ga.to_parent[x]));

    VertexSet rem = VertexSet::full(ga.graph.order());
    rem.erase(y);
    auto h = induced_subgraph(ga.graph, rem);
    auto dist = bfs_distances(h.graph, h.from_parent[x]);
    std::vector<int> order(h.graph.order());
    for (int i = 0; i < h.graph.order(); ++i)
        order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](int p, int q) { return dist[p] > dist[q]; });
    for (int i : order) {
        WDEG_ENSURE(dist[i] >= 0, "core minus the saving vertex is disconnected");
        c.ops.push_back(Operation::remove(ga.to_parent[h.to_parent[i]]));
    }

    auto rep = verify_certificate(g, c);
    WDEG_ENSURE(rep.ok, "(deg-1) certificate failed: " + rep.reason);
    return c;
}

} // namespace wdeg
