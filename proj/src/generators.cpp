#include "wdeg/generators.hpp"
#include "wdeg/errors.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace wdeg {

Graph complete_graph(int n)
{
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            es.emplace_back(u, v);
    return Graph(n, es);
}

Graph cycle_graph(int n)
{
    if (n < 3)
        throw PreconditionError("a cycle needs at least 3 vertices");
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i)
        es.emplace_back(i, (i + 1) % n);
    return Graph(n, es);
}

Graph path_graph(int n)
{
    std::vector<Edge> es;
    for (int i = 0; i + 1 < n; ++i)
        es.emplace_back(i, i + 1);
    return Graph(n, es);
}

Graph star_graph(int leaves)
{
    std::vector<Edge> es;
    for (int i = 1; i <= leaves; ++i)
        es.emplace_back(0, i);
    return Graph(leaves + 1, es);
}

Graph complete_bipartite(int a, int b)
{
    std::vector<Edge> es;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v)
            es.emplace_back(u, a + v);
    return Graph(a + b, es);
}

Graph wheel_graph(int rim)
{
    if (rim < 3)
        throw PreconditionError("a wheel needs a rim of at least 3 vertices");
    std::vector<Edge> es;
    for (int i = 0; i < rim; ++i) {
        es.emplace_back(0, 1 + i);
        es.emplace_back(1 + i, 1 + (i + 1) % rim);
    }
    return Graph(rim + 1, es);
}

Graph prism_graph(int n)
{
    if (n < 3)
        throw PreconditionError("a prism needs n >= 3");
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i) {
        es.emplace_back(i, (i + 1) % n);
        es.emplace_back(n + i, n + (i + 1) % n);
        es.emplace_back(i, n + i);
    }
    return Graph(2 * n, es);
}

Graph petersen_graph()
{
    std::vector<Edge> es;
    for (int i = 0; i < 5; ++i) {
        es.emplace_back(i, (i + 1) % 5);
        es.emplace_back(i, 5 + i);
        es.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return Graph(10, es);
}

Graph cube_graph()
{
    std::vector<Edge> es;
    for (int v = 0; v < 8; ++v)
        for (int b = 0; b < 3; ++b)
            if (v < (v ^ (1 << b)))
                es.emplace_back(v, v ^ (1 << b));
    return Graph(8, es);
}

Graph gnp(int n, double p, Rng& rng)
{
    std::bernoulli_distribution coin(p);
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng))
                es.emplace_back(u, v);
    return Graph(n, es);
}

Graph random_tree(int n, Rng& rng)
{
    std::vector<Edge> es;
    for (int v = 1; v < n; ++v)
        es.emplace_back(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
    return Graph(n, es);
}

namespace {

// Random double-edge switches ab, cd -> ac, bd keeping the graph simple.
// `bipartite_half` > 0 restricts to switches that keep sides 0..half-1 / rest.
Graph mix_by_switches(int n, std::vector<Edge> es, Rng& rng, int bipartite_half)
{
    if (es.size() < 2)
        return Graph(n, es);
    std::set<Edge> present;
    auto key = [](int a, int b) { return Edge{std::min(a, b), std::max(a, b)}; };
    for (auto& e : es) {
        if (bipartite_half > 0 && e.first >= bipartite_half)
            std::swap(e.first, e.second);
        present.insert(key(e.first, e.second));
    }
    std::uniform_int_distribution<std::size_t> pick(0, es.size() - 1);
    const std::size_t rounds = 10 * es.size();
    for (std::size_t r = 0; r < rounds; ++r) {
        std::size_t i = pick(rng), j = pick(rng);
        if (i == j)
            continue;
        auto [a, b] = es[i];
        auto [c, d] = es[j];
        if (bipartite_half == 0 && (rng() & 1))
            std::swap(c, d);
        // new edges a-d, c-b
        if (a == d || c == b || a == c || b == d)
            continue;
        if (present.count(key(a, d)) || present.count(key(c, b)))
            continue;
        present.erase(key(a, b));
        present.erase(key(c, d));
        present.insert(key(a, d));
        present.insert(key(c, b));
        es[i] = {a, d};
        es[j] = {c, b};
    }
    return Graph(n, es);
}

} // namespace

Graph random_regular(int n, int d, Rng& rng)
{
    if (d < 0 || d >= n || (static_cast<long long>(n) * d) % 2 != 0)
        throw PreconditionError("no d-regular graph on n vertices with these parameters");
    std::vector<Edge> es;
    for (int v = 0; v < n; ++v)
        for (int k = 1; k <= d / 2; ++k)
            es.emplace_back(v, (v + k) % n);
    if (d % 2 == 1)
        for (int v = 0; v < n / 2; ++v)
            es.emplace_back(v, v + n / 2);
    return mix_by_switches(n, es, rng, 0);
}

Graph random_bipartite_regular(int half, int d, Rng& rng)
{
    if (d < 0 || d > half)
        throw PreconditionError("bipartite d-regular graph needs d <= half");
    std::vector<Edge> es;
    for (int a = 0; a < half; ++a)
        for (int k = 0; k < d; ++k)
            es.emplace_back(a, half + (a + k) % half);
    return mix_by_switches(2 * half, es, rng, half);
}

bool is_prime(int q)
{
    if (q < 2)
        return false;
    for (int p = 2; p * p <= q; ++p)
        if (q % p == 0)
            return false;
    return true;
}

Graph projective_plane_incidence(int q)
{
    if (!is_prime(q))
        throw PreconditionError("projective plane incidence graph needs a prime order");
    std::vector<std::array<int, 3>> pts;
    for (int x = 0; x < q; ++x)
        for (int y = 0; y < q; ++y)
            pts.push_back({1, x, y});
    for (int x = 0; x < q; ++x)
        pts.push_back({0, 1, x});
    pts.push_back({0, 0, 1});
    const int np = static_cast<int>(pts.size());
    std::vector<Edge> es;
    for (int i = 0; i < np; ++i)
        for (int j = 0; j < np; ++j) {
            long long dot = 0;
            for (int c = 0; c < 3; ++c)
                dot += static_cast<long long>(pts[i][c]) * pts[j][c];
            if (dot % q == 0)
                es.emplace_back(i, np + j);
        }
    return Graph(2 * np, es);
}

Graph bipartite_double_cover(const Graph& g)
{
    const int n = g.order();
    std::vector<Edge> es;
    for (auto [u, v] : g.edges()) {
        es.emplace_back(u, n + v);
        es.emplace_back(v, n + u);
    }
    return Graph(2 * n, es);
}

} // namespace wdeg
