#include "wdeg/dp_coloring.hpp"
#include "wdeg/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

namespace wdeg {

using nlohmann::json;

int Cover::partner(Vertex u, Vertex v, int c) const
{
    bool low = u < v;
    auto it = matchings.find(low ? Edge{u, v} : Edge{v, u});
    if (it == matchings.end())
        return -1;
    for (auto [a, b] : it->second) {
        if (low && a == c)
            return b;
        if (!low && b == c)
            return a;
    }
    return -1;
}

void Cover::add_pair(Vertex u, int cu, Vertex v, int cv)
{
    if (u < v)
        matchings[{u, v}].emplace_back(cu, cv);
    else
        matchings[{v, u}].emplace_back(cv, cu);
}

void validate_cover(const Graph& g, const Cover& cover)
{
    const int n = g.order();
    if (static_cast<int>(cover.lists.size()) != n)
        throw StructuralError("cover has " + std::to_string(cover.lists.size()) +
                              " lists for " + std::to_string(n) + " vertices");
    for (int v = 0; v < n; ++v) {
        const auto& l = cover.lists[v];
        for (std::size_t i = 1; i < l.size(); ++i)
            if (l[i - 1] >= l[i])
                throw StructuralError("list of vertex " + std::to_string(v) +
                                      " is not sorted and duplicate-free");
    }
    auto in = [&](int v, int c) {
        const auto& l = cover.lists[v];
        return std::binary_search(l.begin(), l.end(), c);
    };
    for (const auto& [e, pairs] : cover.matchings) {
        auto [a, b] = e;
        if (a < 0 || b >= n || a >= b || !g.adjacent(a, b))
            throw StructuralError("matching on non-edge (" + std::to_string(a) + ", " +
                                  std::to_string(b) + ")");
        std::vector<int> ca, cb;
        for (auto [x, y] : pairs) {
            if (!in(a, x) || !in(b, y))
                throw StructuralError("matched color outside a list on edge (" + std::to_string(a) +
                                      ", " + std::to_string(b) + ")");
            ca.push_back(x);
            cb.push_back(y);
        }
        std::sort(ca.begin(), ca.end());
        std::sort(cb.begin(), cb.end());
        if (std::adjacent_find(ca.begin(), ca.end()) != ca.end() ||
            std::adjacent_find(cb.begin(), cb.end()) != cb.end())
            throw StructuralError("matching on edge (" + std::to_string(a) + ", " +
                                  std::to_string(b) + ") is not injective");
    }
}

bool is_proper(const Graph& g, const Cover& cover, const std::vector<int>& phi)
{
    validate_cover(g, cover);
    if (static_cast<int>(phi.size()) != g.order())
        throw StructuralError("coloring is not total");
    for (int v = 0; v < g.order(); ++v) {
        const auto& l = cover.lists[v];
        if (!std::binary_search(l.begin(), l.end(), phi[v]))
            throw StructuralError("color " + std::to_string(phi[v]) + " of vertex " +
                                  std::to_string(v) + " is not in its list");
    }
    for (const auto& [e, pairs] : cover.matchings)
        for (auto [x, y] : pairs)
            if (phi[e.first] == x && phi[e.second] == y)
                return false;
    return true;
}

Cover list_cover(const Graph& g, const std::vector<std::vector<int>>& lists)
{
    Cover c;
    c.lists = lists;
    for (auto& l : c.lists) {
        std::sort(l.begin(), l.end());
        l.erase(std::unique(l.begin(), l.end()), l.end());
    }
    if (static_cast<int>(c.lists.size()) != g.order())
        throw StructuralError("one list per vertex required");
    for (auto [u, v] : g.edges()) {
        std::vector<int> common;
        std::set_intersection(c.lists[u].begin(), c.lists[u].end(), c.lists[v].begin(),
                              c.lists[v].end(), std::back_inserter(common));
        auto& m = c.matchings[{u, v}];
        for (int x : common)
            m.emplace_back(x, x);
    }
    return c;
}

Cover random_cover(const Graph& g, const std::vector<int>& sizes, int palette, double density,
                   Rng& rng)
{
    const int n = g.order();
    if (static_cast<int>(sizes.size()) != n)
        throw StructuralError("one list size per vertex required");
    Cover c;
    c.lists.resize(n);
    std::vector<int> pal(std::max(palette, 0));
    std::iota(pal.begin(), pal.end(), 0);
    for (int v = 0; v < n; ++v) {
        if (sizes[v] > palette)
            throw PreconditionError("list size exceeds the palette");
        std::shuffle(pal.begin(), pal.end(), rng);
        c.lists[v].assign(pal.begin(), pal.begin() + std::max(sizes[v], 0));
        std::sort(c.lists[v].begin(), c.lists[v].end());
    }
    std::bernoulli_distribution coin(density);
    for (auto [u, v] : g.edges()) {
        auto free = c.lists[v];
        std::shuffle(free.begin(), free.end(), rng);
        auto& m = c.matchings[{u, v}];
        for (int x : c.lists[u]) {
            if (free.empty())
                break;
            if (coin(rng)) {
                m.emplace_back(x, free.back());
                free.pop_back();
            }
        }
    }
    return c;
}

std::vector<int> color_from_certificate(const Graph& g, const Cover& cover,
                                        const Certificate& cert)
{
    validate_cover(g, cover);
    auto rep = verify_certificate(g, cert);
    if (!rep.ok)
        throw PreconditionError("certificate does not verify: " + rep.reason);
    const int n = g.order();
    for (int v = 0; v < n; ++v)
        if (static_cast<int>(cover.lists[v].size()) < cert.initial_f[v] + 1)
            throw PreconditionError("list of vertex " + std::to_string(v) + " is shorter than f + 1");

    auto avail = cover.lists;
    auto f = cert.initial_f;
    std::vector<char> alive(n, 1);
    std::vector<int> phi(n, -1);
    for (const auto& op : cert.ops) {
        const int u = op.u;
        WDEG_ENSURE(!avail[u].empty(), "vertex ran out of colors");
        int color = avail[u].front();
        if (op.is_save() && static_cast<int>(avail[op.w].size()) == f[op.w] + 1) {
            color = -1;
            for (int c : avail[u]) {
                int p = cover.partner(u, op.w, c);
                if (p < 0 || !std::binary_search(avail[op.w].begin(), avail[op.w].end(), p)) {
                    color = c;
                    break;
                }
            }
            WDEG_ENSURE(color >= 0, "no color of the saving vertex avoids the saved list");
        }
        phi[u] = color;
        alive[u] = 0;
        for (int v : g.neighbors(u)) {
            if (!alive[v])
                continue;
            int p = cover.partner(u, v, color);
            if (p >= 0) {
                auto it = std::lower_bound(avail[v].begin(), avail[v].end(), p);
                if (it != avail[v].end() && *it == p)
                    avail[v].erase(it);
            }
            if (!(op.is_save() && v == op.w))
                --f[v];
        }
        for (int v : g.neighbors(u))
            if (alive[v])
                WDEG_ENSURE(static_cast<int>(avail[v].size()) >= f[v] + 1,
                            "list invariant |L(v)| >= f(v) + 1 broken");
    }
    WDEG_ENSURE(is_proper(g, cover, phi), "certificate coloring is not proper");
    return phi;
}

namespace {

using Bits = std::vector<std::uint64_t>;

void and_into(Bits& acc, const Bits& b)
{
    for (std::size_t i = 0; i < acc.size(); ++i)
        acc[i] &= b[i];
}

bool any(const Bits& b)
{
    for (auto w : b)
        if (w)
            return true;
    return false;
}

} // namespace

DpOracleResult brute_force_dp_colorable(const Graph& g, int k, const DpOracleLimits& lim)
{
    const int n = g.order();
    if (n > lim.max_vertices || k > lim.max_colors)
        throw ResourceError("DP oracle limited to n <= " + std::to_string(lim.max_vertices) +
                            " and k <= " + std::to_string(lim.max_colors));
    if (k < 0)
        throw PreconditionError("k must be non-negative");
    if (n == 0)
        return {true, std::nullopt};
    if (k == 0) {
        Cover c;
        c.lists.assign(n, {});
        return {false, c};
    }

    // a spanning forest can be relabelled to identity matchings; only the
    // remaining edges need to range over all k! perfect matchings
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    std::vector<Edge> tree, rest;
    for (auto e : g.edges()) {
        int a = find(e.first), b = find(e.second);
        if (a != b) {
            parent[a] = b;
            tree.push_back(e);
        } else {
            rest.push_back(e);
        }
    }
    double fact = 1;
    for (int i = 2; i <= k; ++i)
        fact *= i;
    if (std::pow(fact, static_cast<double>(rest.size())) > lim.max_covers)
        throw ResourceError("DP oracle cover space too large");

    std::size_t total = 1;
    for (int i = 0; i < n; ++i)
        total *= k;
    const std::size_t words = (total + 63) / 64;
    std::vector<int> pw(n, 1);
    for (int i = 1; i < n; ++i)
        pw[i] = pw[i - 1] * k;
    auto digit = [&](std::size_t idx, int v) { return static_cast<int>(idx / pw[v] % k); };

    std::vector<std::vector<int>> perms;
    std::vector<int> p(k);
    std::iota(p.begin(), p.end(), 0);
    do
        perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));

    auto allowed = [&](Edge e, const std::vector<int>& pi) {
        Bits b(words, 0);
        for (std::size_t idx = 0; idx < total; ++idx)
            if (pi[digit(idx, e.first)] != digit(idx, e.second))
                b[idx >> 6] |= std::uint64_t{1} << (idx & 63);
        return b;
    };

    Bits base(words, 0);
    for (std::size_t idx = 0; idx < total; ++idx)
        base[idx >> 6] |= std::uint64_t{1} << (idx & 63);
    for (auto e : tree)
        and_into(base, allowed(e, perms[0]));

    std::vector<std::vector<Bits>> table(rest.size());
    for (std::size_t i = 0; i < rest.size(); ++i)
        for (const auto& pi : perms)
            table[i].push_back(allowed(rest[i], pi));

    std::vector<int> choice(rest.size(), 0);
    std::function<bool(std::size_t, const Bits&)> dfs = [&](std::size_t i, const Bits& acc) {
        if (!any(acc))
            return false;
        if (i == rest.size())
            return true;
        for (std::size_t j = 0; j < perms.size(); ++j) {
            Bits next = acc;
            and_into(next, table[i][j]);
            choice[i] = static_cast<int>(j);
            if (!dfs(i + 1, next))
                return false;
        }
        return true;
    };
    if (dfs(0, base))
        return {true, std::nullopt};

    // colors are reported as 1..k
    Cover w;
    w.lists.assign(n, {});
    for (int v = 0; v < n; ++v)
        for (int c = 1; c <= k; ++c)
            w.lists[v].push_back(c);
    for (auto e : tree)
        for (int c = 0; c < k; ++c)
            w.matchings[e].emplace_back(c + 1, c + 1);
    for (std::size_t i = 0; i < rest.size(); ++i)
        for (int c = 0; c < k; ++c)
            w.matchings[rest[i]].emplace_back(c + 1, perms[choice[i]][c] + 1);
    return {false, w};
}

int dp_chromatic_exact(const Graph& g, const DpOracleLimits& lim)
{
    if (g.order() == 0)
        return 0;
    for (int k = 1; k <= lim.max_colors; ++k)
        if (brute_force_dp_colorable(g, k, lim).colorable)
            return k;
    throw ResourceError("DP chromatic number exceeds " + std::to_string(lim.max_colors));
}

std::string dump_cover(const Cover& cover)
{
    json j;
    j["lists"] = cover.lists;
    json ms = json::array();
    for (const auto& [e, pairs] : cover.matchings) {
        json m;
        m["u"] = e.first;
        m["v"] = e.second;
        json ps = json::array();
        for (auto [a, b] : pairs)
            ps.push_back({a, b});
        m["pairs"] = ps;
        ms.push_back(m);
    }
    j["matchings"] = ms;
    return j.dump(2) + "\n";
}

Cover parse_cover(const std::string& text)
{
    try {
        auto j = json::parse(text);
        Cover c;
        c.lists = j.at("lists").get<std::vector<std::vector<int>>>();
        for (const auto& m : j.at("matchings")) {
            int u = m.at("u").get<int>(), v = m.at("v").get<int>();
            // keep edges with an empty matching so that dump/parse is lossless
            c.matchings.try_emplace({std::min(u, v), std::max(u, v)});
            for (const auto& p : m.at("pairs"))
                c.add_pair(u, p.at(0).get<int>(), v, p.at(1).get<int>());
        }
        return c;
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed cover: ") + e.what(), 0);
    }
}

} // namespace wdeg
