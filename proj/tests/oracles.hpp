// Slow, independent reference implementations used to cross-check the library.
#ifndef WDEG_TESTS_ORACLES_HPP
#define WDEG_TESTS_ORACLES_HPP

#include "wdeg/certificate.hpp"
#include "wdeg/dp_coloring.hpp"
#include "wdeg/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

namespace wdeg::oracle {

// Plain exhaustive search over every legal Delete / DelSave at every step.
// The only shortcut is a set of states already known to fail, keyed on the
// present vertices and their charges.
class NaiveSearch
{
public:
    NaiveSearch(const Graph& g) : g_(g), n_(g.order()) {}

    bool run(const WeightFn& f)
    {
        failed_.clear();
        for (int x : f)
            if (x < 0)
                return false;
        WeightFn cur(f);
        return step(n_ == 64 ? ~0ull : (1ull << n_) - 1, cur);
    }

private:
    bool step(std::uint64_t present, WeightFn& f)
    {
        if (present == 0)
            return true;
        std::vector<int> key(f);
        for (int v = 0; v < n_; ++v)
            if (!((present >> v) & 1))
                key[v] = -1;
        if (failed_.count({present, key}))
            return false;
        for (int u = 0; u < n_; ++u) {
            if (!((present >> u) & 1))
                continue;
            // w = -1 is a plain Delete
            for (int w = -1; w < n_; ++w) {
                if (w >= 0 && (!((present >> w) & 1) || !g_.adjacent(u, w) || f[u] <= f[w]))
                    continue;
                bool legal = true;
                for (int v : g_.neighbors(u))
                    if (((present >> v) & 1) && v != w && f[v] == 0)
                        legal = false;
                if (!legal)
                    continue;
                for (int v : g_.neighbors(u))
                    if (((present >> v) & 1) && v != w)
                        --f[v];
                bool ok = step(present & ~(1ull << u), f);
                for (int v : g_.neighbors(u))
                    if (((present >> v) & 1) && v != w)
                        ++f[v];
                if (ok)
                    return true;
            }
        }
        failed_.insert({present, key});
        return false;
    }

    const Graph& g_;
    int n_;
    std::set<std::pair<std::uint64_t, std::vector<int>>> failed_;
};

inline bool naive_weakly_f_degenerate(const Graph& g, const WeightFn& f)
{
    return NaiveSearch(g).run(f);
}

inline int naive_weak_degeneracy(const Graph& g)
{
    NaiveSearch s(g);
    for (int d = 0;; ++d)
        if (s.run(constant_f(g.order(), d)))
            return d;
}

// mad by enumerating every nonempty vertex subset.
inline Rational naive_mad(const Graph& g)
{
    const int n = g.order();
    Rational best(0);
    for (std::uint64_t s = 1; s < (1ull << n); ++s) {
        int verts = 0, twice_edges = 0;
        for (int u = 0; u < n; ++u) {
            if (!((s >> u) & 1))
                continue;
            ++verts;
            for (int v : g.neighbors(u))
                twice_edges += (s >> v) & 1;
        }
        best = std::max(best, Rational(twice_edges, verts));
    }
    return best;
}

// Some proper coloring exists for this cover, by trying all assignments.
inline bool cover_colorable(const Graph& g, const Cover& cover)
{
    const int n = g.order();
    std::vector<int> phi(n, -1);
    auto rec = [&](auto&& self, int v) -> bool {
        if (v == n)
            return true;
        for (int c : cover.lists[v]) {
            bool ok = true;
            for (int u : g.neighbors(v))
                if (u < v && cover.partner(v, u, c) == phi[u])
                    ok = false;
            if (!ok)
                continue;
            phi[v] = c;
            if (self(self, v + 1))
                return true;
        }
        phi[v] = -1;
        return false;
    };
    return rec(rec, 0);
}

// DP k-colorability by enumerating every cover with lists {0..k-1} and an
// arbitrary partial matching (including the empty one) on each edge.
inline bool naive_dp_colorable(const Graph& g, int k)
{
    const int n = g.order();
    // all partial matchings between {0..k-1} and {0..k-1}
    std::vector<std::vector<ColorPair>> matchings;
    std::vector<int> to(k, -1);
    auto gen = [&](auto&& self, int a, std::vector<char>& used) -> void {
        if (a == k) {
            std::vector<ColorPair> m;
            for (int i = 0; i < k; ++i)
                if (to[i] >= 0)
                    m.emplace_back(i, to[i]);
            matchings.push_back(m);
            return;
        }
        to[a] = -1;
        self(self, a + 1, used);
        for (int b = 0; b < k; ++b) {
            if (used[b])
                continue;
            used[b] = 1;
            to[a] = b;
            self(self, a + 1, used);
            used[b] = 0;
        }
        to[a] = -1;
    };
    std::vector<char> used(k, 0);
    gen(gen, 0, used);

    const auto edges = g.edges();
    std::vector<std::size_t> pick(edges.size(), 0);
    std::vector<std::vector<int>> lists(n, std::vector<int>(k));
    for (auto& l : lists)
        std::iota(l.begin(), l.end(), 0);
    for (;;) {
        Cover c;
        c.lists = lists;
        for (std::size_t i = 0; i < edges.size(); ++i)
            for (auto [a, b] : matchings[pick[i]])
                c.add_pair(edges[i].first, a, edges[i].second, b);
        if (!cover_colorable(g, c))
            return false;
        std::size_t i = 0;
        while (i < pick.size() && ++pick[i] == matchings.size())
            pick[i++] = 0;
        if (i == pick.size())
            return true;
    }
}

} // namespace wdeg::oracle

#endif
