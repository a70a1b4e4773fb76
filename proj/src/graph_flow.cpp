#include "wdeg/errors.hpp"
#include "wdeg/graph.hpp"

#include <algorithm>
#include <queue>

namespace wdeg {

namespace {

class Dinic
{
public:
    explicit Dinic(int n) : g_(n), level_(n), it_(n) {}

    void add_edge(int u, int v, std::int64_t cap)
    {
        g_[u].push_back({v, static_cast<int>(g_[v].size()), cap});
        g_[v].push_back({u, static_cast<int>(g_[u].size()) - 1, 0});
    }

    std::int64_t max_flow(int s, int t)
    {
        std::int64_t flow = 0;
        while (bfs(s, t)) {
            std::fill(it_.begin(), it_.end(), 0);
            while (auto f = dfs(s, t, kInf))
                flow += f;
        }
        return flow;
    }

    /// Vertices reachable from s in the residual network after max_flow.
    std::vector<char> source_side(int s) const
    {
        std::vector<char> seen(g_.size(), 0);
        std::vector<int> st{s};
        seen[s] = 1;
        while (!st.empty()) {
            int u = st.back();
            st.pop_back();
            for (const auto& e : g_[u])
                if (e.cap > 0 && !seen[e.to]) {
                    seen[e.to] = 1;
                    st.push_back(e.to);
                }
        }
        return seen;
    }

    static constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

private:
    struct Arc {
        int to, rev;
        std::int64_t cap;
    };

    bool bfs(int s, int t)
    {
        std::fill(level_.begin(), level_.end(), -1);
        std::queue<int> q;
        level_[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (const auto& e : g_[u])
                if (e.cap > 0 && level_[e.to] < 0) {
                    level_[e.to] = level_[u] + 1;
                    q.push(e.to);
                }
        }
        return level_[t] >= 0;
    }

    std::int64_t dfs(int u, int t, std::int64_t pushed)
    {
        if (u == t)
            return pushed;
        for (auto& i = it_[u]; i < g_[u].size(); ++i) {
            auto& e = g_[u][i];
            if (e.cap <= 0 || level_[e.to] != level_[u] + 1)
                continue;
            if (auto f = dfs(e.to, t, std::min(pushed, e.cap))) {
                e.cap -= f;
                g_[e.to][e.rev].cap += f;
                return f;
            }
        }
        return 0;
    }

    std::vector<std::vector<Arc>> g_;
    std::vector<int> level_;
    std::vector<std::size_t> it_;
};

// Maximizes b*|E(S)| - a*|V(S)| over vertex subsets as a maximum-weight closure
// (edge nodes of weight b depend on both endpoint nodes of weight -a).
std::vector<char> densest_for_ratio(const Graph& g, const std::vector<Edge>& es, std::int64_t a,
                                    std::int64_t b)
{
    const int n = g.order();
    const int m = static_cast<int>(es.size());
    const int s = n + m, t = n + m + 1;
    Dinic net(n + m + 2);
    for (int i = 0; i < m; ++i) {
        net.add_edge(s, n + i, b);
        net.add_edge(n + i, es[i].first, Dinic::kInf);
        net.add_edge(n + i, es[i].second, Dinic::kInf);
    }
    for (int v = 0; v < n; ++v)
        net.add_edge(v, t, a);
    net.max_flow(s, t);
    auto side = net.source_side(s);
    side.resize(n);
    return side;
}

} // namespace

Rational max_average_degree_flow(const Graph& g)
{
    const int n = g.order();
    if (n == 0)
        throw DomainError("mad of the empty graph is undefined");
    const auto es = g.edges();
    // Dinkelbach: density lambda = e/v strictly increases until no subset beats it.
    std::int64_t e = static_cast<std::int64_t>(es.size()), v = n;
    while (true) {
        auto side = densest_for_ratio(g, es, e, v);
        std::int64_t ve = 0, ee = 0;
        for (int x = 0; x < n; ++x)
            ve += side[x];
        for (auto [a, b] : es)
            ee += side[a] && side[b];
        if (ve == 0 || ee * v <= e * ve)
            break;
        e = ee;
        v = ve;
    }
    return Rational(2 * e, v);
}

} // namespace wdeg
