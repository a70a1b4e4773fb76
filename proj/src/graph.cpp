#include "wdeg/graph.hpp"
#include "wdeg/errors.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <functional>
#include <queue>
#include <sstream>

namespace wdeg {

VertexSet::VertexSet(int n) : n_(n), words_((n + 63) / 64, 0) {}

VertexSet VertexSet::full(int n)
{
    VertexSet s(n);
    for (int v = 0; v < n; ++v)
        s.insert(v);
    return s;
}

VertexSet VertexSet::from(int n, std::span<const Vertex> members)
{
    VertexSet s(n);
    for (Vertex v : members)
        s.insert(v);
    return s;
}

void VertexSet::insert(Vertex v)
{
    if (v < 0 || v >= n_)
        throw StructuralError("vertex " + std::to_string(v) + " outside set universe");
    words_[v >> 6] |= std::uint64_t{1} << (v & 63);
}

void VertexSet::erase(Vertex v)
{
    if (v < 0 || v >= n_)
        return;
    words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

int VertexSet::count() const
{
    int c = 0;
    for (auto w : words_)
        c += std::popcount(w);
    return c;
}

std::vector<Vertex> VertexSet::members() const
{
    std::vector<Vertex> out;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        auto w = words_[i];
        while (w) {
            out.push_back(static_cast<int>(i * 64) + std::countr_zero(w));
            w &= w - 1;
        }
    }
    return out;
}

namespace {

void check_same_universe(const VertexSet& a, const VertexSet& b)
{
    if (a.universe() != b.universe())
        throw StructuralError("vertex sets over different universes");
}

} // namespace

VertexSet VertexSet::operator|(const VertexSet& o) const
{
    check_same_universe(*this, o);
    VertexSet r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i)
        r.words_[i] |= o.words_[i];
    return r;
}

VertexSet VertexSet::operator&(const VertexSet& o) const
{
    check_same_universe(*this, o);
    VertexSet r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i)
        r.words_[i] &= o.words_[i];
    return r;
}

VertexSet VertexSet::operator-(const VertexSet& o) const
{
    check_same_universe(*this, o);
    VertexSet r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i)
        r.words_[i] &= ~o.words_[i];
    return r;
}

Graph::Graph(int n) : adj_(n < 0 ? 0 : n)
{
    if (n < 0)
        throw ValidationError("negative vertex count");
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n)
{
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ValidationError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                  ") outside vertex range 0.." + std::to_string(n - 1));
        if (u == v)
            throw ValidationError("self-loop at vertex " + std::to_string(u));
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& a : adj_) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
        m_ += a.size();
    }
    m_ /= 2;
}

bool Graph::adjacent(Vertex u, Vertex v) const
{
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

int Graph::max_degree() const
{
    int d = 0;
    for (const auto& a : adj_)
        d = std::max(d, static_cast<int>(a.size()));
    return d;
}

int Graph::min_degree() const
{
    if (adj_.empty())
        return 0;
    int d = order();
    for (const auto& a : adj_)
        d = std::min(d, static_cast<int>(a.size()));
    return d;
}

bool Graph::is_regular() const
{
    return max_degree() == min_degree();
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(m_);
    for (int u = 0; u < order(); ++u)
        for (int v : adj_[u])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

int Graph::degree_in(Vertex u, const VertexSet& s) const
{
    int c = 0;
    for (int v : adj_[u])
        c += s.contains(v);
    return c;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s)
{
    InducedSubgraph r;
    r.from_parent.assign(g.order(), -1);
    for (int v = 0; v < g.order(); ++v) {
        if (s.contains(v)) {
            r.from_parent[v] = static_cast<int>(r.to_parent.size());
            r.to_parent.push_back(v);
        }
    }
    std::vector<Edge> es;
    for (auto [u, v] : g.edges())
        if (r.from_parent[u] >= 0 && r.from_parent[v] >= 0)
            es.emplace_back(r.from_parent[u], r.from_parent[v]);
    r.graph = Graph(static_cast<int>(r.to_parent.size()), es);
    return r;
}

Graph remove_edge(const Graph& g, Edge e)
{
    auto es = g.edges();
    Edge key{std::min(e.first, e.second), std::max(e.first, e.second)};
    es.erase(std::remove(es.begin(), es.end(), key), es.end());
    return Graph(g.order(), es);
}

Graph remove_vertex(const Graph& g, Vertex v)
{
    VertexSet s = VertexSet::full(g.order());
    s.erase(v);
    return induced_subgraph(g, s).graph;
}

Graph disjoint_union(const Graph& a, const Graph& b)
{
    auto es = a.edges();
    for (auto [u, v] : b.edges())
        es.emplace_back(u + a.order(), v + a.order());
    return Graph(a.order() + b.order(), es);
}

namespace {

std::vector<std::string_view> tokens(std::string_view line)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
            ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])))
            ++j;
        if (j > i)
            out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

long long to_int(std::string_view tok, int line)
{
    long long x = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), x);
    if (ec != std::errc() || p != tok.data() + tok.size())
        throw ParseError("expected integer, got '" + std::string(tok) + "'", line);
    return x;
}

template <class F>
void for_each_line(std::string_view text, F&& f)
{
    int lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        if (nl == std::string_view::npos)
            nl = text.size();
        ++lineno;
        auto line = text.substr(pos, nl - pos);
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        f(line, lineno);
        pos = nl + 1;
    }
}

} // namespace

GraphFormat detect_format(std::string_view text)
{
    GraphFormat fmt = GraphFormat::edge_list;
    bool done = false;
    for_each_line(text, [&](std::string_view line, int) {
        if (done)
            return;
        auto t = tokens(line);
        if (t.empty() || t[0][0] == '#')
            return;
        fmt = (t[0] == "p" || t[0] == "c") ? GraphFormat::dimacs : GraphFormat::edge_list;
        done = true;
    });
    return fmt;
}

Graph parse_graph(std::string_view text, GraphFormat format)
{
    long long n = -1;
    std::vector<Edge> es;
    if (format == GraphFormat::edge_list) {
        for_each_line(text, [&](std::string_view line, int ln) {
            auto t = tokens(line);
            if (t.empty() || t[0][0] == '#')
                return;
            if (n < 0) {
                if (t.size() != 1)
                    throw ParseError("first line must hold the vertex count", ln);
                n = to_int(t[0], ln);
                if (n < 0)
                    throw ParseError("negative vertex count", ln);
                return;
            }
            if (t.size() != 2)
                throw ParseError("expected 'u v'", ln);
            long long u = to_int(t[0], ln), v = to_int(t[1], ln);
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw ValidationError("line " + std::to_string(ln) + ": vertex id out of range");
            if (u == v)
                throw ValidationError("line " + std::to_string(ln) + ": self-loop at vertex " +
                                      std::to_string(u));
            es.emplace_back(static_cast<int>(u), static_cast<int>(v));
        });
    } else {
        for_each_line(text, [&](std::string_view line, int ln) {
            auto t = tokens(line);
            if (t.empty() || t[0] == "c")
                return;
            if (t[0] == "p") {
                if (n >= 0)
                    throw ParseError("duplicate problem line", ln);
                if (t.size() != 4)
                    throw ParseError("expected 'p edge n m'", ln);
                n = to_int(t[2], ln);
                to_int(t[3], ln);
                if (n < 0)
                    throw ParseError("negative vertex count", ln);
                return;
            }
            if (t[0] == "e") {
                if (n < 0)
                    throw ParseError("edge before problem line", ln);
                if (t.size() != 3)
                    throw ParseError("expected 'e u v'", ln);
                long long u = to_int(t[1], ln), v = to_int(t[2], ln);
                if (u < 1 || v < 1 || u > n || v > n)
                    throw ValidationError("line " + std::to_string(ln) + ": vertex id out of range");
                if (u == v)
                    throw ValidationError("line " + std::to_string(ln) + ": self-loop at vertex " +
                                          std::to_string(u));
                es.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
                return;
            }
            throw ParseError("unknown line type '" + std::string(t[0]) + "'", ln);
        });
    }
    if (n < 0)
        throw ParseError("missing vertex count", 0);
    return Graph(static_cast<int>(n), es);
}

std::string to_edge_list(const Graph& g)
{
    std::ostringstream os;
    os << g.order() << '\n';
    for (auto [u, v] : g.edges())
        os << u << ' ' << v << '\n';
    return os.str();
}

Degeneracy degeneracy(const Graph& g)
{
    const int n = g.order();
    Degeneracy r;
    if (n == 0)
        return r;
    // bucket queue keyed by current degree
    std::vector<int> deg(n);
    int maxd = 0;
    for (int v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        maxd = std::max(maxd, deg[v]);
    }
    std::vector<std::vector<int>> bucket(maxd + 1);
    for (int v = n - 1; v >= 0; --v)
        bucket[deg[v]].push_back(v);
    std::vector<char> removed(n, 0);
    int d = 0;
    for (int step = 0; step < n; ++step) {
        int b = 0;
        int v = -1;
        while (v < 0) {
            while (bucket[b].empty())
                ++b;
            int cand = bucket[b].back();
            bucket[b].pop_back();
            if (!removed[cand] && deg[cand] == b)
                v = cand;
        }
        removed[v] = 1;
        d = std::max(d, deg[v]);
        r.order.push_back(v);
        for (int w : g.neighbors(v)) {
            if (!removed[w]) {
                --deg[w];
                bucket[deg[w]].push_back(w);
            }
        }
    }
    r.value = d;
    return r;
}

Rational max_average_degree(const Graph& g)
{
    if (g.order() == 0)
        throw DomainError("mad of the empty graph is undefined");
    if (g.order() <= 20)
        return max_average_degree_enumerate(g);
    return max_average_degree_flow(g);
}

Rational max_average_degree_enumerate(const Graph& g)
{
    const int n = g.order();
    if (n == 0)
        throw DomainError("mad of the empty graph is undefined");
    if (n > 20)
        throw ResourceError("subset enumeration limited to 20 vertices");
    std::vector<std::uint32_t> nb(n, 0);
    for (auto [u, v] : g.edges()) {
        nb[u] |= 1u << v;
        nb[v] |= 1u << u;
    }
    // edges(S) = edges(S - low) + |N(low) & S|
    const std::uint32_t full = n == 32 ? ~0u : ((1u << n) - 1);
    std::vector<int> ecount(std::size_t{full} + 1, 0);
    Rational best(0);
    for (std::uint32_t s = 1; s <= full; ++s) {
        int low = std::countr_zero(s);
        std::uint32_t rest = s & (s - 1);
        ecount[s] = ecount[rest] + std::popcount(nb[low] & rest);
        Rational ad(2 * std::int64_t{ecount[s]}, std::popcount(s));
        if (ad > best)
            best = ad;
    }
    return best;
}

BlockDecomposition blocks(const Graph& g)
{
    const int n = g.order();
    BlockDecomposition r;
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<char> is_cut(n, 0);
    std::vector<Edge> stack;
    int timer = 0;

    struct Frame {
        int v, parent;
        std::size_t next;
        int children;
    };
    for (int root = 0; root < n; ++root) {
        if (disc[root] >= 0)
            continue;
        if (g.degree(root) == 0) {
            disc[root] = timer++;
            r.blocks.push_back(VertexSet::from(n, std::vector<int>{root}));
            continue;
        }
        std::vector<Frame> st{{root, -1, 0, 0}};
        disc[root] = low[root] = timer++;
        while (!st.empty()) {
            Frame& fr = st.back();
            const auto& nb = g.neighbors(fr.v);
            if (fr.next < nb.size()) {
                int w = nb[fr.next++];
                if (disc[w] < 0) {
                    stack.emplace_back(fr.v, w);
                    ++fr.children;
                    disc[w] = low[w] = timer++;
                    st.push_back({w, fr.v, 0, 0});
                } else if (w != fr.parent && disc[w] < disc[fr.v]) {
                    stack.emplace_back(fr.v, w);
                    low[fr.v] = std::min(low[fr.v], disc[w]);
                }
                continue;
            }
            int v = fr.v, parent = fr.parent;
            st.pop_back();
            if (parent < 0)
                continue;
            low[parent] = std::min(low[parent], low[v]);
            if (low[v] >= disc[parent]) {
                VertexSet b(n);
                while (true) {
                    auto e = stack.back();
                    stack.pop_back();
                    b.insert(e.first);
                    b.insert(e.second);
                    if (e == Edge{parent, v})
                        break;
                }
                r.blocks.push_back(b);
                if (st.back().parent >= 0 || st.back().children > 1)
                    is_cut[parent] = 1;
            }
        }
    }
    for (int v = 0; v < n; ++v)
        if (is_cut[v])
            r.cut_vertices.push_back(v);
    return r;
}

int girth(const Graph& g)
{
    const int n = g.order();
    int best = kInfiniteGirth;
    std::vector<int> dist(n), par(n);
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        par[s] = -1;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            if (2 * dist[u] + 1 >= best)
                break;
            for (int w : g.neighbors(u)) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    par[w] = u;
                    q.push(w);
                } else if (w != par[u]) {
                    best = std::min(best, dist[u] + dist[w] + 1);
                }
            }
        }
    }
    return best;
}

namespace {

// Bron-Kerbosch with pivoting, stopping once a clique of size k is seen.
bool clique_search(const Graph& g, int k, int size, std::vector<int> P, std::vector<int> X)
{
    if (size >= k)
        return true;
    if (size + static_cast<int>(P.size()) < k)
        return false;
    int pivot = -1, pivot_cnt = -1;
    for (const auto* S : {&P, &X}) {
        for (int u : *S) {
            int c = 0;
            for (int v : P)
                c += g.adjacent(u, v);
            if (c > pivot_cnt) {
                pivot_cnt = c;
                pivot = u;
            }
        }
    }
    std::vector<int> cand;
    for (int v : P)
        if (!g.adjacent(pivot, v))
            cand.push_back(v);
    for (int v : cand) {
        std::vector<int> P2, X2;
        for (int w : P)
            if (g.adjacent(v, w))
                P2.push_back(w);
        for (int w : X)
            if (g.adjacent(v, w))
                X2.push_back(w);
        if (clique_search(g, k, size + 1, std::move(P2), std::move(X2)))
            return true;
        P.erase(std::find(P.begin(), P.end(), v));
        X.push_back(v);
    }
    return false;
}

} // namespace

bool has_clique(const Graph& g, int k)
{
    if (k <= 0)
        return true;
    if (k == 1)
        return g.order() > 0;
    if (k == 2)
        return g.size() > 0;
    // vertices of degree < k-1 cannot be in a k-clique; peel them
    const int n = g.order();
    std::vector<int> deg(n);
    std::vector<char> alive(n, 1);
    std::vector<int> work;
    for (int v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        if (deg[v] < k - 1) {
            alive[v] = 0;
            work.push_back(v);
        }
    }
    while (!work.empty()) {
        int v = work.back();
        work.pop_back();
        for (int w : g.neighbors(v))
            if (alive[w] && --deg[w] < k - 1) {
                alive[w] = 0;
                work.push_back(w);
            }
    }
    std::vector<int> P;
    for (int v = 0; v < n; ++v)
        if (alive[v])
            P.push_back(v);
    return clique_search(g, k, 0, P, {});
}

int clique_number(const Graph& g)
{
    int k = 0;
    while (has_clique(g, k + 1))
        ++k;
    return k;
}

std::vector<int> bfs_distances(const Graph& g, Vertex source)
{
    std::vector<int> dist(g.order(), -1);
    std::queue<int> q;
    dist[source] = 0;
    q.push(source);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : g.neighbors(u))
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
    }
    return dist;
}

std::vector<VertexSet> connected_components(const Graph& g)
{
    std::vector<VertexSet> out;
    std::vector<char> seen(g.order(), 0);
    for (int s = 0; s < g.order(); ++s) {
        if (seen[s])
            continue;
        VertexSet c(g.order());
        std::vector<int> st{s};
        seen[s] = 1;
        while (!st.empty()) {
            int u = st.back();
            st.pop_back();
            c.insert(u);
            for (int w : g.neighbors(u))
                if (!seen[w]) {
                    seen[w] = 1;
                    st.push_back(w);
                }
        }
        out.push_back(std::move(c));
    }
    return out;
}

bool is_connected(const Graph& g)
{
    return connected_components(g).size() <= 1;
}

bool is_proper_coloring(const Graph& g, std::span<const int> colors)
{
    if (static_cast<int>(colors.size()) != g.order())
        return false;
    for (auto [u, v] : g.edges())
        if (colors[u] == colors[v])
            return false;
    return true;
}

std::optional<std::vector<int>> find_coloring(const Graph& g, int k, std::int64_t node_limit)
{
    const int n = g.order();
    std::vector<int> col(n, -1);
    if (n == 0)
        return col;
    if (k <= 0)
        return std::nullopt;
    if (k == 1)
        return g.size() == 0 ? std::optional(std::vector<int>(n, 0)) : std::nullopt;
    if (k == 2) {
        for (int s = 0; s < n; ++s) {
            if (col[s] >= 0)
                continue;
            col[s] = 0;
            std::queue<int> q;
            q.push(s);
            while (!q.empty()) {
                int u = q.front();
                q.pop();
                for (int w : g.neighbors(u)) {
                    if (col[w] < 0) {
                        col[w] = 1 - col[u];
                        q.push(w);
                    } else if (col[w] == col[u]) {
                        return std::nullopt;
                    }
                }
            }
        }
        return col;
    }
    // DSATUR-ordered exact backtracking
    std::vector<std::vector<int>> forbid(n, std::vector<int>(k, 0));
    std::int64_t nodes = 0;
    std::function<bool(int)> rec = [&](int colored) -> bool {
        if (colored == n)
            return true;
        if (++nodes > node_limit)
            throw ResourceError("coloring search exceeded node limit");
        int best = -1, best_sat = -1, best_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (col[v] >= 0)
                continue;
            int sat = 0;
            for (int c = 0; c < k; ++c)
                sat += forbid[v][c] > 0;
            if (sat > best_sat || (sat == best_sat && g.degree(v) > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = g.degree(v);
            }
        }
        if (best_sat == k)
            return false;
        // symmetry: never open more than one new color
        int max_used = -1;
        for (int v = 0; v < n; ++v)
            max_used = std::max(max_used, col[v]);
        for (int c = 0; c < k && c <= max_used + 1; ++c) {
            if (forbid[best][c])
                continue;
            col[best] = c;
            for (int w : g.neighbors(best))
                ++forbid[w][c];
            if (rec(colored + 1))
                return true;
            for (int w : g.neighbors(best))
                --forbid[w][c];
            col[best] = -1;
        }
        return false;
    };
    if (rec(0))
        return col;
    return std::nullopt;
}

std::vector<int> max_bipartite_matching(const std::vector<std::vector<int>>& adj, int right)
{
    const int left = static_cast<int>(adj.size());
    std::vector<int> ml(left, -1), mr(right, -1), dist(left);
    constexpr int inf = std::numeric_limits<int>::max();
    auto bfs = [&]() {
        std::queue<int> q;
        bool found = false;
        for (int a = 0; a < left; ++a) {
            if (ml[a] < 0) {
                dist[a] = 0;
                q.push(a);
            } else {
                dist[a] = inf;
            }
        }
        while (!q.empty()) {
            int a = q.front();
            q.pop();
            for (int b : adj[a]) {
                int a2 = mr[b];
                if (a2 < 0)
                    found = true;
                else if (dist[a2] == inf) {
                    dist[a2] = dist[a] + 1;
                    q.push(a2);
                }
            }
        }
        return found;
    };
    std::vector<std::size_t> it(left);
    std::function<bool(int)> dfs = [&](int a) -> bool {
        for (; it[a] < adj[a].size(); ++it[a]) {
            int b = adj[a][it[a]];
            int a2 = mr[b];
            if (a2 < 0 || (dist[a2] == dist[a] + 1 && dfs(a2))) {
                ml[a] = b;
                mr[b] = a;
                ++it[a];
                return true;
            }
        }
        dist[a] = inf;
        return false;
    };
    while (bfs()) {
        std::fill(it.begin(), it.end(), 0);
        for (int a = 0; a < left; ++a)
            if (ml[a] < 0)
                dfs(a);
    }
    return ml;
}

} // namespace wdeg
