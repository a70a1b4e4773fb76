#include "wdeg/catalog.hpp"
#include "wdeg/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <unordered_set>

namespace wdeg {

namespace {

using Cells = std::vector<std::vector<int>>;

// Splits cells by neighbor counts into each cell, in a labelling-independent
// order, until stable.
void refine(const std::vector<std::uint32_t>& adj, Cells& cells)
{
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t t = 0; t < cells.size() && !changed; ++t) {
            std::uint32_t target = 0;
            for (int v : cells[t])
                target |= 1u << v;
            for (std::size_t c = 0; c < cells.size(); ++c) {
                if (cells[c].size() < 2)
                    continue;
                std::map<int, std::vector<int>> by_count;
                for (int v : cells[c])
                    by_count[__builtin_popcount(adj[v] & target)].push_back(v);
                if (by_count.size() < 2)
                    continue;
                Cells split;
                for (auto& [cnt, vs] : by_count)
                    split.push_back(std::move(vs));
                cells.erase(cells.begin() + static_cast<long>(c));
                cells.insert(cells.begin() + static_cast<long>(c), split.begin(), split.end());
                changed = true;
                break;
            }
        }
    }
}

std::uint64_t form_of(const std::vector<std::uint32_t>& adj, const Cells& cells)
{
    std::vector<int> perm;
    for (const auto& c : cells)
        perm.push_back(c[0]);
    std::uint64_t form = 0;
    int bit = 0;
    const int n = static_cast<int>(perm.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if (adj[perm[i]] >> perm[j] & 1)
                form |= std::uint64_t{1} << bit;
    return form;
}

void search(const std::vector<std::uint32_t>& adj, Cells cells, std::uint64_t& best, bool& found)
{
    refine(adj, cells);
    auto it = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
    if (it == cells.end()) {
        auto f = form_of(adj, cells);
        if (!found || f < best)
            best = f;
        found = true;
        return;
    }
    const std::size_t at = static_cast<std::size_t>(it - cells.begin());
    for (int v : cells[at]) {
        Cells next = cells;
        auto& cell = next[at];
        cell.erase(std::find(cell.begin(), cell.end(), v));
        next.insert(next.begin() + static_cast<long>(at), std::vector<int>{v});
        search(adj, std::move(next), best, found);
    }
}

std::vector<std::uint32_t> bit_adjacency(const Graph& g)
{
    std::vector<std::uint32_t> adj(g.order(), 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
    }
    return adj;
}

std::vector<Graph> generate(int n, const std::vector<Graph>& smaller)
{
    std::unordered_set<std::uint64_t> seen;
    for (const auto& h : smaller) {
        const int m = n - 1;
        auto base = h.edges();
        for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
            auto es = base;
            for (int v = 0; v < m; ++v)
                if (mask >> v & 1)
                    es.emplace_back(v, m);
            seen.insert(canonical_form(Graph(n, es)));
        }
    }
    std::vector<std::uint64_t> forms(seen.begin(), seen.end());
    std::sort(forms.begin(), forms.end());
    std::vector<Graph> out;
    for (auto f : forms)
        out.push_back(graph_from_form(n, f));
    return out;
}

std::filesystem::path cache_path(int n)
{
    const char* dir = std::getenv("WDEG_CATALOG_DIR");
    if (!dir || !*dir)
        return {};
    return std::filesystem::path(dir) / ("graphs" + std::to_string(n) + ".txt");
}

} // namespace

std::uint64_t canonical_form(const Graph& g)
{
    const int n = g.order();
    if (n > 11)
        throw PreconditionError("canonical forms are limited to 11 vertices");
    if (n <= 1)
        return 0;
    auto adj = bit_adjacency(g);
    Cells cells(1);
    for (int v = 0; v < n; ++v)
        cells[0].push_back(v);
    std::uint64_t best = 0;
    bool found = false;
    search(adj, cells, best, found);
    return best;
}

Graph graph_from_form(int n, std::uint64_t form)
{
    std::vector<Edge> es;
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if (form >> bit & 1)
                es.emplace_back(i, j);
    return Graph(n, es);
}

std::string dump_catalog(const std::vector<Graph>& graphs)
{
    std::ostringstream os;
    for (const auto& g : graphs) {
        os << g.order();
        for (auto [u, v] : g.edges())
            os << ' ' << u << ' ' << v;
        os << '\n';
    }
    return os.str();
}

std::vector<Graph> parse_catalog(const std::string& text)
{
    std::vector<Graph> out;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        int n;
        if (!(ls >> n))
            continue;
        std::vector<Edge> es;
        int u, v;
        while (ls >> u) {
            if (!(ls >> v))
                throw ParseError("odd number of endpoints", lineno);
            es.emplace_back(u, v);
        }
        if (!ls.eof())
            throw ParseError("malformed catalog line", lineno);
        try {
            out.emplace_back(n, es);
        } catch (const ValidationError& e) {
            throw ParseError(e.what(), lineno);
        }
    }
    return out;
}

const std::vector<Graph>& catalog(int n)
{
    static std::mutex mu;
    static std::map<int, std::vector<Graph>> memo;
    if (n < 0 || n > kMaxCatalogOrder)
        throw ResourceError("catalog order must lie in 0.." + std::to_string(kMaxCatalogOrder));
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = memo.find(n);
        if (it != memo.end())
            return it->second;
    }
    std::vector<Graph> graphs;
    auto path = cache_path(n);
    bool loaded = false;
    if (!path.empty() && std::filesystem::exists(path)) {
        std::ifstream in(path);
        std::stringstream buf;
        buf << in.rdbuf();
        try {
            graphs = parse_catalog(buf.str());
            loaded = std::all_of(graphs.begin(), graphs.end(),
                                 [n](const Graph& g) { return g.order() == n; });
        } catch (const ParseError&) {
            loaded = false;
        }
    }
    if (!loaded) {
        if (n == 0)
            graphs = {Graph(0)};
        else if (n == 1)
            graphs = {Graph(1)};
        else
            graphs = generate(n, catalog(n - 1));
        if (!path.empty()) {
            std::error_code ec;
            std::filesystem::create_directories(path.parent_path(), ec);
            std::ofstream out(path);
            if (out)
                out << dump_catalog(graphs);
        }
    }
    std::lock_guard<std::mutex> lock(mu);
    return memo.emplace(n, std::move(graphs)).first->second;
}

std::vector<Graph> connected_catalog(int n)
{
    std::vector<Graph> out;
    for (const auto& g : catalog(n))
        if (n > 0 && is_connected(g))
            out.push_back(g);
    return out;
}

} // namespace wdeg
