#include "wdeg/schemes.hpp"
#include "wdeg/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

namespace wdeg {

using nlohmann::json;

namespace {

std::vector<int> positions(const Graph& g, const RemovalScheme& s)
{
    std::vector<int> pos(g.order(), -1);
    for (std::size_t i = 0; i < s.order.size(); ++i)
        pos[s.order[i]] = static_cast<int>(i);
    return pos;
}

} // namespace

void check_scheme_structure(const Graph& g, const RemovalScheme& s)
{
    const int n = g.order();
    if (static_cast<int>(s.order.size()) != n || static_cast<int>(s.save.size()) != n)
        throw StructuralError("scheme must list every vertex exactly once");
    std::vector<int> pos(n, -1);
    for (std::size_t i = 0; i < s.order.size(); ++i) {
        Vertex v = s.order[i];
        if (v < 0 || v >= n || pos[v] >= 0)
            throw StructuralError("removal order is not a permutation of the vertices");
        pos[v] = static_cast<int>(i);
    }
    for (Vertex u = 0; u < n; ++u) {
        Vertex w = s.save[u];
        if (w == -1)
            continue;
        if (w < 0 || w >= n || !g.adjacent(u, w))
            throw StructuralError("vertex " + std::to_string(u) + " saves a non-neighbor");
        if (pos[w] < pos[u])
            throw StructuralError("vertex " + std::to_string(u) + " saves " + std::to_string(w) +
                                  ", which is removed earlier");
    }
}

LegalityReport scheme_is_legal(const Graph& g, const RemovalScheme& s)
{
    check_scheme_structure(g, s);
    auto pos = positions(g, s);
    for (Vertex u : s.order) {
        Vertex w = s.save[u];
        if (w == -1)
            continue;
        int lhs = 0, rhs = 0;
        for (Vertex v : g.neighbors(u))
            lhs += pos[v] < pos[u] && s.save[v] != u;
        for (Vertex v : g.neighbors(w))
            rhs += pos[v] < pos[u] && s.save[v] != w;
        if (lhs >= rhs)
            return {false, u, lhs, rhs};
    }
    return {};
}

GapReport scheme_gap(const Graph& g, const RemovalScheme& s)
{
    check_scheme_structure(g, s);
    auto pos = positions(g, s);
    const int n = g.order();
    GapReport r;
    r.gap.assign(n, 0);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v : g.neighbors(u))
            r.gap[u] += pos[v] > pos[u];
        if (s.save[u] != -1)
            ++r.gap[s.save[u]];
    }
    r.min_gap = n ? *std::min_element(r.gap.begin(), r.gap.end()) : 0;
    return r;
}

std::string format_gap_report(const Graph& g, const RemovalScheme& s, const GapReport& r)
{
    auto pos = positions(g, s);
    std::vector<int> saved(g.order(), 0);
    for (Vertex u = 0; u < g.order(); ++u)
        if (s.save[u] != -1)
            ++saved[s.save[u]];
    std::ostringstream os;
    os << "vertex later saved gap\n";
    for (Vertex u = 0; u < g.order(); ++u)
        os << u << ' ' << r.gap[u] - saved[u] << ' ' << saved[u] << ' ' << r.gap[u] << '\n';
    os << "min " << r.min_gap << '\n';
    return os.str();
}

Certificate scheme_to_certificate(const Graph& g, const RemovalScheme& s, int d)
{
    auto legal = scheme_is_legal(g, s);
    if (!legal.ok)
        throw PreconditionError("scheme is not legal at vertex " + std::to_string(legal.violator));
    if (g.order() > 0 && d < g.max_degree())
        throw PreconditionError("d is below the maximum degree");
    auto gap = scheme_gap(g, s);
    Certificate cert{constant_f(g.order(), d - gap.min_gap), {}, {}};
    for (Vertex u : s.order)
        cert.ops.push_back(s.save[u] == -1 ? Operation::remove(u) : Operation::save(u, s.save[u]));
    auto check = verify_certificate(g, cert);
    WDEG_ENSURE(check.ok, "legal scheme produced an invalid certificate: " + check.reason);
    return cert;
}

std::string dump_scheme(const RemovalScheme& s)
{
    json j;
    j["order"] = s.order;
    json saves = json::array();
    for (std::size_t u = 0; u < s.save.size(); ++u)
        if (s.save[u] != -1)
            saves.push_back({static_cast<int>(u), s.save[u]});
    j["save"] = saves;
    return j.dump(2) + "\n";
}

RemovalScheme parse_scheme(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("scheme is not valid JSON: ") + e.what(), 0);
    }
    try {
        RemovalScheme s;
        s.order = j.at("order").get<std::vector<Vertex>>();
        const int n = static_cast<int>(s.order.size());
        s.save.assign(n, -1);
        for (const auto& p : j.at("save")) {
            auto pr = p.get<std::vector<int>>();
            if (pr.size() != 2 || pr[0] < 0 || pr[0] >= n)
                throw ParseError("save entries must be [u, w] pairs with u in range", 0);
            if (s.save[pr[0]] != -1)
                throw ParseError("vertex " + std::to_string(pr[0]) + " saves twice", 0);
            s.save[pr[0]] = pr[1];
        }
        return s;
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed scheme: ") + e.what(), 0);
    }
}

std::optional<std::vector<Vertex>> saturating_save(const Graph& g, const VertexSet& a,
                                                   const VertexSet& b, int t)
{
    const int n = g.order();
    std::vector<Vertex> out(n, -1);
    if (t <= 0)
        return out;
    auto bm = b.members();
    std::vector<std::vector<int>> adj;
    std::vector<Vertex> clone_of;
    for (Vertex w : bm) {
        std::vector<int> nb;
        for (Vertex u : g.neighbors(w))
            if (a.contains(u))
                nb.push_back(u);
        for (int j = 0; j < t; ++j) {
            adj.push_back(nb);
            clone_of.push_back(w);
        }
    }
    auto match = max_bipartite_matching(adj, n);
    for (std::size_t c = 0; c < match.size(); ++c) {
        if (match[c] < 0)
            return std::nullopt;
        out[match[c]] = clone_of[c];
    }
    return out;
}

std::vector<Vertex> hall_save(const Graph& g, const VertexSet& a, const VertexSet& b, int t)
{
    if (t < 0)
        throw PreconditionError("t must be non-negative");
    if (!(a & b).empty())
        throw PreconditionError("A and B must be disjoint");
    int d1 = 0, d2 = std::numeric_limits<int>::max();
    for (Vertex u : a.members())
        d1 = std::max(d1, g.degree_in(u, b));
    for (Vertex w : b.members())
        d2 = std::min(d2, g.degree_in(w, a));
    if (!b.empty() && static_cast<long long>(t) * d1 > d2)
        throw PreconditionError("t * d1 = " + std::to_string(static_cast<long long>(t) * d1) +
                                " exceeds d2 = " + std::to_string(d2));
    auto s = saturating_save(g, a, b, t);
    WDEG_ENSURE(s.has_value(), "matching failed to saturate the cloned side");
    return *s;
}

double regularity_threshold(int d, double p, double eps)
{
    if (d <= 1)
        return 0;
    return 9 * std::log(static_cast<double>(d)) / (eps * eps * p);
}

namespace {

bool in_window(int deg_a, int deg_sub, double p, double eps, double threshold)
{
    if (deg_a < threshold)
        return true;
    return (1 - eps) * p * deg_a <= deg_sub && deg_sub <= (1 + eps) * p * deg_a;
}

void check_probabilities(double p, double eps)
{
    if (!(p > 0 && p <= 1))
        throw PreconditionError("p must lie in (0, 1]");
    if (!(eps > 0 && eps <= 1))
        throw PreconditionError("eps must lie in (0, 1]");
}

} // namespace

bool is_regular_subset(const Graph& g, const VertexSet& a, const VertexSet& sub, double p,
                       double eps, double threshold, Vertex* violator)
{
    if (!(sub - a).empty()) {
        if (violator)
            *violator = (sub - a).members().front();
        return false;
    }
    for (Vertex u = 0; u < g.order(); ++u) {
        if (!in_window(g.degree_in(u, a), g.degree_in(u, sub), p, eps, threshold)) {
            if (violator)
                *violator = u;
            return false;
        }
    }
    return true;
}

VertexSet regular_subset(const Graph& g, const VertexSet& a, double p, double eps,
                         const RegularSubsetOptions& opt)
{
    check_probabilities(p, eps);
    const int n = g.order();
    const double threshold = opt.threshold ? *opt.threshold
                                           : regularity_threshold(n ? g.max_degree() : 0, p, eps);
    std::vector<int> deg_a(n);
    bool vacuous = true;
    for (Vertex u = 0; u < n; ++u) {
        deg_a[u] = g.degree_in(u, a);
        vacuous = vacuous && deg_a[u] < threshold;
    }
    if (vacuous)
        return a;

    Rng rng(opt.seed);
    std::bernoulli_distribution coin(p);
    VertexSet sub(n);
    for (Vertex v : a.members())
        if (coin(rng))
            sub.insert(v);
    std::vector<int> deg_sub(n);
    std::set<Vertex> bad;
    for (Vertex u = 0; u < n; ++u) {
        deg_sub[u] = g.degree_in(u, sub);
        if (!in_window(deg_a[u], deg_sub[u], p, eps, threshold))
            bad.insert(u);
    }
    auto refresh = [&](Vertex y) {
        if (in_window(deg_a[y], deg_sub[y], p, eps, threshold))
            bad.erase(y);
        else
            bad.insert(y);
    };
    std::int64_t rounds = 0;
    while (!bad.empty()) {
        if (++rounds > opt.cap)
            throw ResourceError("regular subset: resampling cap of " + std::to_string(opt.cap) +
                                " exceeded; retry with another seed");
        Vertex u = *bad.begin();
        for (Vertex x : g.neighbors(u)) {
            if (!a.contains(x))
                continue;
            bool was = sub.contains(x), now = coin(rng);
            if (was == now)
                continue;
            if (now)
                sub.insert(x);
            else
                sub.erase(x);
            for (Vertex y : g.neighbors(x)) {
                deg_sub[y] += now ? 1 : -1;
                refresh(y);
            }
        }
    }
    WDEG_ENSURE(is_regular_subset(g, a, sub, p, eps, threshold), "resampled subset is not regular");
    return sub;
}

std::vector<double> default_layer_densities(int k)
{
    if (k < 1)
        throw PreconditionError("k must be positive");
    std::vector<double> n_seq(k);
    double total = 0;
    for (int i = 0; i < k; ++i) {
        n_seq[i] = i == 0 ? 1 : 20.0 * k * total;
        total += n_seq[i];
    }
    std::vector<double> p(k);
    for (int i = 0; i < k; ++i)
        p[i] = n_seq[i] / (6.0 * k * n_seq[k - 1]);
    return p;
}

double default_chrom_c(int k)
{
    return default_layer_densities(k)[0] / (32.0 * k) / 2;
}

PipelineConfig parse_pipeline_config(const std::string& text)
{
    PipelineConfig cfg;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        auto eq = line.find('=');
        auto trim = [](std::string s) {
            auto b = s.find_first_not_of(" \t\r");
            auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        if (trim(line).empty())
            continue;
        if (eq == std::string::npos)
            throw ParseError("expected key=value", lineno);
        std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
        try {
            if (key == "k")
                cfg.k = std::stoi(val);
            else if (key == "c")
                cfg.c = std::stod(val);
            else if (key == "eps")
                cfg.eps = std::stod(val);
            else if (key == "threshold")
                cfg.threshold = std::stod(val);
            else if (key == "seed")
                cfg.seed = std::stoull(val);
            else if (key == "cap")
                cfg.cap = std::stoll(val);
            else if (key == "p") {
                cfg.p.clear();
                std::istringstream ps(val);
                std::string item;
                while (std::getline(ps, item, ','))
                    cfg.p.push_back(std::stod(item));
            } else
                throw ParseError("unknown key '" + key + "'", lineno);
        } catch (const std::logic_error&) {
            throw ParseError("bad value for '" + key + "'", lineno);
        }
    }
    return cfg;
}

int alpha_power(const std::vector<double>& x, double alpha)
{
    int count = 0;
    for (double v : x) {
        if (!(v >= 0 && v <= 1))
            throw PreconditionError("vector entries must lie in [0, 1]");
        count += v < alpha;
    }
    return count;
}

double powerful_estimate(const std::vector<double>& x, int d, int trials, std::uint64_t seed)
{
    if (trials <= 0 || d < 0)
        throw PreconditionError("trials must be positive and d non-negative");
    alpha_power(x, 0);
    Rng rng(seed);
    std::uniform_real_distribution<double> unit(0, 1);
    int hits = 0;
    for (int t = 0; t < trials; ++t) {
        double alpha = unit(rng);
        std::binomial_distribution<int> below(d, alpha);
        hits += below(rng) < alpha_power(x, alpha);
    }
    return static_cast<double>(hits) / trials;
}

} // namespace wdeg
