#include "wdeg/painting.hpp"
#include "wdeg/errors.hpp"
#include "wdeg/weak_degeneracy.hpp"

#include <json.hpp>

#include <algorithm>
#include <numeric>

namespace wdeg {

using nlohmann::json;

GameState initial_game_state(const Graph& g, const WeightFn& budget)
{
    if (static_cast<int>(budget.size()) != g.order())
        throw StructuralError("budget size does not match the graph");
    return {VertexSet::full(g.order()), std::vector<int>(g.order(), 0), budget, 0};
}

namespace {

void check_move(const Graph& g, const VertexSet& present, const ListerMove& move)
{
    validate_cover(g, move);
    for (int v = 0; v < g.order(); ++v)
        if (!present.contains(v) && !move.lists[v].empty())
            throw StructuralError("lister offered a list to removed vertex " + std::to_string(v));
    for (const auto& [e, pairs] : move.matchings)
        if (!pairs.empty() && (!present.contains(e.first) || !present.contains(e.second)))
            throw StructuralError("lister matched colors on an edge of a removed vertex");
}

// Empty string when the response is valid for the move.
std::string response_problem(const Graph& g, const VertexSet& present, const ListerMove& move,
                             const PainterResponse& r)
{
    if (r.colored.size() != r.colors.size())
        return "response lengths differ";
    std::vector<int> phi(g.order(), -1);
    for (std::size_t i = 0; i < r.colored.size(); ++i) {
        int u = r.colored[i];
        if (u < 0 || u >= g.order() || !present.contains(u))
            return "colored vertex " + std::to_string(u) + " is not in the current graph";
        if (phi[u] >= 0)
            return "vertex " + std::to_string(u) + " colored twice";
        const auto& l = move.lists[u];
        if (!std::binary_search(l.begin(), l.end(), r.colors[i]))
            return "color of vertex " + std::to_string(u) + " is not in its list";
        phi[u] = r.colors[i];
    }
    for (const auto& [e, pairs] : move.matchings) {
        if (phi[e.first] < 0 || phi[e.second] < 0)
            continue;
        for (auto [a, b] : pairs)
            if (phi[e.first] == a && phi[e.second] == b)
                return "edge (" + std::to_string(e.first) + ", " + std::to_string(e.second) +
                       ") joins corresponding colors";
    }
    return {};
}

bool lost(const GameState& st)
{
    for (int v : st.present.members())
        if (st.used[v] >= st.budget[v])
            return true;
    return false;
}

Cover restrict_cover(const Cover& c, const InducedSubgraph& sub)
{
    Cover r;
    for (int p : sub.to_parent)
        r.lists.push_back(c.lists[p]);
    for (const auto& [e, pairs] : c.matchings) {
        int a = sub.from_parent[e.first], b = sub.from_parent[e.second];
        if (a < 0 || b < 0 || pairs.empty())
            continue;
        r.matchings[{a, b}] = pairs;
    }
    return r;
}

} // namespace

PainterStep painter_strategy(const Graph& g, const GameState& state, const Certificate& cert,
                             const ListerMove& move)
{
    check_move(g, state.present, move);
    auto cur = induced_subgraph(g, state.present);
    const int k = cur.graph.order();
    if (cert.order() != k)
        throw PreconditionError("certificate does not match the current graph");
    WeightFn f1(k), f2(k);
    for (int i = 0; i < k; ++i) {
        int p = cur.to_parent[i];
        int fi = state.budget[p] - 1 - state.used[p];
        if (cert.initial_f[i] != fi)
            throw PreconditionError("certificate weights differ from budget - 1 - used");
        int len = static_cast<int>(move.lists[p].size());
        f1[i] = len - 1;
        f2[i] = fi - len;
    }
    auto split = partition(cur.graph, cert, f1, f2);

    // vertices of the first part are colored now, the rest carry over
    auto local = restrict_cover(restrict_cover(move, cur), split.part1);
    auto phi = color_from_certificate(split.part1.graph, local, split.cert1);
    PainterStep step;
    for (int i = 0; i < split.part1.graph.order(); ++i) {
        step.response.colored.push_back(cur.to_parent[split.part1.to_parent[i]]);
        step.response.colors.push_back(phi[i]);
    }
    step.next = split.cert2;
    auto problem = response_problem(g, state.present, move, step.response);
    WDEG_ENSURE(problem.empty(), "painter response invalid: " + problem);
    return step;
}

namespace {

class RandomLister : public Lister
{
public:
    RandomLister(std::uint64_t seed, double intensity) : rng_(seed), intensity_(intensity) {}
    std::string name() const override { return "random"; }

    ListerMove next_move(const Graph& g, const GameState& st) override
    {
        std::bernoulli_distribution offer(intensity_);
        std::vector<int> sizes(g.order(), 0);
        int palette = 1;
        auto present = st.present.members();
        auto draw = [&](int v) {
            int rem = std::max(1, st.budget[v] - st.used[v]);
            sizes[v] = std::uniform_int_distribution<int>(1, rem)(rng_);
            palette = std::max(palette, sizes[v] + 1);
        };
        bool any = false;
        for (int v : present)
            if (offer(rng_)) {
                draw(v);
                any = true;
            }
        // an empty move changes nothing, so every round lists at least one vertex
        if (!any && !present.empty())
            draw(present[std::uniform_int_distribution<std::size_t>(0, present.size() - 1)(rng_)]);
        double density = std::uniform_real_distribution<double>(0.5, 1.0)(rng_);
        auto c = random_cover(g, sizes, palette, density, rng_);
        for (auto& [e, pairs] : c.matchings)
            if (!st.present.contains(e.first) || !st.present.contains(e.second))
                pairs.clear();
        return c;
    }

private:
    Rng rng_;
    double intensity_;
};

class FullAssignmentLister : public Lister
{
public:
    FullAssignmentLister(int k, std::uint64_t seed) : k_(k), rng_(seed) {}
    explicit FullAssignmentLister(Cover c) : fixed_(std::move(c)) {}
    std::string name() const override { return "full-assignment"; }

    ListerMove next_move(const Graph& g, const GameState& st) override
    {
        Cover c;
        c.lists.assign(g.order(), {});
        if (st.round > 0)
            return c;
        if (fixed_)
            return *fixed_;
        for (int v : st.present.members())
            for (int x = 0; x < k_; ++x)
                c.lists[v].push_back(x);
        std::vector<int> perm(k_);
        for (auto [u, v] : g.edges()) {
            if (!st.present.contains(u) || !st.present.contains(v))
                continue;
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng_);
            auto& m = c.matchings[{u, v}];
            for (int x = 0; x < k_; ++x)
                m.emplace_back(x, perm[x]);
        }
        return c;
    }

private:
    int k_ = 0;
    Rng rng_{0};
    std::optional<Cover> fixed_;
};

class SingletonStreamLister : public Lister
{
public:
    explicit SingletonStreamLister(std::vector<Vertex> order) : order_(std::move(order)) {}
    std::string name() const override { return "singleton-stream"; }

    ListerMove next_move(const Graph& g, const GameState& st) override
    {
        Cover c;
        c.lists.assign(g.order(), {});
        std::vector<int> rank(g.order(), 0);
        for (std::size_t r = 0; r < order_.size(); ++r)
            if (order_[r] >= 0 && order_[r] < g.order())
                rank[order_[r]] = static_cast<int>(r);
        for (int v : st.present.members())
            if ((rank[v] + st.round) % 2 == 0)
                c.lists[v] = {0};
        for (auto [u, v] : g.edges())
            if (!c.lists[u].empty() && !c.lists[v].empty())
                c.matchings[{u, v}] = {{0, 0}};
        return c;
    }

private:
    std::vector<Vertex> order_;
};

} // namespace

std::unique_ptr<Lister> random_lister(std::uint64_t seed, double intensity)
{
    return std::make_unique<RandomLister>(seed, intensity);
}

std::unique_ptr<Lister> full_assignment_lister(int k, std::uint64_t seed)
{
    return std::make_unique<FullAssignmentLister>(k, seed);
}

std::unique_ptr<Lister> full_assignment_lister(Cover cover)
{
    return std::make_unique<FullAssignmentLister>(std::move(cover));
}

std::unique_ptr<Lister> singleton_stream_lister(std::vector<Vertex> order)
{
    return std::make_unique<SingletonStreamLister>(std::move(order));
}

Transcript play_game(const Graph& g, const WeightFn& budget, const Certificate& cert,
                     Lister& lister, const GameOptions& opt)
{
    WeightFn f(budget.size());
    for (std::size_t i = 0; i < budget.size(); ++i)
        f[i] = budget[i] - 1;
    if (cert.initial_f != f)
        throw PreconditionError("certificate must be for budget - 1");
    auto rep = verify_certificate(g, cert);
    if (!rep.ok)
        throw PreconditionError("certificate does not verify: " + rep.reason);

    long long guard = opt.max_rounds;
    if (guard <= 0) {
        guard = 1;
        for (int b : budget)
            guard += b;
    }
    Transcript t;
    t.budget = budget;
    auto st = initial_game_state(g, budget);
    Certificate current = cert;
    while (true) {
        if (lost(st)) {
            t.winner = Winner::Lister;
            WDEG_ENSURE(false, "Painter lost although a valid certificate was supplied");
        }
        if (st.present.empty())
            break;
        if (st.round >= guard) {
            t.stopped_by_guard = true;
            break;
        }
        auto move = lister.next_move(g, st);
        check_move(g, st.present, move);
        auto step = painter_strategy(g, st, current, move);
        for (int v : st.present.members())
            st.used[v] += static_cast<int>(move.lists[v].size());
        for (int u : step.response.colored)
            st.present.erase(u);
        ++st.round;
        current = std::move(step.next);
        t.rounds.push_back({std::move(move), std::move(step.response)});
    }
    t.winner = Winner::Painter;
    return t;
}

TranscriptCheck verify_transcript(const Graph& g, const Transcript& t)
{
    GameState st;
    try {
        st = initial_game_state(g, t.budget);
    } catch (const Error& e) {
        return {false, -1, e.what()};
    }
    for (std::size_t i = 0; i < t.rounds.size(); ++i) {
        const int r = static_cast<int>(i);
        if (lost(st))
            return {false, r, "the game was already lost before this round"};
        if (st.present.empty())
            return {false, r, "round played on an empty graph"};
        const auto& rec = t.rounds[i];
        try {
            check_move(g, st.present, rec.move);
        } catch (const Error& e) {
            return {false, r, std::string("malformed lister move: ") + e.what()};
        }
        auto problem = response_problem(g, st.present, rec.move, rec.response);
        if (!problem.empty())
            return {false, r, problem};
        for (int v : st.present.members())
            st.used[v] += static_cast<int>(rec.move.lists[v].size());
        for (int u : rec.response.colored)
            st.present.erase(u);
        ++st.round;
    }
    Winner expected = lost(st) ? Winner::Lister : Winner::Painter;
    if (expected != t.winner)
        return {false, static_cast<int>(t.rounds.size()), "recorded winner contradicts the loss rule"};
    if (expected == Winner::Painter && !st.present.empty() && !t.stopped_by_guard)
        return {false, static_cast<int>(t.rounds.size()), "game ended with uncolored vertices"};
    return {};
}

std::string dump_transcript(const Transcript& t)
{
    json j;
    j["budget"] = t.budget;
    j["winner"] = t.winner == Winner::Painter ? "painter" : "lister";
    j["stopped_by_guard"] = t.stopped_by_guard;
    json rounds = json::array();
    for (const auto& rec : t.rounds) {
        json r;
        r["move"] = json::parse(dump_cover(rec.move));
        json col = json::array();
        for (std::size_t i = 0; i < rec.response.colored.size(); ++i)
            col.push_back({rec.response.colored[i], rec.response.colors[i]});
        r["colored"] = col;
        rounds.push_back(r);
    }
    j["rounds"] = rounds;
    return j.dump(2) + "\n";
}

Transcript parse_transcript(const std::string& text)
{
    try {
        auto j = json::parse(text);
        Transcript t;
        t.budget = j.at("budget").get<std::vector<int>>();
        t.winner = j.at("winner").get<std::string>() == "lister" ? Winner::Lister : Winner::Painter;
        t.stopped_by_guard = j.value("stopped_by_guard", false);
        for (const auto& r : j.at("rounds")) {
            RoundRecord rec;
            rec.move = parse_cover(r.at("move").dump());
            for (const auto& p : r.at("colored")) {
                rec.response.colored.push_back(p.at(0).get<int>());
                rec.response.colors.push_back(p.at(1).get<int>());
            }
            t.rounds.push_back(std::move(rec));
        }
        return t;
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed transcript: ") + e.what(), 0);
    }
}

} // namespace wdeg
