#include "oracles.hpp"

#include "wdeg/errors.hpp"
#include "wdeg/generators.hpp"
#include "wdeg/painting.hpp"
#include "wdeg/solver.hpp"

#include <doctest.h>

using namespace wdeg;

namespace {

Cover empty_move(int n)
{
    Cover c;
    c.lists.assign(n, {});
    return c;
}

} // namespace

TEST_CASE("Painter colors everything against full lists")
{
    auto c4 = cycle_graph(4);
    auto cert = is_weakly_f_degenerate(c4, constant_f(4, 2));
    REQUIRE(cert);
    auto state = initial_game_state(c4, constant_f(4, 3));
    auto move = list_cover(c4, std::vector<std::vector<int>>(4, {0, 1, 2}));
    auto step = painter_strategy(c4, state, *cert, move);
    CHECK(step.response.colored == std::vector<Vertex>{0, 1, 2, 3});
    std::vector<int> phi(step.response.colors);
    CHECK(is_proper(c4, move, phi));
    CHECK(step.next.order() == 0);
}

TEST_CASE("empty lists get an empty response")
{
    auto c4 = cycle_graph(4);
    auto cert = is_weakly_f_degenerate(c4, constant_f(4, 2));
    REQUIRE(cert);
    auto state = initial_game_state(c4, constant_f(4, 3));
    auto step = painter_strategy(c4, state, *cert, empty_move(4));
    CHECK(step.response.colored.empty());
    CHECK(step.next == *cert);
}

TEST_CASE("singleton lists on a matched edge")
{
    auto c4 = cycle_graph(4);
    auto cert = is_weakly_f_degenerate(c4, constant_f(4, 2));
    REQUIRE(cert);
    auto state = initial_game_state(c4, constant_f(4, 3));
    auto move = empty_move(4);
    move.lists[0] = {0};
    move.lists[1] = {0};
    move.add_pair(0, 0, 1, 0);
    auto step = painter_strategy(c4, state, *cert, move);
    CHECK(step.response.colored.size() == 1);
    auto rest = VertexSet::full(4);
    for (Vertex v : step.response.colored)
        rest.erase(v);
    auto sub = induced_subgraph(c4, rest);
    CHECK(verify_certificate(sub.graph, step.next).ok);
    for (int i = 0; i < sub.graph.order(); ++i) {
        const Vertex p = sub.to_parent[i];
        CHECK(step.next.initial_f[i] == 2 - static_cast<int>(move.lists[p].size()));
    }
}

TEST_CASE("Painter never loses with a certificate")
{
    Rng rng(5);
    for (int it = 0; it < 30; ++it) {
        auto g = gnp(7, 0.5, rng);
        auto r = weak_degeneracy_exact(g);
        WeightFn budget(7, r.value + 1);
        for (int game = 0; game < 30; ++game) {
            auto lister = random_lister(rng(), 0.6);
            auto t = play_game(g, budget, r.certificate, *lister);
            CHECK(t.winner == Winner::Painter);
            CHECK(!t.stopped_by_guard);
            CHECK(verify_transcript(g, t).ok);
        }
    }
    auto t = play_game(Graph(0), {}, Certificate{}, *random_lister(1, 0.5));
    CHECK(t.winner == Winner::Painter);
}

TEST_CASE("full assignment game is DP-coloring")
{
    auto c4 = cycle_graph(4);
    auto cert = is_weakly_f_degenerate(c4, constant_f(4, 2));
    REQUIRE(cert);
    CHECK(brute_force_dp_colorable(c4, 3).colorable);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        auto lister = full_assignment_lister(3, seed);
        auto t = play_game(c4, constant_f(4, 3), *cert, *lister);
        CHECK(t.winner == Winner::Painter);
        REQUIRE(!t.rounds.empty());
        // the single real round colors every vertex properly for the cover
        const auto& first = t.rounds.front();
        CHECK(first.response.colored.size() == 4);
        CHECK(is_proper(c4, first.move, first.response.colors));
    }
}

TEST_CASE("lister adversaries")
{
    auto g = cycle_graph(5);
    auto state = initial_game_state(g, constant_f(5, 3));

    auto full = full_assignment_lister(3, 4);
    auto m0 = full->next_move(g, state);
    for (const auto& l : m0.lists)
        CHECK(l.size() == 3);
    for (const auto& [e, pairs] : m0.matchings)
        CHECK(pairs.size() == 3);
    state.round = 1;
    auto m1 = full->next_move(g, state);
    for (const auto& l : m1.lists)
        CHECK(l.empty());

    state.round = 0;
    auto single = singleton_stream_lister({0, 1, 2, 3, 4});
    for (int r = 0; r < 5; ++r) {
        state.round = r;
        auto m = single->next_move(g, state);
        for (const auto& l : m.lists)
            CHECK(l.size() <= 1);
    }

    // zero intensity still lists exactly one vertex, so the game makes progress
    auto idle = random_lister(9, 0.0);
    for (int r = 0; r < 5; ++r) {
        state.round = r;
        auto m = idle->next_move(g, state);
        int listed = 0;
        for (const auto& l : m.lists)
            listed += !l.empty();
        CHECK(listed == 1);
    }

    state.round = 0;
    auto a = random_lister(42, 0.5);
    auto b = random_lister(42, 0.5);
    for (int r = 0; r < 3; ++r) {
        state.round = r;
        CHECK(a->next_move(g, state) == b->next_move(g, state));
    }
}

TEST_CASE("transcripts replay and reject tampering")
{
    auto g = petersen_graph();
    auto r = weak_degeneracy_exact(g);
    auto t = play_game(g, WeightFn(10, r.value + 1), r.certificate, *random_lister(3, 0.7));
    auto text = dump_transcript(t);
    auto back = parse_transcript(text);
    CHECK(dump_transcript(back) == text);
    CHECK(verify_transcript(g, back).ok);

    REQUIRE(!back.rounds.empty());
    auto bad = back;
    for (auto& rec : bad.rounds)
        if (!rec.response.colored.empty()) {
            // claim a color that is not in the offered list
            rec.response.colors[0] = 1000;
            break;
        }
    CHECK(!verify_transcript(g, bad).ok);
}
