#include "oracles.hpp"

#include "wdeg/errors.hpp"
#include "wdeg/generators.hpp"
#include "wdeg/solver.hpp"
#include "wdeg/structure.hpp"
#include "wdeg/weak_degeneracy.hpp"

#include <doctest.h>

using namespace wdeg;

namespace {

// A verified certificate for g with random weights, or nullopt.
std::optional<Certificate> random_certificate(const Graph& g, Rng& rng)
{
    WeightFn f(g.order());
    for (int v = 0; v < g.order(); ++v)
        f[v] = static_cast<int>(rng() % (g.degree(v) + 1));
    return is_weakly_f_degenerate(g, f);
}

} // namespace

TEST_CASE("monotone lift")
{
    auto p3 = path_graph(3);
    Certificate c{{1, 1, 1},
                  {Operation::remove(0), Operation::save(2, 1), Operation::remove(1)},
                  std::nullopt};
    REQUIRE(verify_certificate(p3, c).ok);
    auto up = monotone_lift(p3, c, constant_f(3, 2));
    CHECK(up.initial_f == constant_f(3, 2));
    CHECK(verify_certificate(p3, up).ok);
    CHECK(monotone_lift(p3, c, c.initial_f) == c);
    CHECK_THROWS_AS(monotone_lift(p3, c, {1, 0, 1}), PreconditionError);

    Rng rng(4);
    for (int it = 0; it < 300; ++it) {
        auto g = gnp(7, 0.5, rng);
        auto cert = random_certificate(g, rng);
        if (!cert)
            continue;
        WeightFn big = cert->initial_f;
        for (int& x : big)
            x += static_cast<int>(rng() % 3);
        auto lifted = monotone_lift(g, *cert, big);
        CHECK(lifted.initial_f == big);
        CHECK(verify_certificate(g, lifted).ok);
        for (std::size_t i = 0; i < lifted.ops.size(); ++i)
            CHECK(lifted.ops[i].u == cert->ops[i].u);
    }
}

TEST_CASE("restriction and transfer to subgraphs")
{
    Rng rng(8);
    for (int it = 0; it < 200; ++it) {
        auto g = gnp(8, 0.5, rng);
        auto cert = random_certificate(g, rng);
        if (!cert)
            continue;
        VertexSet keep(8);
        for (int v = 0; v < 8; ++v)
            if (rng() % 2)
                keep.insert(v);
        auto sub = induced_subgraph(g, keep);
        auto r = restrict_certificate(g, *cert, keep, cert->initial_f);
        CHECK(r.order() == sub.graph.order());
        CHECK(verify_certificate(sub.graph, r).ok);

        // drop one edge of the induced subgraph as well
        auto edges = sub.graph.edges();
        Graph h = edges.empty() ? sub.graph : remove_edge(sub.graph, edges[rng() % edges.size()]);
        WeightFn hf(h.order());
        for (int i = 0; i < h.order(); ++i)
            hf[i] = cert->initial_f[sub.to_parent[i]];
        auto t = certificate_for_subgraph(g, *cert, h, sub.to_parent, hf);
        CHECK(verify_certificate(h, t).ok);
    }
}

TEST_CASE("partition splits a certificate into two")
{
    auto c4 = cycle_graph(4);
    auto cert = is_weakly_f_degenerate(c4, constant_f(4, 2));
    REQUIRE(cert);
    auto p = partition(c4, *cert, constant_f(4, 1), constant_f(4, 0));
    CHECK((p.v1 | p.v2) == VertexSet::full(4));
    CHECK((p.v1 & p.v2).empty());
    CHECK(verify_certificate(p.part1.graph, p.cert1).ok);
    CHECK(verify_certificate(p.part2.graph, p.cert2).ok);
    // weakly 1-degenerate parts contain no cycle; weakly 0-degenerate ones no edge
    CHECK(girth(p.part1.graph) == kInfiniteGirth);
    CHECK(p.part2.graph.size() == 0);

    auto e = partition(Graph(0), Certificate{}, {}, {});
    CHECK(e.v1.empty());
    CHECK(e.v2.empty());

    CHECK_THROWS_AS(partition(c4, *cert, constant_f(4, 1), constant_f(4, 1)), PreconditionError);
}

TEST_CASE("partition property over random instances")
{
    Rng rng(99);
    int done = 0;
    while (done < 500) {
        const int n = 1 + static_cast<int>(rng() % 8);
        auto g = gnp(n, 0.5, rng);
        auto cert = random_certificate(g, rng);
        if (!cert)
            continue;
        WeightFn f1(n), f2(n);
        for (int v = 0; v < n; ++v) {
            const int total = cert->initial_f[v] - 1;
            f1[v] = static_cast<int>(rng() % (std::abs(total) + 3)) - 1;
            f2[v] = total - f1[v];
        }
        auto p = partition(g, *cert, f1, f2);
        CHECK((p.v1 | p.v2) == VertexSet::full(n));
        CHECK((p.v1 & p.v2).empty());
        CHECK(verify_certificate(p.part1.graph, p.cert1).ok);
        CHECK(verify_certificate(p.part2.graph, p.cert2).ok);
        for (int i = 0; i < p.part1.graph.order(); ++i)
            CHECK(p.cert1.initial_f[i] == f1[p.part1.to_parent[i]]);
        for (int i = 0; i < p.part2.graph.order(); ++i)
            CHECK(p.cert2.initial_f[i] == f2[p.part2.to_parent[i]]);
        ++done;
    }
}

TEST_CASE("greedy Delete-only certificate")
{
    auto c5 = cycle_graph(5);
    for (int x = 0; x < 5; ++x) {
        auto c = greedy_delete_certificate(c5, constant_f(5, 2), x);
        CHECK(c.delete_only());
        CHECK(verify_certificate(c5, c).ok);
    }
    auto star = star_graph(4);
    auto f = degree_f(star, -1);
    f[1] = 1;
    auto c = greedy_delete_certificate(star, f, 1);
    CHECK(verify_certificate(star, c).ok);
    CHECK_THROWS_AS(greedy_delete_certificate(complete_graph(3), constant_f(3, 1), 0),
                    PreconditionError);
}

TEST_CASE("deg - 1 certificates exist exactly off GDP-trees")
{
    // K4 with the edge 0-1 subdivided by vertex 4
    Graph sub_k4(5, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {4, 1}});
    auto c = deg_minus_one_certificate(sub_k4);
    REQUIRE(c);
    CHECK(c->initial_f == degree_f(sub_k4, -1));
    CHECK(verify_certificate(sub_k4, *c).ok);
    CHECK(!deg_minus_one_certificate(cycle_graph(6)));
    Graph bowtie(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}});
    CHECK(!deg_minus_one_certificate(bowtie));
    CHECK(!find_nonregular_biconnected(bowtie));
    CHECK(find_nonregular_biconnected(sub_k4));
    CHECK_THROWS_AS(deg_minus_one_certificate(disjoint_union(path_graph(2), path_graph(2))),
                    PreconditionError);

    Rng rng(12);
    for (int it = 0; it < 200; ++it) {
        auto g = gnp(7, 0.45, rng);
        if (!is_connected(g))
            continue;
        auto d = deg_minus_one_certificate(g);
        CHECK(d.has_value() != is_gdp_tree(g).is_gdp_tree);
        CHECK(d.has_value() == oracle::naive_weakly_f_degenerate(g, degree_f(g, -1)));
        if (d)
            CHECK(verify_certificate(g, *d).ok);
    }
}
