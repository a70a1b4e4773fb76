#include "wdeg/errors.hpp"
#include "wdeg/generators.hpp"
#include "wdeg/schemes.hpp"

#include <doctest.h>

#include <cmath>

using namespace wdeg;

namespace {

// P3 as v - w - u with v=0, w=1, u=2; order v, u, w and u saves w.
RemovalScheme p3_scheme()
{
    return {{0, 2, 1}, {-1, -1, 1}};
}

int fibre(const std::vector<Vertex>& save, Vertex b)
{
    return static_cast<int>(std::count(save.begin(), save.end(), b));
}

} // namespace

TEST_CASE("legality of removal schemes")
{
    auto p3 = path_graph(3);
    CHECK(scheme_is_legal(p3, p3_scheme()).ok);

    auto edge = path_graph(2);
    auto r = scheme_is_legal(edge, {{0, 1}, {1, -1}});
    CHECK(!r.ok);
    CHECK(r.violator == 0);
    CHECK(r.lhs == 0);
    CHECK(r.rhs == 0);

    CHECK_THROWS_AS(check_scheme_structure(edge, {{1, 0}, {1, -1}}), StructuralError);
    CHECK_THROWS_AS(check_scheme_structure(p3, {{0, 1, 2}, {2, -1, -1}}), StructuralError);
    CHECK_THROWS_AS(check_scheme_structure(p3, {{0, 0, 2}, {-1, -1, -1}}), StructuralError);
}

TEST_CASE("gaps")
{
    auto p3 = path_graph(3);
    auto g = scheme_gap(p3, p3_scheme());
    CHECK(g.gap == std::vector<int>{1, 1, 1});
    CHECK(g.min_gap == 1);

    auto k3 = complete_graph(3);
    CHECK(scheme_gap(k3, {{2, 0, 1}, {-1, -1, -1}}).min_gap == 0);
    auto none = scheme_gap(Graph(4), {{0, 1, 2, 3}, {-1, -1, -1, -1}});
    CHECK(none.gap == std::vector<int>(4, 0));
    CHECK(none.min_gap == 0);
    CHECK(scheme_gap(Graph(0), {}).min_gap == 0);
    CHECK(format_gap_report(p3, p3_scheme(), g).find("min 1") != std::string::npos);
}

TEST_CASE("schemes convert to certificates")
{
    auto p3 = path_graph(3);
    auto c = scheme_to_certificate(p3, p3_scheme(), 2);
    CHECK(c.initial_f == constant_f(3, 1));
    CHECK(verify_certificate(p3, c).ok);

    Rng rng(6);
    for (int it = 0; it < 50; ++it) {
        auto g = gnp(12, 0.4, rng);
        auto deg = degeneracy(g);
        RemovalScheme s{{deg.order.rbegin(), deg.order.rend()}, std::vector<Vertex>(12, -1)};
        CHECK(scheme_is_legal(g, s).ok);
        const int d = g.max_degree();
        auto cert = scheme_to_certificate(g, s, d);
        CHECK(cert.delete_only());
        CHECK(cert.initial_f == constant_f(12, d - scheme_gap(g, s).min_gap));
        CHECK(verify_certificate(g, cert).ok);
    }
    CHECK_THROWS_AS(scheme_to_certificate(path_graph(2), {{0, 1}, {1, -1}}, 1), PreconditionError);
    CHECK_THROWS_AS(scheme_to_certificate(p3, p3_scheme(), 1), PreconditionError);
}

TEST_CASE("scheme serialization round-trips")
{
    auto s = p3_scheme();
    auto back = parse_scheme(dump_scheme(s));
    CHECK(back.order == s.order);
    CHECK(back.save == s.save);
    CHECK_THROWS_AS(parse_scheme("[1,2"), ParseError);
}

TEST_CASE("Hall saves have fibres of size exactly t")
{
    // K_{4,2}: A = {0..3}, B = {4, 5}
    auto k = complete_bipartite(4, 2);
    auto a = VertexSet::from(6, std::vector<Vertex>{0, 1, 2, 3});
    auto b = VertexSet::from(6, std::vector<Vertex>{4, 5});
    auto s = hall_save(k, a, b, 2);
    CHECK(fibre(s, 4) == 2);
    CHECK(fibre(s, 5) == 2);
    for (Vertex u = 0; u < 6; ++u)
        if (s[u] != -1)
            CHECK(k.adjacent(u, s[u]));
    auto zero = hall_save(k, a, b, 0);
    CHECK(std::count(zero.begin(), zero.end(), -1) == 6);
    CHECK_THROWS_AS(hall_save(k, a, b, 3), PreconditionError);

    Rng rng(13);
    for (int it = 0; it < 20; ++it) {
        auto g = random_bipartite_regular(30, 6, rng);
        // B = {0} with A its neighborhood: d1 = 1, d2 = 6
        auto left = VertexSet::from(60, g.neighbors(0));
        auto right = VertexSet::from(60, std::vector<Vertex>{0});
        for (int t = 1; t <= 6; ++t) {
            auto m = hall_save(g, left, right, t);
            CHECK(fibre(m, 0) == t);
        }
    }
}

TEST_CASE("regular subsets")
{
    Rng rng(21);
    auto small = random_regular(30, 8, rng);
    auto all = VertexSet::full(30);
    CHECK(regular_subset(small, all, 0.3, 0.5) == all);
    CHECK_THROWS_AS(regular_subset(small, all, 0.0, 0.5), PreconditionError);

    auto big = random_regular(200, 64, rng);
    auto full = VertexSet::full(200);
    const double p = 2.0 / 8, eps = 0.5;
    RegularSubsetOptions seeded;
    seeded.seed = 7;
    auto sub = regular_subset(big, full, p, eps, seeded);
    CHECK(is_regular_subset(big, full, sub, p, eps, regularity_threshold(64, p, eps)));
    // with the threshold switched off every vertex must be inside the window
    auto strict = regular_subset(big, full, p, eps, {7, 1'000'000, 0.0});
    Vertex bad = -1;
    CHECK(is_regular_subset(big, full, strict, p, eps, 0.0, &bad));
    for (Vertex v = 0; v < 200; ++v) {
        const double x = big.degree_in(v, strict);
        CHECK(x >= (1 - eps) * p * 64);
        CHECK(x <= (1 + eps) * p * 64);
    }
    CHECK(regularity_threshold(1, 0.5, 0.5) == 0.0);
    CHECK(regularity_threshold(64, p, eps) == doctest::Approx(9 * std::log(64.0) / (eps * eps * p)));
}

TEST_CASE("chromatic pipeline")
{
    // tiny d: the sparse layer window cannot hold
    auto c6 = cycle_graph(6);
    PipelineConfig cfg;
    cfg.k = 2;
    CHECK_THROWS_AS(chrom_scheme(c6, {0, 1, 0, 1, 0, 1}, cfg), PreconditionError);

    PipelineConfig one;
    one.k = 1;
    auto e = chrom_scheme(Graph(5), std::vector<int>(5, 0), one);
    CHECK(e.legality.ok);
    CHECK(e.scheme.order.size() == 5);

    Rng rng(1);
    auto g = random_bipartite_regular(512, 256, rng);
    std::vector<int> colors(1024);
    for (int v = 0; v < 1024; ++v)
        colors[v] = v < 512 ? 0 : 1;
    REQUIRE(is_proper_coloring(g, colors));
    PipelineConfig tuned;
    tuned.k = 2;
    tuned.p = {0.4, 0.4};
    tuned.threshold = 0.0;
    tuned.c = 1.0 / 16;
    tuned.seed = 5;
    auto b = chrom_scheme(g, colors, tuned);
    CHECK(b.legality.ok);
    CHECK(scheme_is_legal(g, b.scheme).ok);
    CHECK(b.gap.min_gap >= 1);
    auto cert = scheme_to_certificate(g, b.scheme, 256);
    CHECK(verify_certificate(g, cert).ok);
}

TEST_CASE("girth-5 pipeline")
{
    PipelineConfig cfg;
    cfg.threshold = 0.0;
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        cfg.seed = seed;
        try {
            auto b = girth5_scheme(petersen_graph(), cfg);
            CHECK(b.legality.ok);
            CHECK(scheme_is_legal(petersen_graph(), b.scheme).ok);
        } catch (const PreconditionError&) {
            // a failed window on a tiny instance is a diagnostic, not a bug
        }
    }
    // dense regular graphs are the desk-scale fixture; the girth hypothesis is not enforced
    Rng rng(9);
    auto rr = random_regular(300, 64, rng);
    cfg.seed = 3;
    auto b = girth5_scheme(rr, cfg);
    CHECK(b.legality.ok);
    CHECK(scheme_is_legal(rr, b.scheme).ok);
    CHECK(b.gap.min_gap >= 1);
    CHECK(verify_certificate(rr, scheme_to_certificate(rr, b.scheme, 64)).ok);
}

TEST_CASE("pipeline configuration text")
{
    auto cfg = parse_pipeline_config("# tuned\nk=3\nc=0.25\neps=0.4\np=0.1,0.2,0.3\nthreshold=2\nseed=9\ncap=50\n");
    CHECK(cfg.k == 3);
    CHECK(cfg.c == 0.25);
    CHECK(cfg.eps == 0.4);
    CHECK(cfg.p == std::vector<double>{0.1, 0.2, 0.3});
    CHECK(cfg.threshold == 2.0);
    CHECK(cfg.seed == 9);
    CHECK(cfg.cap == 50);
    CHECK_THROWS_AS(parse_pipeline_config("k\n"), ParseError);
    CHECK_THROWS_AS(parse_pipeline_config("colour=3\n"), ParseError);
    auto p = default_layer_densities(2);
    CHECK(p.size() == 2);
    CHECK(p[1] == doctest::Approx(1.0 / 12));
    CHECK(32 * 2 * default_chrom_c(2) < p[0]);
}

TEST_CASE("alpha powers")
{
    CHECK(alpha_power({0.1, 0.9}, 0.5) == 1);
    CHECK(alpha_power({0, 0, 0}, 0.2) == 3);
    CHECK(powerful_estimate(std::vector<double>(6, 1.0), 6, 2000, 1) == doctest::Approx(0.0));
    const double mid = powerful_estimate(std::vector<double>(6, 0.5), 6, 4000, 1);
    CHECK(mid > 0.0);
    CHECK(mid < 1.0);
}

TEST_CASE("regular embeddings")
{
    auto c4 = cycle_graph(4);
    auto same = embed_regular_chrom(c4, 2, 2);
    CHECK(same.graph == c4);

    auto p3 = embed_regular_chrom(path_graph(3), 2, 2);
    CHECK(p3.graph.is_regular());
    CHECK(p3.graph.max_degree() == 2);
    CHECK(is_connected(p3.graph));
    CHECK(p3.graph.order() % 2 == 0);
    CHECK(is_proper_coloring(p3.graph, p3.coloring));
    CHECK(induced_subgraph(p3.graph, VertexSet::from(p3.graph.order(), std::vector<Vertex>{0, 1, 2})).graph ==
          path_graph(3));

    auto star = embed_regular_chrom(star_graph(3), 3, 2);
    CHECK(star.graph.is_regular());
    CHECK(star.graph.max_degree() == 3);
    CHECK(is_proper_coloring(star.graph, star.coloring));
    CHECK(*std::max_element(star.coloring.begin(), star.coloring.end()) <= 1);

    auto girth_same = embed_regular_girth(petersen_graph(), 3, 5);
    CHECK(girth_same.graph == petersen_graph());
    auto long_cycle = embed_regular_girth(path_graph(3), 2, 5);
    CHECK(long_cycle.graph.is_regular());
    CHECK(long_cycle.graph.max_degree() == 2);
    CHECK(girth(long_cycle.graph) >= 5);
    CHECK(induced_subgraph(long_cycle.graph,
                           VertexSet::from(long_cycle.graph.order(), std::vector<Vertex>{0, 1, 2}))
              .graph == path_graph(3));
    CHECK(!girth_regular_provider(10, 5));
    CHECK_THROWS_AS(embed_regular_girth(Graph(10), 1, 5), PreconditionError);
    CHECK_THROWS_AS(embed_regular_chrom(complete_graph(4), 2, 4), PreconditionError);
}
