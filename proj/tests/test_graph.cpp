#include "oracles.hpp"

#include "wdeg/errors.hpp"
#include "wdeg/generators.hpp"
#include "wdeg/graph.hpp"

#include <doctest.h>

using namespace wdeg;

TEST_CASE("edge list and DIMACS parse to the same graph")
{
    const std::string el = "# triangle plus pendant\n4\n0 1\n1 2\n2 0\n2 3\n";
    const std::string dimacs = "c same graph\np edge 4 4\ne 1 2\ne 2 3\ne 3 1\ne 3 4\n";
    CHECK(detect_format(el) == GraphFormat::edge_list);
    CHECK(detect_format(dimacs) == GraphFormat::dimacs);
    auto a = parse_graph(el, GraphFormat::edge_list);
    auto b = parse_graph(dimacs, GraphFormat::dimacs);
    CHECK(a == b);
    CHECK(a.order() == 4);
    CHECK(a.size() == 4);
    CHECK(parse_graph(to_edge_list(a), GraphFormat::edge_list) == a);
}

TEST_CASE("malformed graphs are rejected")
{
    CHECK_THROWS_AS(parse_graph("3\n0 0\n", GraphFormat::edge_list), ValidationError);
    CHECK_THROWS_AS(parse_graph("3\n0 5\n", GraphFormat::edge_list), ValidationError);
    CHECK_THROWS_AS(parse_graph("3 3\n0 1\n", GraphFormat::edge_list), ParseError);
    CHECK_THROWS_AS(parse_graph("3\n0 x\n", GraphFormat::edge_list), ParseError);
    // duplicates collapse
    CHECK(parse_graph("3\n0 1\n1 0\n0 1\n", GraphFormat::edge_list).size() == 1);
}

TEST_CASE("vertex sets")
{
    VertexSet s(70);
    s.insert(3);
    s.insert(69);
    CHECK(s.count() == 2);
    CHECK(s.contains(69));
    CHECK(!s.contains(4));
    CHECK((VertexSet::full(70) - s).count() == 68);
    CHECK((s & VertexSet::full(70)) == s);
    s.erase(3);
    CHECK(s.members() == std::vector<Vertex>{69});
}

TEST_CASE("degeneracy order leaves at most d later neighbors")
{
    Rng rng(11);
    for (int it = 0; it < 50; ++it) {
        auto g = gnp(12, 0.4, rng);
        auto d = degeneracy(g);
        std::vector<int> pos(g.order());
        for (int i = 0; i < g.order(); ++i)
            pos[d.order[i]] = i;
        int worst = 0;
        for (int u = 0; u < g.order(); ++u) {
            int later = 0;
            for (int v : g.neighbors(u))
                later += pos[v] > pos[u];
            worst = std::max(worst, later);
        }
        CHECK(worst == d.value);
    }
    CHECK(degeneracy(complete_graph(5)).value == 4);
    CHECK(degeneracy(petersen_graph()).value == 3);
}

TEST_CASE("mad routes agree with subset enumeration")
{
    Rng rng(5);
    for (int it = 0; it < 40; ++it) {
        auto g = gnp(9, 0.35, rng);
        if (g.order() == 0)
            continue;
        const auto want = oracle::naive_mad(g);
        CHECK(max_average_degree(g) == want);
        CHECK(max_average_degree_flow(g) == want);
        CHECK(max_average_degree_enumerate(g) == want);
    }
    CHECK(max_average_degree(complete_graph(4)) == Rational(3));
    CHECK(max_average_degree(path_graph(3)) == Rational(4, 3));
    CHECK_THROWS_AS(max_average_degree(Graph(0)), DomainError);
}

TEST_CASE("blocks, girth, cliques, components")
{
    // two triangles sharing vertex 2
    Graph bowtie(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}});
    auto b = blocks(bowtie);
    CHECK(b.blocks.size() == 2);
    CHECK(b.cut_vertices == std::vector<Vertex>{2});
    CHECK(girth(petersen_graph()) == 5);
    CHECK(girth(cube_graph()) == 4);
    CHECK(girth(path_graph(5)) == kInfiniteGirth);
    CHECK(clique_number(complete_graph(6)) == 6);
    CHECK(clique_number(cycle_graph(5)) == 2);
    CHECK(!has_clique(petersen_graph(), 3));
    auto two = disjoint_union(cycle_graph(3), path_graph(2));
    CHECK(connected_components(two).size() == 2);
    CHECK(!is_connected(two));
    CHECK(bfs_distances(two, 0)[4] == -1);
}

TEST_CASE("exact coloring and bipartite matching")
{
    CHECK(!find_coloring(complete_graph(4), 3));
    auto c = find_coloring(petersen_graph(), 3);
    REQUIRE(c);
    CHECK(is_proper_coloring(petersen_graph(), *c));
    CHECK(!find_coloring(cycle_graph(5), 2));
    // a perfect matching on K_{3,3}
    std::vector<std::vector<int>> adj{{0, 1, 2}, {0, 1, 2}, {0, 1, 2}};
    auto m = max_bipartite_matching(adj, 3);
    CHECK(std::count(m.begin(), m.end(), -1) == 0);
}

TEST_CASE("generators")
{
    Rng rng(3);
    auto r = random_regular(20, 5, rng);
    CHECK(r.is_regular());
    CHECK(r.max_degree() == 5);
    auto rb = random_bipartite_regular(10, 4, rng);
    CHECK(rb.is_regular());
    CHECK(find_coloring(rb, 2));
    auto pp = projective_plane_incidence(3);
    CHECK(pp.order() == 26);
    CHECK(pp.is_regular());
    CHECK(girth(pp) == 6);
    CHECK(random_tree(15, rng).size() == 14);
    CHECK(wheel_graph(5).order() == 6);
    CHECK(prism_graph(4).is_regular());
    CHECK(bipartite_double_cover(cycle_graph(3)) == bipartite_double_cover(cycle_graph(3)));
    CHECK(bipartite_double_cover(cycle_graph(3)).order() == 6);
}

TEST_CASE("documented graph-core examples")
{
    auto p3 = parse_graph("3\n0 1\n1 2", GraphFormat::edge_list);
    CHECK(p3 == path_graph(3));
    std::string k4 = "p edge 4 6\n";
    for (int u = 1; u <= 4; ++u)
        for (int v = u + 1; v <= 4; ++v)
            k4 += "e " + std::to_string(u) + " " + std::to_string(v) + "\n";
    CHECK(parse_graph(k4, GraphFormat::dimacs) == complete_graph(4));
    CHECK_THROWS_AS(parse_graph("2\n0 0\n", GraphFormat::edge_list), ValidationError);

    CHECK(degeneracy(complete_graph(4)).value == 3);
    CHECK(degeneracy(cycle_graph(5)).value == 2);
    CHECK(degeneracy(star_graph(4)).value == 1);

    CHECK(max_average_degree(cycle_graph(6)) == Rational(2));
    Graph k4_pendant(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}});
    CHECK(max_average_degree(k4_pendant) == Rational(3));
    CHECK(oracle::naive_mad(k4_pendant) == Rational(3));

    auto c5 = blocks(cycle_graph(5));
    CHECK(c5.blocks.size() == 1);
    CHECK(c5.cut_vertices.empty());
    auto p4 = blocks(path_graph(4));
    CHECK(p4.blocks.size() == 3);
    CHECK(p4.cut_vertices.size() == 2);

    CHECK(girth(complete_graph(4)) == 3);
    CHECK(has_clique(complete_graph(4), 4));
    CHECK(!has_clique(cycle_graph(5), 3));
    CHECK(!has_clique(remove_edge(complete_graph(4), {0, 1}), 4));
}
