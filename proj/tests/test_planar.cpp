#include "wdeg/errors.hpp"
#include "wdeg/planar.hpp"

#include <doctest.h>

#include <algorithm>

using namespace wdeg;

namespace {

void check_weakly4(const PlanarInstance& inst)
{
    auto cert = weakly4_certificate(inst.graph, inst.rotation);
    CHECK(cert.initial_f == constant_f(inst.graph.order(), 4));
    CHECK(verify_certificate(inst.graph, cert).ok);
}

// The safe certificate checked against its contract: weights, safety, replay.
void check_safe(const PlanarInstance& inst)
{
    auto sc = safe_certificate(inst);
    const auto& c = inst.rotation.outer;
    const Graph& g = inst.graph;
    CHECK(sc.subgraph.graph.order() == g.order() - 2);
    REQUIRE(sc.certificate.safe_set);
    for (int i = 0; i < sc.subgraph.graph.order(); ++i) {
        const Vertex v = sc.subgraph.to_parent[i];
        const bool outer = std::find(c.begin(), c.end(), v) != c.end();
        const int want = (outer ? 2 : 4) - g.adjacent(v, c[0]) - g.adjacent(v, c[1]);
        CHECK(sc.certificate.initial_f[i] == want);
        CHECK(sc.certificate.safe_set->contains(i) == outer);
    }
    CHECK(verify_certificate(sc.subgraph.graph, sc.certificate).ok);
}

} // namespace

TEST_CASE("embeddings validate with Euler's formula")
{
    auto k4 = tetrahedron();
    auto r = validate_embedding(k4.graph, k4.rotation);
    CHECK(r.ok);
    CHECK(r.faces == 4);
    auto c4 = embedded_cycle(4);
    r = validate_embedding(c4.graph, c4.rotation);
    CHECK(r.ok);
    CHECK(r.faces == 2);
    for (const auto& inst : {octahedron(), cube(), icosahedron(), dodecahedron(), grid(3, 4)}) {
        auto rep = validate_embedding(inst.graph, inst.rotation);
        CHECK(rep.ok);
        CHECK(rep.faces == 2 - inst.graph.order() + static_cast<int>(inst.graph.size()));
    }
}

TEST_CASE("mangled rotations are reported")
{
    auto oct = octahedron();
    auto rot = oct.rotation;
    std::swap(rot.rot[0][0], rot.rot[0][1]);
    CHECK(!validate_embedding(oct.graph, rot).ok);
    auto missing = oct.rotation;
    missing.rot[0].pop_back();
    CHECK(!validate_embedding(oct.graph, missing).ok);
    auto bad_outer = oct.rotation;
    bad_outer.outer = {0, 1, 99};
    CHECK(!validate_embedding(oct.graph, bad_outer).ok);
}

TEST_CASE("triangulation adds chords inside faces only")
{
    auto quad = triangulate(embedded_cycle(4));
    CHECK(quad.added_edges.size() == 1);
    CHECK(quad.original_order == 4);
    auto pent = triangulate(embedded_cycle(5));
    CHECK(pent.added_edges.size() == 2);
    for (auto [u, v] : pent.added_edges)
        CHECK(std::min(u, v) == 0);
    CHECK(validate_embedding(pent.instance.graph, pent.instance.rotation).ok);
    auto ico = triangulate(icosahedron());
    CHECK(ico.added_edges.empty());
    CHECK(ico.instance.graph == icosahedron().graph);
    for (const auto& inst : {cube(), dodecahedron(), grid(4, 5)}) {
        auto t = triangulate(inst);
        const auto& tg = t.instance.graph;
        CHECK(validate_embedding(tg, t.instance.rotation).ok);
        auto faces = trace_faces(t.instance.rotation);
        const int outer = find_face(faces, t.instance.rotation.outer);
        CHECK(outer >= 0);
        for (int f = 0; f < static_cast<int>(faces.size()); ++f)
            if (f != outer)
                CHECK(faces[f].size() == 3);
        // the original graph survives as an induced subgraph
        for (auto [u, v] : inst.graph.edges())
            CHECK(tg.adjacent(u, v));
    }
}

TEST_CASE("safe certificates")
{
    auto tri = embedded_cycle(3);
    auto sc = safe_certificate(tri);
    CHECK(sc.subgraph.graph.order() == 1);
    CHECK(sc.certificate.initial_f == WeightFn{0});
    CHECK(sc.certificate.ops == std::vector<Operation>{Operation::remove(0)});
    check_safe(tetrahedron());
    check_safe(octahedron());
    check_safe(icosahedron());
    check_safe(triangulate(dodecahedron()).instance);
    CHECK_THROWS_AS(safe_certificate(cube()), PreconditionError);
}

TEST_CASE("weak 4-degeneracy certificates for plane graphs")
{
    check_weakly4(tetrahedron());
    check_weakly4(octahedron());
    check_weakly4(cube());
    check_weakly4(icosahedron());
    check_weakly4(dodecahedron());
    check_weakly4(grid(5, 7));
    check_weakly4(embedded_cycle(9));
    Rng rng(2718);
    for (int it = 0; it < 40; ++it) {
        const int n = 4 + static_cast<int>(rng() % 150);
        auto inst = random_triangulation(n, rng);
        CHECK(validate_embedding(inst.graph, inst.rotation).ok);
        CHECK(inst.graph.size() == static_cast<std::size_t>(3 * n - 6));
        check_weakly4(inst);
    }
}

TEST_CASE("rotation text round-trips")
{
    auto ico = icosahedron();
    auto text = dump_rotation(ico.rotation);
    auto back = parse_rotation(text);
    CHECK(back.graph == ico.graph);
    CHECK(back.rotation.rot == ico.rotation.rot);
    CHECK(back.rotation.outer == ico.rotation.outer);
    CHECK(dump_rotation(back.rotation) == text);
    CHECK_THROWS_AS(parse_rotation("0: 1\n1: 2\n"), Error);
}

TEST_CASE("faces rebuild the rotation")
{
    auto cube_inst = cube();
    auto faces = trace_faces(cube_inst.rotation);
    CHECK(faces.size() == 6);
    auto rot = rotation_from_faces(8, faces);
    CHECK(validate_embedding(cube_inst.graph, rot).ok);
    CHECK(trace_faces(rot).size() == 6);
    faces.pop_back();
    CHECK_THROWS_AS(rotation_from_faces(8, faces), StructuralError);
}
