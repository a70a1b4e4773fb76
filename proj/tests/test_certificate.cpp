#include "wdeg/certificate.hpp"
#include "wdeg/errors.hpp"
#include "wdeg/generators.hpp"

#include <doctest.h>

using namespace wdeg;

TEST_CASE("Delete lowers every present neighbor")
{
    auto k3 = complete_graph(3);
    auto st = initial_state(k3, {2, 1, 1});
    auto r = apply_operation(k3, st, Operation::remove(0));
    CHECK(r.legal);
    CHECK(!st.present.contains(0));
    CHECK(st.f[1] == 0);
    CHECK(st.f[2] == 0);
}

TEST_CASE("DelSave needs the remover to outweigh the saved vertex")
{
    // star with center 0
    auto star = star_graph(3);
    auto st = initial_state(star, {1, 0, 0, 0});
    auto before = st;
    auto r = apply_operation(star, st, Operation::save(0, 1));
    CHECK(!r.legal);
    CHECK(st.present == before.present);
    CHECK(st.f == before.f);

    auto edge = path_graph(2);
    auto e = initial_state(edge, {1, 0});
    CHECK(apply_operation(edge, e, Operation::save(0, 1)).legal);
    CHECK(e.f[1] == 0);
    CHECK(e.present.count() == 1);

    auto tie = initial_state(edge, {1, 1});
    CHECK(!apply_operation(edge, tie, Operation::save(0, 1)).legal);

    auto bad = initial_state(path_graph(3), {1, 1, 1});
    CHECK_THROWS_AS(apply_operation(path_graph(3), bad, Operation::save(0, 2)), StructuralError);
}

TEST_CASE("verifier reports the first failing operation")
{
    // P3 as v - w - u with v=0, w=1, u=2
    auto p3 = path_graph(3);
    Certificate ok{{1, 1, 1},
                   {Operation::remove(0), Operation::save(2, 1), Operation::remove(1)},
                   std::nullopt};
    CHECK(verify_certificate(p3, ok).ok);

    auto safe = ok;
    safe.safe_set = VertexSet::from(3, std::vector<Vertex>{2});
    auto rep = verify_certificate(p3, safe);
    CHECK(!rep.ok);
    CHECK(rep.failed_index == 1);

    Certificate k3{{1, 1, 1},
                   {Operation::remove(0), Operation::remove(1), Operation::remove(2)},
                   std::nullopt};
    rep = verify_certificate(complete_graph(3), k3);
    CHECK(!rep.ok);
    CHECK(rep.failed_index == 1);

    Certificate negative{{-1, 0, 0}, ok.ops, std::nullopt};
    rep = verify_certificate(p3, negative);
    CHECK(!rep.ok);
    CHECK(rep.failed_index == -1);
}

TEST_CASE("structurally broken certificates throw")
{
    auto p3 = path_graph(3);
    Certificate twice{{1, 1, 1},
                      {Operation::remove(0), Operation::remove(0), Operation::remove(1)},
                      std::nullopt};
    CHECK_THROWS_AS(verify_certificate(p3, twice), StructuralError);
    Certificate short_cert{{1, 1, 1}, {Operation::remove(0)}, std::nullopt};
    CHECK_THROWS_AS(verify_certificate(p3, short_cert), StructuralError);
    Certificate wrong_n{{1, 1}, {Operation::remove(0), Operation::remove(1)}, std::nullopt};
    CHECK_THROWS_AS(verify_certificate(p3, wrong_n), StructuralError);
}

TEST_CASE("certificate serialization round-trips")
{
    Certificate c{{1, 1, 1},
                  {Operation::remove(0), Operation::save(2, 1), Operation::remove(1)},
                  VertexSet::from(3, std::vector<Vertex>{0})};
    auto text = dump_certificate(c);
    auto back = parse_certificate(text);
    CHECK(back == c);
    CHECK(dump_certificate(back) == text);
    CHECK_THROWS_AS(parse_certificate("{"), ParseError);
    CHECK_THROWS_AS(parse_certificate(R"({"version":2,"n":0,"initial_f":[],"ops":[]})"), ParseError);
    CHECK_THROWS_AS(parse_certificate(R"({"version":1,"n":1,"initial_f":[0],"ops":[{"kind":"x","u":0}]})"),
                    ParseError);
}

TEST_CASE("weight helpers")
{
    CHECK(constant_f(3, 2) == WeightFn{2, 2, 2});
    CHECK(degree_f(star_graph(2), -1) == WeightFn{1, 0, 0});
}
