#include "wdeg/generators.hpp"
#include "wdeg/planar.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

using namespace wdeg;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

const fs::path& work_dir()
{
    static const fs::path dir = [] {
        fs::path d = fs::current_path() / "cli_work";
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string path(const std::string& name)
{
    return (work_dir() / name).string();
}

void write(const std::string& name, const std::string& text)
{
    std::ofstream(path(name)) << text;
}

std::string slurp(const std::string& name)
{
    std::ifstream in(path(name));
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Run cli(const std::string& args)
{
    const std::string cmd = std::string("\"") + WDEG_CLI_PATH + "\" " + args + " 2>/dev/null";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0)
        r.out.append(buf, got);
    const int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

void fixtures()
{
    static bool done = false;
    if (done)
        return;
    write("k4.el", to_edge_list(complete_graph(4)));
    write("c5.el", to_edge_list(cycle_graph(5)));
    write("petersen.el", to_edge_list(petersen_graph()));
    write("icosa.rot", dump_rotation(icosahedron().rotation));
    write("broken", "3\n0 1\n1 x\n");
    done = true;
}

} // namespace

TEST_CASE("wd prints the value and a certificate that verifies")
{
    fixtures();
    auto r = cli("wd --graph " + path("k4.el") + " --witness " + path("k4.cert"));
    CHECK(r.code == 0);
    CHECK(r.out.find("wd: 3") != std::string::npos);
    CHECK(cli("verify --graph " + path("k4.el") + " --cert " + path("k4.cert")).code == 0);

    auto j = nlohmann::json::parse(cli("wd --format json --graph " + path("k4.el")).out);
    CHECK(j["wd"] == 3);
    CHECK(j["certificate"]["ops"].size() == 4);

    CHECK(cli("wd --graph " + path("c5.el") + " --f 1").code == 1);
    CHECK(cli("wd --graph " + path("c5.el") + " --f 2").code == 0);
}

TEST_CASE("verify reports the first failing operation")
{
    fixtures();
    cli("wd --graph " + path("k4.el") + " --witness " + path("k4.cert"));
    auto j = nlohmann::json::parse(slurp("k4.cert"));
    j["initial_f"] = {3, 3, 3, 1};
    write("k4_bad.cert", j.dump());
    auto r = cli("verify --format json --graph " + path("k4.el") + " --cert " + path("k4_bad.cert"));
    CHECK(r.code == 1);
    auto rep = nlohmann::json::parse(r.out);
    CHECK(rep["valid"] == false);
    // deleting vertices 1 and 2 drives vertex 3 below zero
    CHECK(rep["failed_index"] == 1);
}

TEST_CASE("planar emits a verifying weak 4-degeneracy certificate")
{
    fixtures();
    auto r = cli("planar --format json --rot " + path("icosa.rot") + " --witness " + path("icosa.cert"));
    CHECK(r.code == 0);
    auto cert = nlohmann::json::parse(slurp("icosa.cert"));
    for (const auto& x : cert["initial_f"])
        CHECK(x == 4);
    write("icosa.el", to_edge_list(icosahedron().graph));
    CHECK(cli("verify --graph " + path("icosa.el") + " --cert " + path("icosa.cert")).code == 0);
}

TEST_CASE("gdp, bounds, mad-check and minimal")
{
    fixtures();
    CHECK(cli("gdp --graph " + path("c5.el")).code == 1);
    auto r = cli("gdp --graph " + path("petersen.el") + " --witness " + path("pet_deg.cert"));
    CHECK(r.code == 0);
    CHECK(cli("verify --graph " + path("petersen.el") + " --cert " + path("pet_deg.cert")).code == 0);

    auto b = nlohmann::json::parse(cli("bounds --format json --graph " + path("petersen.el")).out);
    CHECK(b.contains("wd"));
    CHECK(cli("bounds --graph " + path("k4.el")).code == 0);

    CHECK(cli("mad-check --graph " + path("k4.el")).code == 0);
    CHECK(cli("minimal --graph " + path("k4.el")).code == 0);
    write("k4_iso.el", "5\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    CHECK(cli("minimal --graph " + path("k4_iso.el")).code == 1);
}

TEST_CASE("dp-oracle, color and paint")
{
    fixtures();
    CHECK(cli("dp-oracle --graph " + path("c5.el") + " --k 3").code == 0);
    auto r = cli("dp-oracle --graph " + path("c5.el") + " --k 2 --witness " + path("c5.cover"));
    CHECK(r.code == 1);
    CHECK(!slurp("c5.cover").empty());

    cli("wd --graph " + path("c5.el") + " --witness " + path("c5.cert"));
    const std::string color = "color --graph " + path("c5.el") + " --cert " + path("c5.cert") + " --seed 11";
    auto a = cli(color);
    CHECK(a.code == 0);
    CHECK(cli(color).out == a.out);

    const std::string paint = "paint --graph " + path("c5.el") + " --cert " + path("c5.cert") +
                              " --games 20 --seed 4 --format json";
    auto p = cli(paint);
    CHECK(p.code == 0);
    CHECK(cli(paint).out == p.out);
    auto pj = nlohmann::json::parse(p.out);
    CHECK(pj.is_object());
    CHECK(cli(paint + " --lister full --k 3").code == 0);
}

TEST_CASE("scheme pipelines are reproducible and their witnesses check out")
{
    fixtures();
    Rng rng(1);
    write("bip.el", to_edge_list(random_bipartite_regular(512, 256, rng)));
    write("chrom.cfg", "p=0.4,0.4\nc=0.0625\nthreshold=0\n");
    const std::string build = "scheme-build chrom --graph " + path("bip.el") + " --config " + path("chrom.cfg") +
                              " --k 2 --seed 5";
    auto a = cli(build + " --witness " + path("bip.scheme"));
    CHECK(a.code == 0);
    CHECK(cli(build).out == a.out);
    auto chk = cli("scheme-check --format json --graph " + path("bip.el") + " --scheme " + path("bip.scheme") +
                   " --d 256 --witness " + path("bip.cert"));
    CHECK(chk.code == 0);
    auto j = nlohmann::json::parse(chk.out);
    CHECK(j["legal"] == true);
    CHECK(cli("verify --graph " + path("bip.el") + " --cert " + path("bip.cert")).code == 0);
}

TEST_CASE("embed writes a regular supergraph")
{
    fixtures();
    write("p3.el", "3\n0 1\n1 2\n");
    auto r = cli("embed girth --graph " + path("p3.el") + " --d 2 --girth 5 --witness " + path("p3_big.el"));
    CHECK(r.code == 0);
    CHECK(cli("wd --graph " + path("p3_big.el")).code == 0);
}

TEST_CASE("catalog sweep")
{
    auto r = cli("catalog-sweep --n 5 --check all");
    CHECK(r.code == 0);
    CHECK(r.out.find("34") != std::string::npos);
}

TEST_CASE("exit codes for bad input and exhausted limits")
{
    fixtures();
    CHECK(cli("").code == 2);
    CHECK(cli("wd").code == 2);
    CHECK(cli("wd --graph " + path("broken")).code == 2);
    CHECK(cli("wd --graph " + path("missing.el")).code == 2);
    CHECK(cli("wd --graph " + path("petersen.el") + " --cap 1").code == 3);
    CHECK(cli("--help").code == 0);
}
