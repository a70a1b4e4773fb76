#include "cli_io.hpp"

#include "wdeg/catalog.hpp"
#include "wdeg/dp_coloring.hpp"
#include "wdeg/errors.hpp"
#include "wdeg/painting.hpp"
#include "wdeg/planar.hpp"
#include "wdeg/schemes.hpp"
#include "wdeg/solver.hpp"
#include "wdeg/structure.hpp"
#include "wdeg/weak_degeneracy.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <thread>

namespace wdeg::cli {
namespace {

using nlohmann::json;

struct Options {
    std::string graph, rot, cert, scheme, f, safe_set, cover, config, out, witness;
    std::string format = "text";
    std::optional<std::uint64_t> seed;
    std::optional<std::int64_t> cap;
    std::optional<int> k, d;
    std::optional<double> c, eps, threshold;
    int girth = 5;
    int games = 1;
    double intensity = 0.5;
    std::string lister = "random";
    int max_n = 6;
    std::string check = "solver";
    int jobs = 1;
};

Format format_of(const Options& o)
{
    return o.format == "json" ? Format::json : Format::text;
}

SolverOptions solver_options(const Options& o)
{
    SolverOptions s;
    if (o.cap)
        s.max_states = *o.cap;
    s.parallel = o.jobs > 1;
    return s;
}

json parse_json(const std::string& text)
{
    return json::parse(text);
}

void emit_witness(const Options& o, const std::string& text)
{
    if (!o.witness.empty())
        write_file(o.witness, text);
}

void add_certificate(Output& out, const Options& o, const Certificate& cert)
{
    const auto text = dump_certificate(cert);
    out.block("certificate", text, parse_json(text));
    emit_witness(o, text);
}

std::string rational(const Rational& r)
{
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

int cmd_wd(const Options& o)
{
    const auto g = load_graph(o.graph);
    Output out(format_of(o));
    out.field("n", g.order());
    out.field("m", g.size());
    if (o.f.empty() && o.safe_set.empty()) {
        auto r = weak_degeneracy_exact(g, solver_options(o));
        WDEG_ENSURE(verify_certificate(g, r.certificate).ok, "solver certificate rejected");
        out.field("wd", r.value);
        add_certificate(out, o, r.certificate);
        out.flush(o.out);
        return kOk;
    }
    const auto f = load_weights(o.f.empty() ? std::to_string(g.max_degree()) : o.f, g.order());
    std::optional<VertexSet> safe;
    if (!o.safe_set.empty())
        safe = load_vertex_set(o.safe_set, g.order());
    auto cert = is_weakly_f_degenerate(g, f, safe, solver_options(o));
    out.field("weakly_f_degenerate", cert.has_value());
    if (cert)
        add_certificate(out, o, *cert);
    out.flush(o.out);
    return cert ? kOk : kNegative;
}

int cmd_verify(const Options& o)
{
    const auto g = load_graph(o.graph);
    auto cert = parse_certificate(read_input(o.cert));
    if (!o.f.empty())
        cert.initial_f = load_weights(o.f, g.order());
    if (!o.safe_set.empty())
        cert.safe_set = load_vertex_set(o.safe_set, g.order());
    const auto r = verify_certificate(g, cert);
    Output out(format_of(o));
    out.field("valid", r.ok);
    if (!r.ok) {
        out.field("failed_index", r.failed_index);
        out.field("reason", r.reason);
    }
    out.flush(o.out);
    return r.ok ? kOk : kNegative;
}

int cmd_color(const Options& o)
{
    const auto g = load_graph(o.graph);
    const auto cert = parse_certificate(read_input(o.cert));
    Output out(format_of(o));
    Cover cover;
    if (!o.cover.empty()) {
        cover = parse_cover(read_input(o.cover));
    } else {
        const auto seed = resolve_seed(o.seed);
        out.header("seed", seed);
        Rng rng(seed);
        std::vector<int> sizes(g.order());
        int palette = 1;
        for (int v = 0; v < g.order(); ++v) {
            sizes[v] = cert.initial_f[v] + 1;
            palette = std::max(palette, sizes[v] + 2);
        }
        cover = random_cover(g, sizes, palette, 1.0, rng);
        const auto text = dump_cover(cover);
        out.block("cover", text, parse_json(text));
    }
    const auto phi = color_from_certificate(g, cover, cert);
    const bool ok = is_proper(g, cover, phi);
    out.field("proper", ok);
    out.field("coloring", phi);
    out.flush(o.out);
    return ok ? kOk : kNegative;
}

int cmd_dp_oracle(const Options& o)
{
    const auto g = load_graph(o.graph);
    if (!o.k)
        throw PreconditionError("dp-oracle needs --k");
    const auto r = brute_force_dp_colorable(g, *o.k);
    Output out(format_of(o));
    out.field("k", *o.k);
    out.field("dp_colorable", r.colorable);
    if (r.witness) {
        const auto text = dump_cover(*r.witness);
        out.block("uncolorable_cover", text, parse_json(text));
        emit_witness(o, text);
    }
    out.flush(o.out);
    return r.colorable ? kOk : kNegative;
}

int cmd_paint(const Options& o)
{
    const auto g = load_graph(o.graph);
    const auto cert = parse_certificate(read_input(o.cert));
    if (!verify_certificate(g, cert).ok)
        throw StructuralError("certificate does not verify on this graph");
    if (o.lister != "random" && o.lister != "full")
        throw PreconditionError("unknown lister '" + o.lister + "'");
    const auto seed = resolve_seed(o.seed);
    Output out(format_of(o));
    out.header("seed", seed);
    WeightFn budget(cert.initial_f);
    int k = 1;
    for (int& x : budget)
        k = std::max(k, ++x);
    if (o.k)
        k = *o.k;
    Rng rng(seed);
    int painter = 0, lister = 0, guard = 0;
    std::optional<Transcript> shown;
    for (int i = 0; i < o.games; ++i) {
        const auto game_seed = rng();
        auto adversary = o.lister == "full" ? full_assignment_lister(k, game_seed)
                                            : random_lister(game_seed, o.intensity);
        auto t = play_game(g, budget, cert, *adversary);
        const auto check = verify_transcript(g, t);
        WDEG_ENSURE(check.ok, "transcript failed replay: " + check.reason);
        (t.winner == Winner::Painter ? painter : lister) += 1;
        guard += t.stopped_by_guard;
        if (!shown || (t.winner == Winner::Lister && shown->winner == Winner::Painter))
            shown = std::move(t);
    }
    out.field("lister", o.lister);
    out.field("games", o.games);
    out.field("painter_wins", painter);
    out.field("lister_wins", lister);
    out.field("guard_stops", guard);
    if (shown) {
        const auto text = dump_transcript(*shown);
        out.block("transcript", text, parse_json(text));
        emit_witness(o, text);
    }
    out.flush(o.out);
    return lister == 0 ? kOk : kNegative;
}

int cmd_planar(const Options& o)
{
    auto inst = parse_rotation(read_input(o.rot));
    const auto rep = validate_embedding(inst.graph, inst.rotation);
    if (!rep.ok)
        throw StructuralError("invalid embedding: " + rep.violation);
    const auto cert = weakly4_certificate(inst.graph, inst.rotation);
    const auto r = verify_certificate(inst.graph, cert);
    WDEG_ENSURE(r.ok, "planar certificate rejected: " + r.reason);
    Output out(format_of(o));
    out.field("n", inst.graph.order());
    out.field("m", inst.graph.size());
    out.field("faces", rep.faces);
    out.field("f", 4);
    add_certificate(out, o, cert);
    out.flush(o.out);
    return kOk;
}

json gap_json(const GapReport& gr)
{
    return {{"gap", gr.gap}, {"min", gr.min_gap}};
}

int cmd_scheme_check(const Options& o)
{
    const auto g = load_graph(o.graph);
    const auto s = parse_scheme(read_input(o.scheme));
    check_scheme_structure(g, s);
    const auto legal = scheme_is_legal(g, s);
    Output out(format_of(o));
    out.field("legal", legal.ok);
    if (!legal.ok) {
        out.field("violator", legal.violator);
        out.field("lhs", legal.lhs);
        out.field("rhs", legal.rhs);
        out.flush(o.out);
        return kNegative;
    }
    const auto gr = scheme_gap(g, s);
    out.field("min_gap", gr.min_gap);
    out.block("gap", format_gap_report(g, s, gr), gap_json(gr));
    int code = kOk;
    if (o.d) {
        const auto cert = scheme_to_certificate(g, s, *o.d);
        const auto r = verify_certificate(g, cert);
        out.field("certificate_f", *o.d - gr.min_gap);
        out.field("certificate_valid", r.ok);
        if (!r.ok)
            code = kNegative;
        add_certificate(out, o, cert);
    }
    out.flush(o.out);
    return code;
}

PipelineConfig pipeline_config(const Options& o, std::uint64_t seed)
{
    PipelineConfig cfg;
    if (!o.config.empty())
        cfg = parse_pipeline_config(read_input(o.config));
    if (o.k)
        cfg.k = *o.k;
    if (o.c)
        cfg.c = *o.c;
    if (o.eps)
        cfg.eps = *o.eps;
    if (o.threshold)
        cfg.threshold = *o.threshold;
    if (o.cap)
        cfg.cap = *o.cap;
    cfg.seed = seed;
    return cfg;
}

int cmd_scheme_build(const Options& o, const std::string& which)
{
    const auto g = load_graph(o.graph);
    std::uint64_t seed = 0;
    if (o.seed)
        seed = *o.seed;
    else if (!o.config.empty())
        seed = parse_pipeline_config(read_input(o.config)).seed;
    else
        seed = resolve_seed(std::nullopt);
    const auto cfg = pipeline_config(o, seed);
    Output out(format_of(o));
    out.header("seed", seed);
    SchemeBuild b;
    if (which == "chrom") {
        auto coloring = find_coloring(g, cfg.k);
        if (!coloring)
            throw PreconditionError("graph has no proper " + std::to_string(cfg.k) + "-coloring");
        b = chrom_scheme(g, *coloring, cfg);
    } else {
        b = girth5_scheme(g, cfg);
    }
    out.field("pipeline", which);
    out.field("d", g.max_degree());
    out.field("target", b.target);
    out.field("savers", b.b.count());
    out.field("legal", b.legality.ok);
    out.field("min_gap", b.gap.min_gap);
    out.field("dropped_saves", b.dropped_saves);
    json windows = json::array();
    std::string wtext;
    for (const auto& w : b.windows) {
        windows.push_back({{"name", w.name}, {"ok", w.ok}, {"detail", w.detail}});
        wtext += w.name + " " + (w.ok ? "ok" : "failed") + (w.detail.empty() ? "" : " " + w.detail) + "\n";
    }
    out.block("windows", wtext, windows);
    const auto text = dump_scheme(b.scheme);
    out.block("scheme", text, parse_json(text));
    emit_witness(o, text);
    out.flush(o.out);
    return b.legality.ok ? kOk : kNegative;
}

int cmd_gdp(const Options& o)
{
    const auto g = load_graph(o.graph);
    const auto v = is_gdp_tree(g);
    const auto cert = deg_minus_one_certificate(g);
    WDEG_ENSURE(cert.has_value() != v.is_gdp_tree, "deg-1 certificate disagrees with block structure");
    Output out(format_of(o));
    out.field("gdp_tree", v.is_gdp_tree);
    out.field("gallai_tree", v.is_gallai_tree);
    if (v.offending_block)
        out.field("offending_block", v.offending_block->members());
    if (cert)
        add_certificate(out, o, *cert);
    out.flush(o.out);
    return cert ? kOk : kNegative;
}

int cmd_bounds(const Options& o)
{
    const auto g = load_graph(o.graph);
    Output out(format_of(o));
    const int n = g.order();
    out.field("n", n);
    out.field("regular", g.is_regular());
    if (!g.is_regular() || n < 2) {
        out.flush(o.out);
        return kOk;
    }
    const int d = g.max_degree();
    const int wd = weak_degeneracy_exact(g, solver_options(o)).value;
    const bool triangle_free = !has_clique(g, 3);
    out.field("d", d);
    out.field("wd", wd);
    out.field("regular_bound", lower_bound_regular(d, n));
    bool ok = meets_regular_bound(wd, d, n);
    out.field("regular_bound_met", ok);
    out.field("triangle_free", triangle_free);
    if (triangle_free && n >= 4) {
        out.field("trianglefree_bound", lower_bound_trianglefree(d, n));
        const bool tf = meets_trianglefree_bound(wd, d, n);
        out.field("trianglefree_bound_met", tf);
        ok = ok && tf;
    }
    out.flush(o.out);
    return ok ? kOk : kNegative;
}

int cmd_mad_check(const Options& o)
{
    const auto g = load_graph(o.graph);
    MadCheckOptions opt;
    opt.level = o.d;
    opt.solver = solver_options(o);
    const auto r = mad_theorem_check(g, opt);
    Output out(format_of(o));
    out.field("d", r.d);
    out.field("exact", r.exact);
    out.field("clique", r.has_clique);
    out.field("mad", rational(r.mad));
    out.field("threshold", rational(r.threshold));
    out.field("outcome", to_string(r.outcome));
    out.flush(o.out);
    return r.outcome == MadOutcome::violated ? kNegative : kOk;
}

int cmd_minimal(const Options& o)
{
    const auto g = load_graph(o.graph);
    const auto r = minimality_check(g, solver_options(o));
    Output out(format_of(o));
    out.field("wd", r.wd);
    out.field("minimal", r.minimal);
    out.field("min_degree_ok", r.min_degree_ok);
    out.field("components_ok", r.components_ok);
    if (!r.witness.empty())
        out.field("witness", r.witness);
    out.flush(o.out);
    return r.minimal && r.min_degree_ok && r.components_ok ? kOk : kNegative;
}

int cmd_embed(const Options& o, const std::string& which)
{
    const auto g = load_graph(o.graph);
    if (!o.d)
        throw PreconditionError("embed needs --d");
    RegularEmbedding e;
    if (which == "chrom") {
        if (!o.k)
            throw PreconditionError("embed chrom needs --k");
        e = embed_regular_chrom(g, *o.d, *o.k);
    } else {
        e = embed_regular_girth(g, *o.d, o.girth);
    }
    Output out(format_of(o));
    out.field("n", e.graph.order());
    out.field("m", e.graph.size());
    out.field("d", *o.d);
    out.field("regular", e.graph.is_regular());
    out.field("girth", girth(e.graph));
    if (!e.coloring.empty())
        out.field("coloring", e.coloring);
    const auto text = to_edge_list(e.graph);
    out.block("graph", text, text);
    emit_witness(o, text);
    out.flush(o.out);
    return kOk;
}

struct SweepRow {
    int wd = -1;
    bool failed = false;
    std::string note;
};

SweepRow sweep_one(const Graph& g, const std::string& check, const SolverOptions& sopt)
{
    SweepRow row;
    const bool all = check == "all";
    if (all || check == "solver") {
        auto r = weak_degeneracy_exact(g, sopt);
        row.wd = r.value;
        if (!verify_certificate(g, r.certificate).ok) {
            row.failed = true;
            row.note = "certificate rejected";
        }
        if (r.value > 0 && is_weakly_f_degenerate(g, constant_f(g.order(), r.value - 1), {}, sopt)) {
            row.failed = true;
            row.note = "wd not minimal";
        }
    }
    if ((all || check == "gdp") && g.order() > 0 && is_connected(g)) {
        const bool tree = is_gdp_tree(g).is_gdp_tree;
        const auto cert = deg_minus_one_certificate(g);
        if (tree == cert.has_value() || (cert && !verify_certificate(g, *cert).ok)) {
            row.failed = true;
            row.note = "deg-1 certificate disagrees with block structure";
        }
    }
    if ((all || check == "mad") && g.order() > 0) {
        if (mad_theorem_check(g, {std::nullopt, sopt}).outcome == MadOutcome::violated) {
            row.failed = true;
            row.note = "clique-or-mad dichotomy violated";
        }
    }
    return row;
}

int cmd_catalog_sweep(const Options& o)
{
    if (o.check != "solver" && o.check != "gdp" && o.check != "mad" && o.check != "all")
        throw PreconditionError("unknown check '" + o.check + "'");
    if (o.max_n < 1 || o.max_n > kMaxCatalogOrder)
        throw PreconditionError("--n must lie in 1.." + std::to_string(kMaxCatalogOrder));
    std::vector<const Graph*> graphs;
    for (int n = 1; n <= o.max_n; ++n)
        for (const auto& g : catalog(n))
            graphs.push_back(&g);

    SolverOptions sopt;
    if (o.cap)
        sopt.max_states = *o.cap;
    std::vector<SweepRow> rows(graphs.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (std::size_t i; (i = next++) < graphs.size();) {
            try {
                rows[i] = sweep_one(*graphs[i], o.check, sopt);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error)
                    error = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < std::max(1, o.jobs); ++t)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();
    if (error)
        std::rethrow_exception(error);

    // per order: graph count, histogram of wd, failures
    std::map<int, std::map<int, int>> hist;
    std::map<int, int> count, fails;
    json failures = json::array();
    std::string fail_text;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        const int n = graphs[i]->order();
        ++count[n];
        if (rows[i].wd >= 0)
            ++hist[n][rows[i].wd];
        if (rows[i].failed) {
            ++fails[n];
            const auto el = to_edge_list(*graphs[i]);
            failures.push_back({{"n", n}, {"graph", el}, {"note", rows[i].note}});
            fail_text += rows[i].note + "\n" + el;
        }
    }
    Output out(format_of(o));
    out.field("check", o.check);
    out.field("max_n", o.max_n);
    out.field("graphs", graphs.size());
    int total_fail = 0;
    json table = json::array();
    std::string text = "n graphs failures wd-histogram\n";
    for (const auto& [n, c] : count) {
        json h = json::object();
        std::string hs;
        for (const auto& [w, k] : hist[n]) {
            h[std::to_string(w)] = k;
            hs += " " + std::to_string(w) + ":" + std::to_string(k);
        }
        total_fail += fails[n];
        table.push_back({{"n", n}, {"graphs", c}, {"failures", fails[n]}, {"wd", h}});
        text += std::to_string(n) + " " + std::to_string(c) + " " + std::to_string(fails[n]) + hs + "\n";
    }
    out.field("failures", total_fail);
    out.block("table", text, table);
    if (total_fail > 0)
        out.block("failed", fail_text, failures);
    out.flush(o.out);
    return total_fail == 0 ? kOk : kNegative;
}

void add_output(CLI::App* sub, Options& o)
{
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", o.out, "Write the report to this file instead of stdout");
}

void add_witness(CLI::App* sub, Options& o)
{
    sub->add_option("--witness", o.witness, "Also write the emitted witness to this file");
}

void add_graph(CLI::App* sub, Options& o)
{
    sub->add_option("--graph", o.graph, "Graph file (edge list or DIMACS, '-' for stdin)")->required();
}

} // namespace

int run(int argc, char** argv)
{
    CLI::App app{"Weak degeneracy toolkit"};
    app.require_subcommand(1);
    Options o;
    std::function<int()> action;

    auto* wd = app.add_subcommand("wd", "Exact weak degeneracy, or weak f-degeneracy with --f");
    add_graph(wd, o);
    wd->add_option("--f", o.f, "Constant weight or per-vertex weight file");
    wd->add_option("--safe-set", o.safe_set, "Vertices that must be removed by Delete");
    wd->add_option("--cap", o.cap, "Solver state cap");
    wd->add_option("--jobs", o.jobs, "Threads for the top-level search");
    add_output(wd, o);
    add_witness(wd, o);
    wd->callback([&] { action = [&] { return cmd_wd(o); }; });

    auto* verify = app.add_subcommand("verify", "Replay a certificate");
    add_graph(verify, o);
    verify->add_option("--cert", o.cert, "Certificate file")->required();
    verify->add_option("--f", o.f, "Override the certificate's initial weights");
    verify->add_option("--safe-set", o.safe_set, "Override the certificate's safe set");
    add_output(verify, o);
    verify->callback([&] { action = [&] { return cmd_verify(o); }; });

    auto* color = app.add_subcommand("color", "DP-color a cover with lists of size f+1 along a certificate");
    add_graph(color, o);
    color->add_option("--cert", o.cert, "Certificate file")->required();
    color->add_option("--cover", o.cover, "Cover file; a random one is drawn otherwise");
    color->add_option("--seed", o.seed, "Seed for the random cover");
    add_output(color, o);
    color->callback([&] { action = [&] { return cmd_color(o); }; });

    auto* oracle = app.add_subcommand("dp-oracle", "Decide DP k-colorability by exhausting all covers");
    add_graph(oracle, o);
    oracle->add_option("--k", o.k, "Number of colors")->required();
    add_output(oracle, o);
    add_witness(oracle, o);
    oracle->callback([&] { action = [&] { return cmd_dp_oracle(o); }; });

    auto* paint = app.add_subcommand("paint", "Play DP-painting games with the certificate strategy");
    add_graph(paint, o);
    paint->add_option("--cert", o.cert, "Certificate file; the budget is its weights plus one")->required();
    paint->add_option("--games", o.games, "Number of games")->check(CLI::PositiveNumber);
    paint->add_option("--lister", o.lister, "Adversary: random or full")->check(CLI::IsMember({"random", "full"}));
    paint->add_option("--intensity", o.intensity, "Random lister: chance a vertex gets a list")
        ->check(CLI::Range(0.0, 1.0));
    paint->add_option("--k", o.k, "Full lister: colors per list");
    paint->add_option("--seed", o.seed, "Seed");
    add_output(paint, o);
    add_witness(paint, o);
    paint->callback([&] { action = [&] { return cmd_paint(o); }; });

    auto* planar = app.add_subcommand("planar", "Weak 4-degeneracy certificate from a plane embedding");
    planar->add_option("--rot", o.rot, "Rotation system file")->required();
    add_output(planar, o);
    add_witness(planar, o);
    planar->callback([&] { action = [&] { return cmd_planar(o); }; });

    auto* check = app.add_subcommand("scheme-check", "Legality and gap of a removal scheme");
    add_graph(check, o);
    check->add_option("--scheme", o.scheme, "Scheme file")->required();
    check->add_option("--d", o.d, "Convert to a certificate with weights d - gap");
    add_output(check, o);
    add_witness(check, o);
    check->callback([&] { action = [&] { return cmd_scheme_check(o); }; });

    auto* build = app.add_subcommand("scheme-build", "Randomized removal schemes for regular graphs");
    build->require_subcommand(1);
    for (const std::string which : {"chrom", "girth5"}) {
        auto* sub = build->add_subcommand(which, which == "chrom" ? "Layered scheme from a k-coloring"
                                                                 : "Random-order scheme for girth >= 5");
        add_graph(sub, o);
        sub->add_option("--config", o.config, "key=value pipeline configuration");
        sub->add_option("--k", o.k, "Colors (chrom)");
        sub->add_option("--c", o.c, "Saver count scale");
        sub->add_option("--eps", o.eps, "Regularity tolerance");
        sub->add_option("--threshold", o.threshold, "Regularity threshold override");
        sub->add_option("--cap", o.cap, "Resampling cap");
        sub->add_option("--seed", o.seed, "Seed");
        add_output(sub, o);
        add_witness(sub, o);
        sub->callback([&o, &action, which] { action = [&o, which] { return cmd_scheme_build(o, which); }; });
    }

    auto* gdp = app.add_subcommand("gdp", "GDP-tree recognition and the deg-1 certificate");
    add_graph(gdp, o);
    add_output(gdp, o);
    add_witness(gdp, o);
    gdp->callback([&] { action = [&] { return cmd_gdp(o); }; });

    auto* bounds = app.add_subcommand("bounds", "Lower bounds on wd for regular graphs");
    add_graph(bounds, o);
    bounds->add_option("--cap", o.cap, "Solver state cap");
    add_output(bounds, o);
    bounds->callback([&] { action = [&] { return cmd_bounds(o); }; });

    auto* mad = app.add_subcommand("mad-check", "Clique-or-mad dichotomy at level wd");
    add_graph(mad, o);
    mad->add_option("--d", o.d, "Level to check instead of the exact wd");
    mad->add_option("--cap", o.cap, "Solver state cap");
    add_output(mad, o);
    mad->callback([&] { action = [&] { return cmd_mad_check(o); }; });

    auto* minimal = app.add_subcommand("minimal", "Minimality and structure of a graph of given wd");
    add_graph(minimal, o);
    minimal->add_option("--cap", o.cap, "Solver state cap");
    add_output(minimal, o);
    minimal->callback([&] { action = [&] { return cmd_minimal(o); }; });

    auto* embed = app.add_subcommand("embed", "Embed a graph into a regular supergraph");
    embed->require_subcommand(1);
    for (const std::string which : {"chrom", "girth"}) {
        auto* sub = embed->add_subcommand(which, which == "chrom" ? "Keeps a proper k-coloring"
                                                                 : "Keeps girth >= --girth");
        add_graph(sub, o);
        sub->add_option("--d", o.d, "Target degree")->required();
        if (which == "chrom")
            sub->add_option("--k", o.k, "Colors")->required();
        else
            sub->add_option("--girth", o.girth, "Girth target");
        add_output(sub, o);
        add_witness(sub, o);
        sub->callback([&o, &action, which] { action = [&o, which] { return cmd_embed(o, which); }; });
    }

    auto* sweep = app.add_subcommand("catalog-sweep", "Run checks over all graphs up to a given order");
    sweep->add_option("--n", o.max_n, "Largest order");
    sweep->add_option("--check", o.check, "solver, gdp, mad or all")
        ->check(CLI::IsMember({"solver", "gdp", "mad", "all"}));
    sweep->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
    sweep->add_option("--cap", o.cap, "Solver state cap");
    add_output(sweep, o);
    sweep->callback([&] { action = [&] { return cmd_catalog_sweep(o); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }
    return guarded(action);
}

} // namespace wdeg::cli

int main(int argc, char** argv)
{
    return wdeg::cli::run(argc, argv);
}
