#include "wdeg/certificate.hpp"
#include "wdeg/errors.hpp"

#include <json.hpp>

namespace wdeg {

using nlohmann::json;

std::string to_string(const Operation& op)
{
    if (op.is_save())
        return "DelSave(" + std::to_string(op.u) + ", " + std::to_string(op.w) + ")";
    return "Delete(" + std::to_string(op.u) + ")";
}

bool Certificate::delete_only() const
{
    for (const auto& op : ops)
        if (op.is_save())
            return false;
    return true;
}

ReplayState initial_state(const Graph& g, const WeightFn& f)
{
    if (static_cast<int>(f.size()) != g.order())
        throw StructuralError("weight function has " + std::to_string(f.size()) +
                              " entries for a graph on " + std::to_string(g.order()) + " vertices");
    return {VertexSet::full(g.order()), f};
}

ApplyResult apply_operation(const Graph& g, ReplayState& st, const Operation& op)
{
    if (op.u < 0 || op.u >= g.order() || !st.present.contains(op.u))
        throw StructuralError("removed vertex " + std::to_string(op.u) + " is not present");
    if (op.is_save()) {
        if (op.w < 0 || op.w >= g.order() || !st.present.contains(op.w) || !g.adjacent(op.u, op.w))
            throw StructuralError("save target " + std::to_string(op.w) +
                                  " is not a present neighbor of " + std::to_string(op.u));
        if (st.f[op.u] <= st.f[op.w])
            return {false, "f(" + std::to_string(op.u) + ") = " + std::to_string(st.f[op.u]) +
                               " does not exceed f(" + std::to_string(op.w) +
                               ") = " + std::to_string(st.f[op.w])};
    }
    for (int v : g.neighbors(op.u)) {
        if (!st.present.contains(v) || (op.is_save() && v == op.w))
            continue;
        if (st.f[v] - 1 < 0)
            return {false, "f(" + std::to_string(v) + ") would become negative"};
    }
    for (int v : g.neighbors(op.u))
        if (st.present.contains(v) && !(op.is_save() && v == op.w))
            --st.f[v];
    st.present.erase(op.u);
    return {};
}

void check_covers(const Graph& g, const Certificate& cert)
{
    const int n = g.order();
    if (cert.order() != n)
        throw StructuralError("certificate is for " + std::to_string(cert.order()) +
                              " vertices, graph has " + std::to_string(n));
    if (static_cast<int>(cert.ops.size()) != n)
        throw StructuralError("certificate has " + std::to_string(cert.ops.size()) +
                              " operations for " + std::to_string(n) + " vertices");
    std::vector<char> seen(n, 0);
    for (const auto& op : cert.ops) {
        if (op.u < 0 || op.u >= n)
            throw StructuralError("operation removes out-of-range vertex " + std::to_string(op.u));
        if (seen[op.u])
            throw StructuralError("vertex " + std::to_string(op.u) + " removed twice");
        seen[op.u] = 1;
        if (op.is_save() && (op.w < 0 || op.w >= n))
            throw StructuralError("save target out of range in " + to_string(op));
    }
    if (cert.safe_set && cert.safe_set->universe() != n)
        throw StructuralError("safe set universe does not match the graph");
}

VerifyReport verify_certificate(const Graph& g, const Certificate& cert)
{
    check_covers(g, cert);
    for (int v = 0; v < g.order(); ++v)
        if (cert.initial_f[v] < 0)
            return {false, -1, "initial weight of vertex " + std::to_string(v) + " is negative"};
    ReplayState st = initial_state(g, cert.initial_f);
    for (std::size_t i = 0; i < cert.ops.size(); ++i) {
        const auto& op = cert.ops[i];
        const int idx = static_cast<int>(i);
        if (op.is_save() && cert.safe_set && cert.safe_set->contains(op.u))
            return {false, idx, "safe vertex " + std::to_string(op.u) + " removed by DelSave"};
        if (op.is_save() && (!st.present.contains(op.w) || !g.adjacent(op.u, op.w)))
            return {false, idx, "save target of " + to_string(op) + " is not a present neighbor"};
        auto r = apply_operation(g, st, op);
        if (!r.legal)
            return {false, idx, to_string(op) + " is illegal: " + r.reason};
    }
    return {};
}

WeightFn constant_f(int n, int value)
{
    return WeightFn(n, value);
}

WeightFn degree_f(const Graph& g, int delta)
{
    WeightFn f(g.order());
    for (int v = 0; v < g.order(); ++v)
        f[v] = g.degree(v) + delta;
    return f;
}

std::string dump_certificate(const Certificate& cert)
{
    json j;
    j["version"] = 1;
    j["n"] = cert.order();
    j["initial_f"] = cert.initial_f;
    json ops = json::array();
    for (const auto& op : cert.ops) {
        json o;
        o["kind"] = op.is_save() ? "delsave" : "delete";
        o["u"] = op.u;
        if (op.is_save())
            o["w"] = op.w;
        ops.push_back(std::move(o));
    }
    j["ops"] = std::move(ops);
    if (cert.safe_set)
        j["safe_set"] = cert.safe_set->members();
    return j.dump(2) + "\n";
}

Certificate parse_certificate(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("certificate is not valid JSON: ") + e.what(), 0);
    }
    try {
        if (j.at("version").get<int>() != 1)
            throw ParseError("unsupported certificate version", 0);
        Certificate c;
        const int n = j.at("n").get<int>();
        c.initial_f = j.at("initial_f").get<std::vector<int>>();
        if (static_cast<int>(c.initial_f.size()) != n)
            throw ParseError("initial_f length differs from n", 0);
        for (const auto& o : j.at("ops")) {
            const auto kind = o.at("kind").get<std::string>();
            if (kind == "delete")
                c.ops.push_back(Operation::remove(o.at("u").get<int>()));
            else if (kind == "delsave")
                c.ops.push_back(Operation::save(o.at("u").get<int>(), o.at("w").get<int>()));
            else
                throw ParseError("unknown operation kind '" + kind + "'", 0);
        }
        if (j.contains("safe_set")) {
            VertexSet s(n);
            for (int v : j.at("safe_set").get<std::vector<int>>()) {
                if (v < 0 || v >= n)
                    throw ParseError("safe_set vertex out of range", 0);
                s.insert(v);
            }
            c.safe_set = s;
        }
        return c;
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed certificate: ") + e.what(), 0);
    }
}

} // namespace wdeg
