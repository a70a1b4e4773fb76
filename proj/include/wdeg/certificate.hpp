/**
 * @file certificate.hpp
 * @brief Delete / DelSave semantics, removal certificates and their verifier.
 */
#ifndef WDEG_CERTIFICATE_HPP
#define WDEG_CERTIFICATE_HPP

#include "wdeg/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wdeg {

/// Integer charge per vertex, indexed by vertex id.
using WeightFn = std::vector<int>;

struct Operation {
    enum class Kind { Delete, DelSave };
    Kind kind = Kind::Delete;
    Vertex u = -1;
    Vertex w = -1; ///< saved neighbor, DelSave only

    static Operation remove(Vertex u) { return {Kind::Delete, u, -1}; }
    static Operation save(Vertex u, Vertex w) { return {Kind::DelSave, u, w}; }
    bool is_save() const { return kind == Kind::DelSave; }
    bool operator==(const Operation&) const = default;
};

std::string to_string(const Operation& op);

struct Certificate {
    WeightFn initial_f;
    std::vector<Operation> ops;
    std::optional<VertexSet> safe_set;

    int order() const { return static_cast<int>(initial_f.size()); }
    bool delete_only() const;
    bool operator==(const Certificate&) const = default;
};

/// The graph G - (removed vertices) together with the current weights. Weights
/// of removed vertices are kept but meaningless.
struct ReplayState {
    VertexSet present;
    WeightFn f;
};

ReplayState initial_state(const Graph& g, const WeightFn& f);

struct ApplyResult {
    bool legal = true;
    std::string reason;
};

/// Applies `op` to `st` in place when legal; leaves `st` untouched otherwise.
/// Throws StructuralError if the removed vertex is absent or the save target
/// is not a present neighbor.
ApplyResult apply_operation(const Graph& g, ReplayState& st, const Operation& op);

struct VerifyReport {
    bool ok = true;
    /// Index of the first failing op; -1 when the initial weights are invalid.
    int failed_index = -1;
    std::string reason;
};

/// Throws StructuralError when the certificate does not fit the graph
/// (wrong size, a vertex removed twice or never, out-of-range ids).
VerifyReport verify_certificate(const Graph& g, const Certificate& cert);

/// Structural check only; throws StructuralError with the first mismatch.
void check_covers(const Graph& g, const Certificate& cert);

/// Constant weight function.
WeightFn constant_f(int n, int value);
/// f(u) = deg(u) + delta.
WeightFn degree_f(const Graph& g, int delta);

/// JSON document {version, n, initial_f, ops, safe_set?}; deterministic, so
/// parse followed by dump reproduces the input after normalization.
std::string dump_certificate(const Certificate& cert);
/// Throws ParseError on malformed documents.
Certificate parse_certificate(const std::string& text);

} // namespace wdeg

#endif
