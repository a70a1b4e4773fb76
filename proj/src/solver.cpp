#include "wdeg/solver.hpp"
#include "wdeg/errors.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <future>
#include <mutex>
#include <unordered_set>

namespace wdeg {

namespace {

using Mask = std::uint64_t;

struct Move {
    int u;
    int w; // -1 for Delete
};

class Search
{
public:
    Search(const Graph& g, const WeightFn& f, const std::optional<VertexSet>& safe,
           const SolverOptions& opt)
        : n_(g.order()), adj_(n_, 0), safe_(0), opt_(opt)
    {
        for (int u = 0; u < n_; ++u)
            for (int v : g.neighbors(u))
                adj_[u] |= Mask{1} << v;
        if (safe)
            for (int v : safe->members())
                safe_ |= Mask{1} << v;
        f0_.assign(f.begin(), f.end());
    }

    Mask full() const { return n_ == 64 ? ~Mask{0} : ((Mask{1} << n_) - 1); }
    const std::vector<int>& f0() const { return f0_; }

    /// Peels every vertex whose charge covers its remaining degree; such a
    /// vertex can always be removed last by Delete, so dropping it yields an
    /// equivalent instance. Returns the peeled vertices in peeling order.
    std::vector<int> peel(Mask& present, const std::vector<int>& f) const
    {
        std::vector<int> peeled;
        bool changed = true;
        while (changed) {
            changed = false;
            for (Mask m = present; m; m &= m - 1) {
                int v = std::countr_zero(m);
                if (f[v] >= std::popcount(adj_[v] & present)) {
                    present &= ~(Mask{1} << v);
                    peeled.push_back(v);
                    changed = true;
                }
            }
        }
        return peeled;
    }

    std::string key(Mask present, const std::vector<int>& f) const
    {
        std::string k(sizeof(Mask), '\0');
        for (std::size_t i = 0; i < sizeof(Mask); ++i)
            k[i] = static_cast<char>((present >> (8 * i)) & 0xFF);
        for (Mask m = present; m; m &= m - 1) {
            int v = std::countr_zero(m);
            int c = std::min(f[v], std::popcount(adj_[v] & present));
            k.push_back(static_cast<char>(c));
        }
        return k;
    }

    /// Legal moves at a peeled state, in branch order: vertices by (weight, id),
    /// for each vertex its saves by target id, then its Delete.
    std::vector<Move> moves(Mask present, const std::vector<int>& f) const
    {
        std::vector<int> vs;
        for (Mask m = present; m; m &= m - 1)
            vs.push_back(std::countr_zero(m));
        std::stable_sort(vs.begin(), vs.end(), [&](int a, int b) { return f[a] < f[b]; });
        std::vector<Move> out;
        for (int u : vs) {
            Mask nb = adj_[u] & present;
            Mask zero = 0;
            for (Mask m = nb; m; m &= m - 1) {
                int v = std::countr_zero(m);
                if (f[v] == 0)
                    zero |= Mask{1} << v;
            }
            if (!(safe_ >> u & 1)) {
                for (Mask m = nb; m; m &= m - 1) {
                    int w = std::countr_zero(m);
                    if (f[u] > f[w] && (zero & ~(Mask{1} << w)) == 0)
                        out.push_back({u, w});
                }
            }
            if (zero == 0)
                out.push_back({u, -1});
        }
        return out;
    }

    void apply(Mask& present, std::vector<int>& f, Move mv) const
    {
        present &= ~(Mask{1} << mv.u);
        for (Mask m = adj_[mv.u] & present; m; m &= m - 1) {
            int v = std::countr_zero(m);
            if (v != mv.w)
                --f[v];
        }
    }

    /// Forward op sequence removing all of `present`, or nullopt.
    std::optional<std::vector<Operation>> solve(Mask present, std::vector<int>& f)
    {
        auto peeled = peel(present, f);
        std::optional<std::vector<Operation>> res;
        if (present == 0) {
            res.emplace();
        } else {
            auto k = key(present, f);
            if (known_failure(k))
                return std::nullopt;
            count_state();
            for (Move mv : moves(present, f)) {
                Mask p2 = present;
                auto f2 = f;
                apply(p2, f2, mv);
                if (auto sub = solve(p2, f2)) {
                    res.emplace();
                    res->push_back(mv.w < 0 ? Operation::remove(mv.u) : Operation::save(mv.u, mv.w));
                    res->insert(res->end(), sub->begin(), sub->end());
                    break;
                }
            }
            if (!res) {
                record_failure(std::move(k));
                return std::nullopt;
            }
        }
        for (auto it = peeled.rbegin(); it != peeled.rend(); ++it)
            res->push_back(Operation::remove(*it));
        return res;
    }

    void enable_sharing() { shared_ = true; }
    SolverStats stats() const { return {states_.load(), hits_.load()}; }

private:
    bool known_failure(const std::string& k)
    {
        bool hit;
        if (shared_) {
            std::lock_guard lock(mu_);
            hit = failed_.count(k) > 0;
        } else {
            hit = failed_.count(k) > 0;
        }
        if (hit)
            ++hits_;
        return hit;
    }

    void record_failure(std::string k)
    {
        if (shared_) {
            std::lock_guard lock(mu_);
            failed_.insert(std::move(k));
        } else {
            failed_.insert(std::move(k));
        }
    }

    void count_state()
    {
        if (++states_ > opt_.max_states)
            throw ResourceError("exact search exceeded " + std::to_string(opt_.max_states) +
                                " states");
    }

    int n_;
    std::vector<Mask> adj_;
    Mask safe_;
    std::vector<int> f0_;
    SolverOptions opt_;
    bool shared_ = false;
    std::mutex mu_;
    std::unordered_set<std::string> failed_;
    std::atomic<std::int64_t> states_{0};
    std::atomic<std::int64_t> hits_{0};
};

} // namespace

std::optional<Certificate> is_weakly_f_degenerate(const Graph& g, const WeightFn& f,
                                                  const std::optional<VertexSet>& safe_set,
                                                  const SolverOptions& opt, SolverStats* stats)
{
    const int n = g.order();
    if (static_cast<int>(f.size()) != n)
        throw StructuralError("weight function size does not match the graph");
    if (safe_set && safe_set->universe() != n)
        throw StructuralError("safe set universe does not match the graph");
    for (int x : f)
        if (x < 0)
            throw PreconditionError("initial weights must be non-negative");
    if (n > opt.max_vertices || n > 64)
        throw ResourceError("exact search limited to " + std::to_string(std::min(opt.max_vertices, 64)) +
                            " vertices, graph has " + std::to_string(n));

    Search s(g, f, safe_set, opt);
    std::optional<std::vector<Operation>> ops;
    if (!opt.parallel) {
        auto fw = f;
        ops = s.solve(s.full(), fw);
    } else {
        Mask present = s.full();
        auto fw = f;
        auto peeled = s.peel(present, fw);
        if (present == 0) {
            ops.emplace();
        } else {
            s.enable_sharing();
            auto mv = s.moves(present, fw);
            std::vector<std::future<std::optional<std::vector<Operation>>>> futs;
            for (Move m : mv) {
                futs.push_back(std::async(std::launch::async, [&s, present, fw, m]() mutable {
                    s.apply(present, fw, m);
                    auto sub = s.solve(present, fw);
                    if (sub)
                        sub->insert(sub->begin(), m.w < 0 ? Operation::remove(m.u)
                                                          : Operation::save(m.u, m.w));
                    return sub;
                }));
            }
            std::exception_ptr err;
            for (auto& fu : futs) {
                try {
                    auto r = fu.get();
                    if (r && !ops)
                        ops = std::move(r);
                } catch (...) {
                    if (!err)
                        err = std::current_exception();
                }
            }
            if (!ops && err)
                std::rethrow_exception(err);
        }
        if (ops)
            for (auto it = peeled.rbegin(); it != peeled.rend(); ++it)
                ops->push_back(Operation::remove(*it));
    }
    if (stats)
        *stats = s.stats();
    if (!ops)
        return std::nullopt;
    Certificate c{f, std::move(*ops), safe_set};
    auto rep = verify_certificate(g, c);
    WDEG_ENSURE(rep.ok, "solver produced an invalid certificate: " + rep.reason);
    return c;
}

WeakDegeneracy weak_degeneracy_exact(const Graph& g, const SolverOptions& opt)
{
    const int n = g.order();
    if (n > opt.max_vertices)
        throw ResourceError("exact search limited to " + std::to_string(opt.max_vertices) +
                            " vertices, graph has " + std::to_string(n));
    auto deg = degeneracy(g);
    for (int d = 0; d < deg.value; ++d)
        if (auto c = is_weakly_f_degenerate(g, constant_f(n, d), {}, opt))
            return {d, std::move(*c)};
    // reversed peeling order is a Delete-only witness at d = degeneracy
    Certificate c{constant_f(n, deg.value), {}, {}};
    for (auto it = deg.order.rbegin(); it != deg.order.rend(); ++it)
        c.ops.push_back(Operation::remove(*it));
    auto rep = verify_certificate(g, c);
    WDEG_ENSURE(rep.ok, "degeneracy order is not a valid certificate: " + rep.reason);
    return {deg.value, std::move(c)};
}

} // namespace wdeg
