#include "wdeg/planar.hpp"
#include "wdeg/errors.hpp"
#include "wdeg/weak_degeneracy.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <sstream>

namespace wdeg {

namespace {

// failed peels tolerated before the recursion gives up
constexpr long kRetryBudget = 2000;
// outer faces tried per component before giving up
constexpr int kOuterAttempts = 64;

// position of each neighbor inside rot[v]
class RotationIndex
{
public:
    explicit RotationIndex(const RotationSystem& r) : rot_(r.rot), pos_(r.rot.size())
    {
        for (std::size_t v = 0; v < rot_.size(); ++v) {
            for (std::size_t i = 0; i < rot_[v].size(); ++i)
                pos_[v].emplace_back(rot_[v][i], static_cast<int>(i));
            std::sort(pos_[v].begin(), pos_[v].end());
        }
    }

    int position(int v, int x) const
    {
        const auto& p = pos_[v];
        auto it = std::lower_bound(p.begin(), p.end(), std::pair<int, int>{x, -1});
        if (it == p.end() || it->first != x)
            throw StructuralError("vertex " + std::to_string(x) + " missing from the rotation of " +
                                  std::to_string(v));
        return it->second;
    }

    int succ(int v, int x) const
    {
        const auto& r = rot_[v];
        return r[(position(v, x) + 1) % r.size()];
    }

private:
    const std::vector<std::vector<Vertex>>& rot_;
    std::vector<std::vector<std::pair<int, int>>> pos_;
};

bool is_simple(const std::vector<Vertex>& walk)
{
    auto s = walk;
    std::sort(s.begin(), s.end());
    return std::adjacent_find(s.begin(), s.end()) == s.end();
}

Edge key(int a, int b)
{
    return {std::min(a, b), std::max(a, b)};
}

// Surrounds the boundary walk with a new cycle x_0..x_{L-1} (ids from
// next_id). Produces the triangles between walk and ring; returns the ring.
std::vector<Vertex> ring_insert(const std::vector<Vertex>& walk, int& next_id,
                                std::vector<std::vector<Vertex>>& faces, std::set<Edge>& edges)
{
    const int len = static_cast<int>(walk.size());
    std::vector<Vertex> ring(len);
    for (int i = 0; i < len; ++i)
        ring[i] = next_id++;
    for (int i = 0; i < len; ++i) {
        int w0 = walk[i], w1 = walk[(i + 1) % len];
        int x0 = ring[i], x1 = ring[(i + 1) % len];
        faces.push_back({w0, w1, x0});
        faces.push_back({x0, w1, x1});
        edges.insert(key(x0, w0));
        edges.insert(key(x0, w1));
        edges.insert(key(x0, x1));
    }
    return ring;
}

void fan(const std::vector<Vertex>& face, std::vector<std::vector<Vertex>>& faces,
         std::set<Edge>& edges)
{
    for (std::size_t i = 1; i + 1 < face.size(); ++i) {
        faces.push_back({face[0], face[i], face[i + 1]});
        if (i >= 2)
            edges.insert(key(face[0], face[i]));
    }
}

Graph graph_from_edges(int n, const std::set<Edge>& edges)
{
    std::vector<Edge> es(edges.begin(), edges.end());
    return Graph(n, es);
}

} // namespace

std::vector<std::vector<Vertex>> trace_faces(const RotationSystem& rs)
{
    const int n = static_cast<int>(rs.rot.size());
    RotationIndex idx(rs);
    std::vector<std::vector<char>> seen(n);
    for (int v = 0; v < n; ++v)
        seen[v].assign(rs.rot[v].size(), 0);
    std::vector<std::vector<Vertex>> faces;
    for (int u = 0; u < n; ++u) {
        for (std::size_t i = 0; i < rs.rot[u].size(); ++i) {
            if (seen[u][i])
                continue;
            std::vector<Vertex> face;
            int a = u, b = rs.rot[u][i];
            while (true) {
                int pa = idx.position(a, b);
                if (seen[a][pa])
                    break;
                seen[a][pa] = 1;
                face.push_back(a);
                int c = idx.succ(b, a);
                a = b;
                b = c;
            }
            faces.push_back(std::move(face));
        }
    }
    return faces;
}

int find_face(const std::vector<std::vector<Vertex>>& faces, const std::vector<Vertex>& cycle)
{
    const std::size_t k = cycle.size();
    if (k == 0)
        return -1;
    for (std::size_t f = 0; f < faces.size(); ++f) {
        const auto& fc = faces[f];
        if (fc.size() != k)
            continue;
        for (std::size_t s = 0; s < k; ++s) {
            if (fc[s] != cycle[0])
                continue;
            bool fwd = true, bwd = true;
            for (std::size_t i = 0; i < k; ++i) {
                fwd = fwd && fc[(s + i) % k] == cycle[i];
                bwd = bwd && fc[(s + k - i) % k] == cycle[i];
            }
            if (fwd || bwd)
                return static_cast<int>(f);
        }
    }
    return -1;
}

EmbeddingReport validate_embedding(const Graph& g, const RotationSystem& rs)
{
    const int n = g.order();
    if (static_cast<int>(rs.rot.size()) != n)
        return {false, 0, "rotation has " + std::to_string(rs.rot.size()) + " vertices, graph has " +
                              std::to_string(n)};
    for (int v = 0; v < n; ++v) {
        auto r = rs.rot[v];
        std::sort(r.begin(), r.end());
        if (r != g.neighbors(v))
            return {false, 0, "rotation at vertex " + std::to_string(v) +
                                  " is not a cyclic order of its neighbors"};
    }
    auto faces = trace_faces(rs);
    auto comps = connected_components(g);
    std::vector<int> comp_of(n, -1);
    for (std::size_t c = 0; c < comps.size(); ++c)
        for (int v : comps[c].members())
            comp_of[v] = static_cast<int>(c);
    std::vector<long long> nv(comps.size(), 0), ne(comps.size(), 0), nf(comps.size(), 0);
    for (int v = 0; v < n; ++v) {
        ++nv[comp_of[v]];
        ne[comp_of[v]] += g.degree(v);
        if (g.degree(v) == 0)
            ++nf[comp_of[v]];
    }
    for (const auto& f : faces)
        ++nf[comp_of[f[0]]];
    int total = 0;
    for (std::size_t c = 0; c < comps.size(); ++c) {
        long long chi = nv[c] - ne[c] / 2 + nf[c];
        if (chi != 2)
            return {false, 0, "Euler characteristic " + std::to_string(chi) +
                                  " on the component of vertex " +
                                  std::to_string(comps[c].members().front()) +
                                  "; the rotation is not planar"};
        total += static_cast<int>(nf[c]);
    }
    if (!rs.outer.empty() && find_face(faces, rs.outer) < 0)
        return {false, total, "designated outer face is not a face of the embedding"};
    return {true, total, {}};
}

RotationSystem rotation_from_faces(int n, const std::vector<std::vector<Vertex>>& faces)
{
    // succ_b(a) = c for consecutive darts a->b->c of a face
    std::vector<std::map<int, int>> succ(n);
    for (const auto& f : faces) {
        const std::size_t k = f.size();
        for (std::size_t i = 0; i < k; ++i) {
            int a = f[i], b = f[(i + 1) % k], c = f[(i + 2) % k];
            if (a < 0 || b < 0 || c < 0 || a >= n || b >= n || c >= n)
                throw StructuralError("face vertex out of range");
            if (!succ[b].emplace(a, c).second)
                throw StructuralError("dart " + std::to_string(a) + "->" + std::to_string(b) +
                                      " appears in two faces");
        }
    }
    RotationSystem rs;
    rs.rot.resize(n);
    for (int v = 0; v < n; ++v) {
        if (succ[v].empty())
            continue;
        int start = succ[v].begin()->first;
        int x = start;
        do {
            rs.rot[v].push_back(x);
            auto it = succ[v].find(x);
            if (it == succ[v].end())
                throw StructuralError("faces do not close up around vertex " + std::to_string(v));
            x = it->second;
        } while (x != start && rs.rot[v].size() <= succ[v].size());
        if (rs.rot[v].size() != succ[v].size())
            throw StructuralError("faces around vertex " + std::to_string(v) +
                                  " do not form a single cycle");
    }
    return rs;
}

Triangulation triangulate(const PlanarInstance& inst)
{
    const Graph& g = inst.graph;
    auto rep = validate_embedding(g, inst.rotation);
    if (!rep.ok)
        throw PreconditionError("invalid embedding: " + rep.violation);
    auto faces = trace_faces(inst.rotation);
    int outer = find_face(faces, inst.rotation.outer);
    if (outer < 0 || !is_simple(faces[outer]) || faces[outer].size() < 3)
        throw PreconditionError("outer face must be a designated simple cycle");

    std::set<Edge> edges;
    for (auto e : g.edges())
        edges.insert(e);
    const int n = g.order();
    int next_id = n;
    std::vector<std::vector<Vertex>> out;
    for (std::size_t fi = 0; fi < faces.size(); ++fi) {
        const auto& f = faces[fi];
        if (static_cast<int>(fi) == outer || f.size() == 3) {
            out.push_back(f);
            continue;
        }
        if (!is_simple(f)) {
            auto ring = ring_insert(f, next_id, out, edges);
            fan(ring, out, edges);
            continue;
        }
        auto low = std::min_element(f.begin(), f.end()) - f.begin();
        std::vector<Vertex> rf;
        for (std::size_t i = 0; i < f.size(); ++i)
            rf.push_back(f[(low + i) % f.size()]);
        bool clash = false;
        for (std::size_t i = 2; i + 1 < rf.size(); ++i)
            clash = clash || edges.count(key(rf[0], rf[i]));
        if (!clash) {
            fan(rf, out, edges);
            continue;
        }
        int s = next_id++;
        for (std::size_t i = 0; i < f.size(); ++i) {
            out.push_back({f[i], f[(i + 1) % f.size()], s});
            edges.insert(key(s, f[i]));
        }
    }

    Triangulation t;
    t.original_order = n;
    for (auto e : edges)
        if (e.second < n && !g.adjacent(e.first, e.second))
            t.added_edges.push_back(e);
    t.instance.graph = graph_from_edges(next_id, edges);
    t.instance.rotation = rotation_from_faces(next_id, out);
    t.instance.rotation.outer = inst.rotation.outer;
    auto check = validate_embedding(t.instance.graph, t.instance.rotation);
    WDEG_ENSURE(check.ok, "triangulation broke the embedding: " + check.violation);
    return t;
}

namespace {

// Runs the two-case recursion while replaying every removal on the live
// charges, so a failing step is caught where it happens. Inner path vertices
// of a peeled outer vertex save it whenever their charge allows. A peel that
// drives some charge negative is undone and retried from the other end of
// the edge v1v2; the weights are symmetric in v1 and v2, so either end is a
// valid instance of the same induction.
// Runs the two-case recursion while replaying every removal on the live
// charges, so a failing step is caught where it happens. When the outer
// cycle has no chord, an end vertex vk of the path C - v1v2 is peeled in one
// of three ways: removed last after its inner neighbours have saved it
// wherever their charge allows, removed first while saving its cycle
// neighbour, or removed first with a plain Delete. Either end of v1v2 may be
// peeled since the weights are symmetric in v1 and v2. A choice that drives
// some charge negative is undone and the next one is tried.
class SafeRecursion
{
public:
    // Vertices in `safe` are only ever removed by Delete.
    SafeRecursion(const Graph& g, const RotationSystem& rs, WeightFn start, const VertexSet& alive,
                  const VertexSet& safe, long budget)
        : g_(g), rs_(rs), safe_(safe), pos_(g.order(), -1), cur_(std::move(start)),
          alive_(g.order(), 0), target_(g.order(), -1), budget_(budget)
    {
        for (int v : alive.members())
            alive_[v] = 1;
    }

    bool run(const VertexSet& s, const std::vector<Vertex>& c)
    {
        const int k = static_cast<int>(c.size());
        const int size = s.count();
        WDEG_ENSURE(k >= 3 && size >= k, "outer cycle too short");
        if (size == 3)
            return emit(c[2], target_[c[2]]);

        for (int i = 0; i < k; ++i)
            pos_[c[i]] = i;
        // chord v_a v_b minimizing (a, b)
        int ca = -1, cb = -1;
        for (int a = 0; a < k && ca < 0; ++a) {
            for (int x : g_.neighbors(c[a])) {
                int b = pos_[x];
                if (b < 0 || !s.contains(x) || b <= a + 1 || (a == 0 && b == k - 1))
                    continue;
                if (ca < 0 || b < cb) {
                    ca = a;
                    cb = b;
                }
            }
        }
        clear_positions(c);
        if (ca >= 0)
            return split_on_chord(s, c, ca, cb);

        std::vector<Vertex> rev{c[1], c[0]};
        for (int i = k - 1; i >= 2; --i)
            rev.push_back(c[i]);
        const std::size_t trail = trail_.size(), nops = ops_.size();
        for (const auto* cc : std::array<const std::vector<Vertex>*, 2>{&c, &rev}) {
            for (Peel how : {Peel::last, Peel::first_saving, Peel::first}) {
                if (peel(s, *cc, how))
                    return true;
                undo(trail, nops);
                if (--budget_ < 0)
                    return false;
            }
        }
        return false;
    }

    const std::vector<Operation>& ops() const { return ops_; }
    bool exhausted() const { return budget_ < 0; }

private:
    enum class Peel { last, first_saving, first };

    void clear_positions(const std::vector<Vertex>& c)
    {
        for (int v : c)
            pos_[v] = -1;
    }

    void set(std::vector<int>& a, int v, int x)
    {
        trail_.push_back({&a, v, a[v]});
        a[v] = x;
    }

    void undo(std::size_t trail, std::size_t nops)
    {
        while (trail_.size() > trail) {
            auto [a, v, old] = trail_.back();
            (*a)[v] = old;
            trail_.pop_back();
        }
        ops_.resize(nops);
    }

    // Removes u, saving w when w is a live neighbour u outweighs; w = -1 or
    // an unusable w gives a Delete.
    bool emit(int u, int w)
    {
        if (w >= 0 && (!alive_[w] || cur_[u] <= cur_[w]))
            w = -1;
        // a neighbour already at zero blocks a Delete, so it must be the one saved
        int zero = -1, zeros = 0;
        for (int v : g_.neighbors(u))
            if (alive_[v] && cur_[v] < 1) {
                zero = v;
                ++zeros;
            }
        if (zeros == 1 && cur_[u] > 0)
            w = zero;
        if (safe_.contains(u))
            w = -1;
        for (int v : g_.neighbors(u))
            if (alive_[v] && v != w && cur_[v] < 1)
                return false;
        for (int v : g_.neighbors(u))
            if (alive_[v] && v != w)
                set(cur_, v, cur_[v] - 1);
        set(alive_, u, 0);
        ops_.push_back(w >= 0 ? Operation::save(u, w) : Operation::remove(u));
        return true;
    }

    bool split_on_chord(const VertexSet& s, const std::vector<Vertex>& c, int a, int b)
    {
        const int k = static_cast<int>(c.size());
        std::vector<Vertex> c1, c2;
        if (a == 0) {
            c1.assign(c.begin(), c.begin() + b + 1);
            c2 = {c[0]};
            for (int i = b; i < k; ++i)
                c2.push_back(c[i]);
        } else {
            c1.assign(c.begin(), c.begin() + a + 1);
            c1.insert(c1.end(), c.begin() + b, c.end());
            c2 = {c[a]};
            for (int i = b; i > a; --i)
                c2.push_back(c[i]);
        }
        const int n = g_.order();
        std::vector<char> side(n, 0);
        for (int v : c1)
            side[v] |= 1;
        for (int v : c2)
            side[v] |= 2;
        VertexSet s1 = VertexSet::from(n, c1), s2 = VertexSet::from(n, c2);
        // interior components go to the side holding their outer attachments
        std::vector<char> seen(n, 0);
        for (int v : s.members()) {
            if (side[v] || seen[v])
                continue;
            std::vector<int> comp{v}, st{v};
            seen[v] = 1;
            int attach = 0;
            while (!st.empty()) {
                int x = st.back();
                st.pop_back();
                for (int y : g_.neighbors(x)) {
                    if (!s.contains(y))
                        continue;
                    if (side[y] == 1 || side[y] == 2) {
                        attach |= side[y];
                    } else if (!side[y] && !seen[y]) {
                        seen[y] = 1;
                        comp.push_back(y);
                        st.push_back(y);
                    }
                }
            }
            WDEG_ENSURE(attach == 1 || attach == 2, "interior component not inside exactly one side");
            for (int x : comp)
                (attach == 1 ? s1 : s2).insert(x);
        }
        return run(s1, c1) && run(s2, c2);
    }

    bool peel(const VertexSet& s, const std::vector<Vertex>& c, Peel how)
    {
        const int k = static_cast<int>(c.size());
        const int vk = c[k - 1], v1 = c[0], vprev = c[k - 2];
        std::vector<int> around;
        for (int x : rs_.rot[vk])
            if (s.contains(x))
                around.push_back(x);
        const int m = static_cast<int>(around.size());
        int i1 = static_cast<int>(std::find(around.begin(), around.end(), v1) - around.begin());
        WDEG_ENSURE(i1 < m, "v1 is not a neighbor of vk");
        int dir = 1;
        if (m >= 3) {
            if (around[(i1 + 1) % m] == vprev)
                dir = -1;
            else
                WDEG_ENSURE(around[(i1 - 1 + m) % m] == vprev, "neighbors of vk do not form a path");
        }
        std::vector<int> path{v1};
        for (int i = (i1 + dir + m) % m; path.back() != vprev; i = (i + dir + m) % m) {
            WDEG_ENSURE(static_cast<int>(path.size()) <= m, "path around vk does not close");
            path.push_back(around[i]);
        }
        for (std::size_t i = 1; i < path.size(); ++i)
            WDEG_ENSURE(g_.adjacent(path[i - 1], path[i]), "neighbors of vk do not form a path");
        for (int v : c)
            pos_[v] = 1;
        for (std::size_t i = 1; i + 1 < path.size(); ++i)
            WDEG_ENSURE(pos_[path[i]] < 0, "inner path vertex lies on the outer cycle");
        clear_positions(c);

        std::vector<Vertex> c2(c.begin(), c.end() - 1);
        for (std::size_t i = path.size() - 2; i >= 1; --i)
            c2.push_back(path[i]);
        VertexSet s2 = s;
        s2.erase(vk);
        if (how == Peel::last) {
            for (std::size_t i = 1; i + 1 < path.size(); ++i)
                set(target_, path[i], vk);
            return run(s2, c2) && emit(vk, target_[vk]);
        }
        if (how == Peel::first_saving &&
            (safe_.contains(vk) || !alive_[vprev] || cur_[vk] <= cur_[vprev]))
            return false;
        return emit(vk, how == Peel::first_saving ? vprev : target_[vk]) && run(s2, c2);
    }

    struct Change {
        std::vector<int>* array;
        int index;
        int old;
    };

    const Graph& g_;
    const RotationSystem& rs_;
    VertexSet safe_;
    std::vector<int> pos_;
    std::vector<int> cur_;
    std::vector<int> alive_;
    std::vector<int> target_;
    std::vector<Operation> ops_;
    std::vector<Change> trail_;
    long budget_;
};

// Constant-4 certificate for a triangulated connected instance: Delete(v1),
// Delete(v2), then the lifted safe certificate. When the recursion gives up
// on the designated outer face, every other face in each of its rotations is
// tried as the outer face in turn; any face of a triangulation bounds a valid
// instance. Returns the graph actually certified (re-triangulation may add
// vertices) with its certificate.
std::pair<Graph, Certificate> certify_triangulated(const PlanarInstance& inst)
{
    std::vector<std::vector<Vertex>> candidates{inst.rotation.outer};
    for (const auto& face : trace_faces(inst.rotation)) {
        if (!is_simple(face) || face.size() < 3)
            continue;
        for (std::size_t r = 0; r < face.size(); ++r) {
            auto rotated = face;
            std::rotate(rotated.begin(), rotated.begin() + r, rotated.end());
            if (rotated != inst.rotation.outer)
                candidates.push_back(std::move(rotated));
        }
    }
    std::string last_error;
    int attempts = 0;
    for (const auto& outer : candidates) {
        if (++attempts > kOuterAttempts)
            break;
        PlanarInstance cand = inst;
        cand.rotation.outer = outer;
        const PlanarInstance t = triangulate(cand).instance;
        SafeCertificate safe;
        try {
            safe = safe_certificate(t);
        } catch (const InvariantError& e) {
            last_error = e.what();
            continue;
        }
        const int v1 = t.rotation.outer[0], v2 = t.rotation.outer[1];
        // weights after deleting v1 and v2 from the constant-4 start
        WeightFn after;
        for (int p : safe.subgraph.to_parent)
            after.push_back(4 - t.graph.adjacent(p, v1) - t.graph.adjacent(p, v2));
        auto lifted = monotone_lift(safe.subgraph.graph, safe.certificate, after);

        Certificate full{constant_f(t.graph.order(), 4), {}, {}};
        full.ops.push_back(Operation::remove(v1));
        full.ops.push_back(Operation::remove(v2));
        for (const auto& op : lifted.ops) {
            int u = safe.subgraph.to_parent[op.u];
            full.ops.push_back(op.is_save() ? Operation::save(u, safe.subgraph.to_parent[op.w])
                                            : Operation::remove(u));
        }
        auto check = verify_certificate(t.graph, full);
        WDEG_ENSURE(check.ok, "certificate on the triangulation failed: " + check.reason);
        return {t.graph, std::move(full)};
    }
    throw InvariantError("no outer face gave a certificate; last failure: " + last_error);
}

} // namespace

SafeCertificate safe_certificate(const PlanarInstance& inst)
{
    const Graph& g = inst.graph;
    const auto& rs = inst.rotation;
    auto rep = validate_embedding(g, rs);
    if (!rep.ok)
        throw PreconditionError("invalid embedding: " + rep.violation);
    const auto& c = rs.outer;
    auto faces = trace_faces(rs);
    int outer = find_face(faces, c);
    if (outer < 0 || c.size() < 3 || !is_simple(c))
        throw PreconditionError("outer face must be a designated simple cycle");
    for (std::size_t f = 0; f < faces.size(); ++f)
        if (static_cast<int>(f) != outer && faces[f].size() != 3)
            throw PreconditionError("every inner face must be a triangle");
    if (!is_connected(g))
        throw PreconditionError("instance must be connected");

    const int n = g.order();
    const int v1 = c[0], v2 = c[1];
    std::vector<char> on_cycle(n, 0);
    for (int v : c)
        on_cycle[v] = 1;
    WeightFn start(n, 0);
    for (int v = 0; v < n; ++v)
        if (v != v1 && v != v2)
            start[v] = (on_cycle[v] ? 2 : 4) - g.adjacent(v, v1) - g.adjacent(v, v2);

    VertexSet keep = VertexSet::full(n);
    keep.erase(v1);
    keep.erase(v2);
    SafeRecursion rec(g, rs, start, keep, VertexSet::from(n, c), kRetryBudget);
    if (!rec.run(VertexSet::full(n), c))
        throw InvariantError(rec.exhausted()
                                 ? "planar recursion exhausted its retry budget"
                                 : "planar recursion drove a charge negative from both ends of v1v2");

    SafeCertificate out;
    out.subgraph = induced_subgraph(g, keep);
    const auto& sub = out.subgraph;
    Certificate& cert = out.certificate;
    VertexSet safe(sub.graph.order());
    for (int i = 0; i < sub.graph.order(); ++i) {
        int p = sub.to_parent[i];
        cert.initial_f.push_back(start[p]);
        if (on_cycle[p])
            safe.insert(i);
    }
    cert.safe_set = safe;
    for (const auto& op : rec.ops()) {
        int u = sub.from_parent[op.u];
        cert.ops.push_back(op.is_save() ? Operation::save(u, sub.from_parent[op.w])
                                        : Operation::remove(u));
    }
    auto check = verify_certificate(sub.graph, cert);
    WDEG_ENSURE(check.ok, "planar recursion produced an invalid certificate: " + check.reason);
    return out;
}

Certificate weakly4_certificate(const Graph& g, const RotationSystem& rot)
{
    auto rep = validate_embedding(g, rot);
    if (!rep.ok)
        throw PreconditionError("invalid embedding: " + rep.violation);
    const int n = g.order();
    Certificate result{constant_f(n, 4), {}, {}};

    for (const auto& comp : connected_components(g)) {
        auto sub = induced_subgraph(g, comp);
        const int k = sub.graph.order();
        if (k <= 4) {
            for (int p : sub.to_parent)
                result.ops.push_back(Operation::remove(p));
            continue;
        }
        PlanarInstance local;
        local.graph = sub.graph;
        local.rotation.rot.resize(k);
        for (int i = 0; i < k; ++i)
            for (int x : rot.rot[sub.to_parent[i]])
                local.rotation.rot[i].push_back(sub.from_parent[x]);

        auto faces = trace_faces(local.rotation);
        int outer = -1;
        if (!rot.outer.empty() && comp.contains(rot.outer[0])) {
            std::vector<Vertex> mapped;
            for (int v : rot.outer)
                mapped.push_back(sub.from_parent[v]);
            int f = find_face(faces, mapped);
            if (f >= 0 && is_simple(faces[f]) && faces[f].size() >= 3)
                outer = f;
        }
        for (std::size_t f = 0; f < faces.size() && outer < 0; ++f)
            if (is_simple(faces[f]) && faces[f].size() >= 3)
                outer = static_cast<int>(f);

        if (outer >= 0) {
            local.rotation.outer = faces[outer];
        } else {
            // no face is bounded by a cycle: wrap the first face in a ring of
            // new vertices and let the ring bound the outer face
            std::set<Edge> edges;
            for (auto e : local.graph.edges())
                edges.insert(e);
            std::vector<std::vector<Vertex>> nf(faces.begin() + 1, faces.end());
            int next_id = k;
            auto ring = ring_insert(faces[0], next_id, nf, edges);
            nf.push_back(ring);
            local.graph = graph_from_edges(next_id, edges);
            local.rotation = rotation_from_faces(next_id, nf);
            local.rotation.outer = ring;
        }

        auto full = certify_triangulated(triangulate(local).instance);
        const Graph& t = full.first;
        std::vector<Vertex> identity(k);
        for (int i = 0; i < k; ++i)
            identity[i] = i;
        auto back = certificate_for_subgraph(t, full.second, sub.graph, identity, constant_f(k, 4));
        for (const auto& op : back.ops) {
            int u = sub.to_parent[op.u];
            result.ops.push_back(op.is_save() ? Operation::save(u, sub.to_parent[op.w])
                                              : Operation::remove(u));
        }
    }
    auto check = verify_certificate(g, result);
    WDEG_ENSURE(check.ok, "weak 4-degeneracy certificate failed: " + check.reason);
    return result;
}

PlanarInstance parse_rotation(const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    RotationSystem rs;
    std::map<int, std::vector<int>> rows;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head))
            continue;
        if (head == "outer") {
            int v;
            while (ls >> v)
                rs.outer.push_back(v);
            if (!ls.eof())
                throw ParseError("malformed outer face", lineno);
            continue;
        }
        if (head.back() != ':')
            throw ParseError("expected 'v: neighbors...'", lineno);
        int v;
        try {
            std::size_t used = 0;
            v = std::stoi(head.substr(0, head.size() - 1), &used);
            if (used != head.size() - 1)
                throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            throw ParseError("bad vertex id '" + head + "'", lineno);
        }
        if (v < 0 || rows.count(v))
            throw ParseError("vertex " + std::to_string(v) + " negative or listed twice", lineno);
        std::vector<int> nb;
        int x;
        while (ls >> x)
            nb.push_back(x);
        if (!ls.eof())
            throw ParseError("malformed neighbor list", lineno);
        rows[v] = nb;
    }
    const int n = static_cast<int>(rows.size());
    if (n > 0 && rows.rbegin()->first != n - 1)
        throw ParseError("vertex ids must be exactly 0..n-1", 0);
    std::vector<Edge> es;
    rs.rot.resize(n);
    for (auto& [v, nb] : rows) {
        for (int x : nb) {
            if (x < 0 || x >= n)
                throw ParseError("neighbor " + std::to_string(x) + " out of range", 0);
            es.emplace_back(v, x);
        }
        rs.rot[v] = nb;
    }
    for (int v : rs.outer)
        if (v < 0 || v >= n)
            throw ParseError("outer face vertex out of range", 0);
    return {Graph(n, es), rs};
}

std::string dump_rotation(const RotationSystem& rs)
{
    std::ostringstream os;
    if (!rs.outer.empty()) {
        os << "outer";
        for (int v : rs.outer)
            os << ' ' << v;
        os << '\n';
    }
    for (std::size_t v = 0; v < rs.rot.size(); ++v) {
        os << v << ':';
        for (int x : rs.rot[v])
            os << ' ' << x;
        os << '\n';
    }
    return os.str();
}

} // namespace wdeg
