#include "wdeg/errors.hpp"
#include "wdeg/planar.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <queue>
#include <set>

namespace wdeg {

namespace {

Edge key(int a, int b)
{
    return {std::min(a, b), std::max(a, b)};
}

PlanarInstance build(int n, const std::vector<std::vector<Vertex>>& faces)
{
    std::set<Edge> es;
    for (const auto& f : faces)
        for (std::size_t i = 0; i < f.size(); ++i)
            es.insert(key(f[i], f[(i + 1) % f.size()]));
    std::vector<Edge> ev(es.begin(), es.end());
    PlanarInstance inst{Graph(n, ev), rotation_from_faces(n, faces)};
    inst.rotation.outer = faces.front();
    return inst;
}

} // namespace

PlanarInstance embedding_from_faces(int n, std::vector<std::vector<Vertex>> faces)
{
    if (faces.empty())
        throw PreconditionError("no faces given");
    // every edge is shared by two faces, traversed in opposite directions
    std::map<Edge, std::vector<int>> owners;
    for (std::size_t f = 0; f < faces.size(); ++f)
        for (std::size_t i = 0; i < faces[f].size(); ++i)
            owners[key(faces[f][i], faces[f][(i + 1) % faces[f].size()])].push_back(
                static_cast<int>(f));
    auto has_dart = [&](int f, int a, int b) {
        const auto& fc = faces[f];
        for (std::size_t i = 0; i < fc.size(); ++i)
            if (fc[i] == a && fc[(i + 1) % fc.size()] == b)
                return true;
        return false;
    };
    std::vector<char> fixed(faces.size(), 0);
    for (std::size_t root = 0; root < faces.size(); ++root) {
        if (fixed[root])
            continue;
        fixed[root] = 1;
        std::queue<int> q;
        q.push(static_cast<int>(root));
        while (!q.empty()) {
            int f = q.front();
            q.pop();
            const auto fc = faces[f];
            for (std::size_t i = 0; i < fc.size(); ++i) {
                int a = fc[i], b = fc[(i + 1) % fc.size()];
                for (int h : owners[key(a, b)]) {
                    if (h == f)
                        continue;
                    if (!fixed[h]) {
                        if (!has_dart(h, b, a))
                            std::reverse(faces[h].begin(), faces[h].end());
                        fixed[h] = 1;
                        q.push(h);
                    } else if (!has_dart(h, b, a)) {
                        throw StructuralError("faces cannot be oriented consistently");
                    }
                }
            }
        }
    }
    return build(n, faces);
}

PlanarInstance tetrahedron()
{
    return embedding_from_faces(4, {{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}});
}

PlanarInstance octahedron()
{
    std::vector<std::vector<Vertex>> faces;
    for (int i = 0; i < 4; ++i) {
        int a = 1 + i, b = 1 + (i + 1) % 4;
        faces.push_back({0, a, b});
        faces.push_back({5, b, a});
    }
    return embedding_from_faces(6, faces);
}

PlanarInstance cube()
{
    return embedding_from_faces(8, {{0, 1, 2, 3},
                                    {4, 5, 6, 7},
                                    {0, 1, 5, 4},
                                    {1, 2, 6, 5},
                                    {2, 3, 7, 6},
                                    {3, 0, 4, 7}});
}

PlanarInstance icosahedron()
{
    std::vector<std::vector<Vertex>> faces;
    for (int i = 0; i < 5; ++i) {
        int u0 = 1 + i, u1 = 1 + (i + 1) % 5;
        int l0 = 6 + i, l1 = 6 + (i + 1) % 5;
        faces.push_back({0, u0, u1});
        faces.push_back({u0, l0, u1});
        faces.push_back({u1, l0, l1});
        faces.push_back({11, l1, l0});
    }
    return embedding_from_faces(12, faces);
}

PlanarInstance dodecahedron()
{
    auto ico = icosahedron();
    auto faces = trace_faces(ico.rotation);
    std::map<std::pair<int, int>, int> face_of_dart;
    for (std::size_t f = 0; f < faces.size(); ++f)
        for (std::size_t i = 0; i < faces[f].size(); ++i)
            face_of_dart[{faces[f][i], faces[f][(i + 1) % faces[f].size()]}] = static_cast<int>(f);
    std::vector<std::vector<Vertex>> dual;
    for (int v = 0; v < ico.graph.order(); ++v) {
        std::vector<Vertex> cyc;
        for (int x : ico.rotation.rot[v])
            cyc.push_back(face_of_dart.at({x, v}));
        dual.push_back(cyc);
    }
    return embedding_from_faces(static_cast<int>(faces.size()), dual);
}

PlanarInstance grid(int rows, int cols)
{
    if (rows < 2 || cols < 2)
        throw PreconditionError("grid needs at least 2 rows and 2 columns");
    auto id = [cols](int r, int c) { return r * cols + c; };
    std::vector<std::vector<Vertex>> faces(1);
    auto& outer = faces[0];
    for (int c = 0; c < cols; ++c)
        outer.push_back(id(0, c));
    for (int r = 1; r < rows; ++r)
        outer.push_back(id(r, cols - 1));
    for (int c = cols - 2; c >= 0; --c)
        outer.push_back(id(rows - 1, c));
    for (int r = rows - 2; r >= 1; --r)
        outer.push_back(id(r, 0));
    for (int r = 0; r + 1 < rows; ++r)
        for (int c = 0; c + 1 < cols; ++c)
            faces.push_back({id(r, c), id(r, c + 1), id(r + 1, c + 1), id(r + 1, c)});
    return embedding_from_faces(rows * cols, faces);
}

PlanarInstance embedded_cycle(int n)
{
    if (n < 3)
        throw PreconditionError("cycle needs at least 3 vertices");
    std::vector<Vertex> c(n);
    for (int i = 0; i < n; ++i)
        c[i] = i;
    std::vector<Vertex> r(c.rbegin(), c.rend());
    return build(n, {c, r});
}

PlanarInstance random_triangulation(int n, Rng& rng)
{
    if (n < 3)
        throw PreconditionError("a triangulation needs at least 3 vertices");
    std::vector<std::array<int, 3>> faces{{0, 1, 2}, {0, 2, 1}};
    std::map<std::pair<int, int>, int> dart;
    auto assign = [&](int f) {
        for (int i = 0; i < 3; ++i)
            dart[{faces[f][i], faces[f][(i + 1) % 3]}] = f;
    };
    assign(0);
    assign(1);
    std::set<Edge> edges{{0, 1}, {1, 2}, {0, 2}};

    for (int s = 3; s < n; ++s) {
        int f = 1 + static_cast<int>(rng() % (faces.size() - 1));
        auto [a, b, c] = faces[f];
        faces[f] = {a, b, s};
        faces.push_back({b, c, s});
        faces.push_back({c, a, s});
        assign(f);
        assign(static_cast<int>(faces.size()) - 2);
        assign(static_cast<int>(faces.size()) - 1);
        edges.insert(key(a, s));
        edges.insert(key(b, s));
        edges.insert(key(c, s));
    }

    const int flips = 2 * n;
    for (int t = 0; t < flips; ++t) {
        auto it = std::next(edges.begin(), static_cast<long>(rng() % edges.size()));
        int a = it->first, b = it->second;
        int f = dart.at({a, b}), h = dart.at({b, a});
        if (f == 0 || h == 0)
            continue;
        int c = -1, d = -1;
        for (int i = 0; i < 3; ++i) {
            if (faces[f][i] != a && faces[f][i] != b)
                c = faces[f][i];
            if (faces[h][i] != a && faces[h][i] != b)
                d = faces[h][i];
        }
        if (c == d || edges.count(key(c, d)))
            continue;
        dart.erase({a, b});
        dart.erase({b, a});
        faces[f] = {a, d, c};
        faces[h] = {b, c, d};
        assign(f);
        assign(h);
        edges.erase(it);
        edges.insert(key(c, d));
    }

    std::vector<std::vector<Vertex>> out;
    for (const auto& f : faces)
        out.push_back({f[0], f[1], f[2]});
    return build(n, out);
}

} // namespace wdeg
