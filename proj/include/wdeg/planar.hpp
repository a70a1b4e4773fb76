/**
 * @file planar.hpp
 * @brief Combinatorial plane embeddings (rotation systems) and the
 *        constructive weak 4-degeneracy certificate for planar graphs.
 */
#ifndef WDEG_PLANAR_HPP
#define WDEG_PLANAR_HPP

#include "wdeg/certificate.hpp"
#include "wdeg/generators.hpp"

#include <string>
#include <vector>

namespace wdeg {

/// rot[v] is the cyclic order of v's neighbors. Faces are traced by the rule
/// that dart u->v is followed by v->w, where w comes right after u in rot[v].
struct RotationSystem {
    std::vector<std::vector<Vertex>> rot;
    /// Designated outer face as a cyclic vertex sequence; may be empty.
    std::vector<Vertex> outer;
};

struct PlanarInstance {
    Graph graph;
    RotationSystem rotation;
};

/// Faces as closed walks (vertex sequences), traced from darts in ascending
/// (tail, position in rot[tail]) order.
std::vector<std::vector<Vertex>> trace_faces(const RotationSystem& rot);

struct EmbeddingReport {
    bool ok = true;
    int faces = 0;
    std::string violation;
};

/// Checks that the rotation matches the adjacency, traces faces, checks
/// Euler's formula per component, and locates the designated outer face.
EmbeddingReport validate_embedding(const Graph& g, const RotationSystem& rot);

/// Rebuilds a rotation system from consistently oriented faces covering
/// every dart once. Throws StructuralError if they do not.
RotationSystem rotation_from_faces(int n, const std::vector<std::vector<Vertex>>& faces);

/// Index of `cycle` among the traced faces (matching up to rotation and
/// reversal), or -1.
int find_face(const std::vector<std::vector<Vertex>>& faces, const std::vector<Vertex>& cycle);

struct Triangulation {
    PlanarInstance instance;
    /// Vertices with id >= original_order were added.
    int original_order = 0;
    std::vector<Edge> added_edges;
};

/// Triangulates every face except the outer one, which must be a simple
/// cycle. Simple faces are fanned from their lowest-id vertex; if a fan
/// chord already exists the face gets a new center vertex instead. Faces
/// whose boundary walk repeats a vertex are first surrounded by a new ring
/// of vertices.
Triangulation triangulate(const PlanarInstance& inst);

/// Certificate for G - v1 - v2 (local ids of the returned subgraph) with the
/// weights 2 - |N(u) & {v1, v2}| on the outer cycle and 4 - |N(u) & {v1, v2}|
/// inside, where every outer-cycle vertex is removed by Delete. The instance
/// must be triangulated with a simple outer cycle whose first two vertices are
/// v1, v2.
struct SafeCertificate {
    InducedSubgraph subgraph;
    Certificate certificate;
};
SafeCertificate safe_certificate(const PlanarInstance& inst);

/// Verified constant-4 certificate for a graph with a valid plane embedding.
Certificate weakly4_certificate(const Graph& g, const RotationSystem& rot);

/// Text form: a header "outer v1 v2 ..." (optional) and one line
/// "v: n1 n2 ..." per vertex listing its cyclic neighbor order.
PlanarInstance parse_rotation(const std::string& text);
std::string dump_rotation(const RotationSystem& rot);

// Embedded generators; the outer face is set on each.
PlanarInstance embedding_from_faces(int n, std::vector<std::vector<Vertex>> faces);
PlanarInstance tetrahedron();
PlanarInstance octahedron();
PlanarInstance cube();
PlanarInstance icosahedron();
PlanarInstance dodecahedron();
PlanarInstance grid(int rows, int cols);
PlanarInstance embedded_cycle(int n);
/// Random triangulation on n >= 3 vertices: stellations of inner faces
/// followed by random edge flips.
PlanarInstance random_triangulation(int n, Rng& rng);

} // namespace wdeg

#endif
