#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace qtri {

/// Barycentric lattice point of the n-triangulation of a face,
/// i + j + k = n, the three corners excluded for small vertices.
struct Bary {
    int i = 0, j = 0, k = 0;
    auto operator<=>(const Bary&) const = default;
};

/// Slot m in {1,2,3} names the edge e_m of a face, running from corner v_m
/// to corner v_{m+1} (cyclically). Gluings identify the t-th edge vertex
/// along one slot with the (n-t)-th along the other (orientation-reversing).
struct EdgeRef {
    int face = -1;   // index into faces()
    int slot = 0;    // 1..3
    auto operator<=>(const EdgeRef&) const = default;
};

struct Gluing {
    EdgeRef a, b;
};

/// A small vertex of the n-triangulation of the glued surface:
/// an identification class of per-face lattice points.
struct SmallVertex {
    std::string id;                                // canonical id "face:i,j,k"
    std::vector<std::pair<int, Bary>> reps;        // all (face, coords) representatives
    bool onBoundary = false;                       // lies on an unglued edge
    bool onInteriorEdge = false;                   // lies on a glued edge
};

/// Combinatorial pb surface presented as faces glued along edge slots.
class TriangulatedSurface {
public:
    TriangulatedSurface(std::vector<std::string> faces, std::vector<Gluing> gluings);

    const std::vector<std::string>& faces() const { return faces_; }
    int faceCount() const { return static_cast<int>(faces_.size()); }
    int faceIndex(const std::string& name) const;
    const std::vector<Gluing>& gluings() const { return gluings_; }

    bool isGlued(const EdgeRef& e) const { return partner(e).has_value(); }
    std::optional<EdgeRef> partner(const EdgeRef& e) const;
    std::vector<EdgeRef> boundaryEdges() const;
    int boundaryEdgeCount() const { return static_cast<int>(boundaryEdges().size()); }

    bool hasSelfGluedFace() const;
    /// Euler characteristic of the compactified surface (V - E + F over
    /// ideal vertices, edges, faces of the gluing complex).
    int eulerCharacteristic() const;
    int idealVertexCount() const;
    int edgeCount() const;
    /// an ideal vertex class whose link misses the boundary
    bool hasInteriorPuncture() const;
    bool isClosed() const { return boundaryEdges().empty(); }
    bool isConnected() const;

    /// rejects exceptional components (monogon, bigon, sphere with <= 2
    /// punctures); throws std::invalid_argument with a description
    void requireTriangulable() const;

    /// one new face ("<name>@<slot>") per boundary edge, glued by its slot 1
    TriangulatedSurface extended() const;
    /// true if this face was added by extended()
    bool isAttachedFace(int face) const { return attached_.count(face) > 0; }
    std::vector<int> attachedFaces() const { return {attached_.begin(), attached_.end()}; }
    /// for an attached face, the pre-existing boundary edge it was glued to
    EdgeRef attachingEdgeOf(int attachedFace) const;

private:
    friend TriangulatedSurface withAttached(TriangulatedSurface, std::set<int>);
    std::vector<std::string> faces_;
    std::vector<Gluing> gluings_;
    std::map<std::string, int> faceIndex_;
    std::set<int> attached_;
};

/// Small-vertex identification classes of the n-triangulation.
class VertexModel {
public:
    VertexModel(const TriangulatedSurface& s, int n);

    int n() const { return n_; }
    const TriangulatedSurface& surface() const { return *surface_; }
    const std::vector<SmallVertex>& vertices() const { return verts_; }
    int count() const { return static_cast<int>(verts_.size()); }

    /// class index of the lattice point (face, b); -1 if b is a corner
    int classOf(int face, const Bary& b) const;
    const SmallVertex& vertex(int cls) const { return verts_[cls]; }
    /// ordered ids, the canonical vertex order of the associated tori
    std::vector<std::string> ids() const;

private:
    int n_;
    const TriangulatedSurface* surface_;
    std::vector<SmallVertex> verts_;
    std::map<std::pair<int, Bary>, int> classIndex_;
};

/// V-bar (reduced), V (X-set) and V' (A-set) over the extended surface.
struct VertexSets {
    std::vector<std::string> reduced;   // small vertices of the original surface
    std::vector<std::string> xSet;      // extended minus e_3 vertices of attached faces
    std::vector<std::string> aSet;      // extended minus e_2 vertices of attached faces
};

/// position t = 1..n-1 along slot m of a face, measured from corner v_m
Bary edgePoint(int n, int slot, int t);
/// slots adjacent to corner v_m are e_{m-1} (incoming) and e_m (outgoing)
int cornerOfSlots(int slotIn, int slotOut);

VertexSets vertexSets(const TriangulatedSurface& extendedSurface, int n);

}  // namespace qtri
