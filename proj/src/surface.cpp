#include "qtri/surface.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qtri {

namespace {

int prevSlot(int m) { return m == 1 ? 3 : m - 1; }
int nextSlot(int m) { return m == 3 ? 1 : m + 1; }

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

TriangulatedSurface::TriangulatedSurface(std::vector<std::string> faces, std::vector<Gluing> gluings)
    : faces_(std::move(faces)), gluings_(std::move(gluings)) {
    for (int i = 0; i < static_cast<int>(faces_.size()); ++i)
        if (!faceIndex_.emplace(faces_[i], i).second)
            throw std::invalid_argument("TriangulatedSurface: duplicate face name " + faces_[i]);
    std::set<EdgeRef> seen;
    for (const auto& g : gluings_) {
        for (const EdgeRef& e : {g.a, g.b}) {
            if (e.face < 0 || e.face >= faceCount())
                throw std::invalid_argument("TriangulatedSurface: gluing refers to unknown face");
            if (e.slot < 1 || e.slot > 3)
                throw std::invalid_argument("TriangulatedSurface: edge slot must be 1, 2 or 3");
            if (!seen.insert(e).second)
                throw std::invalid_argument("TriangulatedSurface: slot glued twice: face " +
                                            faces_[e.face] + " slot " + std::to_string(e.slot));
        }
        if (g.a == g.b)
            throw std::invalid_argument("TriangulatedSurface: slot glued to itself");
    }
}

int TriangulatedSurface::faceIndex(const std::string& name) const {
    auto it = faceIndex_.find(name);
    if (it == faceIndex_.end())
        throw std::invalid_argument("TriangulatedSurface: unknown face " + name);
    return it->second;
}

std::optional<EdgeRef> TriangulatedSurface::partner(const EdgeRef& e) const {
    for (const auto& g : gluings_) {
        if (g.a == e) return g.b;
        if (g.b == e) return g.a;
    }
    return std::nullopt;
}

std::vector<EdgeRef> TriangulatedSurface::boundaryEdges() const {
    std::vector<EdgeRef> out;
    for (int f = 0; f < faceCount(); ++f)
        for (int s = 1; s <= 3; ++s)
            if (!isGlued({f, s})) out.push_back({f, s});
    return out;
}

bool TriangulatedSurface::hasSelfGluedFace() const {
    for (const auto& g : gluings_)
        if (g.a.face == g.b.face) return true;
    return false;
}

int TriangulatedSurface::edgeCount() const {
    return 3 * faceCount() - static_cast<int>(gluings_.size());
}

int TriangulatedSurface::idealVertexCount() const {
    // corner (f,m) of face f, keyed 3f + m-1
    UnionFind uf(3 * faceCount());
    for (const auto& g : gluings_) {
        // e_a runs v_a -> v_{a+1}; glued edges carry opposite orientations
        uf.unite(3 * g.a.face + (g.a.slot - 1), 3 * g.b.face + (nextSlot(g.b.slot) - 1));
        uf.unite(3 * g.a.face + (nextSlot(g.a.slot) - 1), 3 * g.b.face + (g.b.slot - 1));
    }
    std::set<int> roots;
    for (int c = 0; c < 3 * faceCount(); ++c) roots.insert(uf.find(c));
    return static_cast<int>(roots.size());
}

int TriangulatedSurface::eulerCharacteristic() const {
    return idealVertexCount() - edgeCount() + faceCount();
}

bool TriangulatedSurface::hasInteriorPuncture() const {
    UnionFind uf(3 * faceCount());
    for (const auto& g : gluings_) {
        uf.unite(3 * g.a.face + (g.a.slot - 1), 3 * g.b.face + (nextSlot(g.b.slot) - 1));
        uf.unite(3 * g.a.face + (nextSlot(g.a.slot) - 1), 3 * g.b.face + (g.b.slot - 1));
    }
    // a corner touches the boundary if one of its flanking slots is unglued
    std::set<int> boundaryRoots;
    for (int f = 0; f < faceCount(); ++f)
        for (int m = 1; m <= 3; ++m) {
            bool touches = !isGlued({f, m}) || !isGlued({f, prevSlot(m)});
            if (touches) boundaryRoots.insert(uf.find(3 * f + m - 1));
        }
    std::set<int> all;
    for (int c = 0; c < 3 * faceCount(); ++c) all.insert(uf.find(c));
    return all.size() != boundaryRoots.size();
}

bool TriangulatedSurface::isConnected() const {
    if (faces_.empty()) return true;
    UnionFind comp(faceCount());
    for (const auto& g : gluings_) comp.unite(g.a.face, g.b.face);
    int root = comp.find(0);
    for (int f = 1; f < faceCount(); ++f)
        if (comp.find(f) != root) return false;
    return true;
}

void TriangulatedSurface::requireTriangulable() const {
    if (faces_.empty())
        throw std::invalid_argument("surface has no faces (monogon/bigon-like descriptions are not triangulable)");

    // connected components of the face-gluing graph
    UnionFind comp(faceCount());
    for (const auto& g : gluings_) comp.unite(g.a.face, g.b.face);
    std::map<int, std::vector<int>> comps;
    for (int f = 0; f < faceCount(); ++f) comps[comp.find(f)].push_back(f);

    for (const auto& [root, fs] : comps) {
        std::set<int> inComp(fs.begin(), fs.end());
        std::vector<std::string> names;
        for (int f : fs) names.push_back(faces_[f]);
        std::vector<Gluing> gs;
        for (const auto& g : gluings_)
            if (inComp.count(g.a.face)) {
                Gluing h = g;
                h.a.face = static_cast<int>(std::find(fs.begin(), fs.end(), g.a.face) - fs.begin());
                h.b.face = static_cast<int>(std::find(fs.begin(), fs.end(), g.b.face) - fs.begin());
                gs.push_back(h);
            }
        TriangulatedSurface sub(names, gs);
        int v = sub.idealVertexCount();
        int chi = sub.eulerCharacteristic();
        bool closed = sub.isClosed();
        if (closed && chi == 2 && v <= 2)
            throw std::invalid_argument("exceptional surface: sphere with at most two punctures");
        if (!closed && chi == 1 && v <= 2 && !sub.hasInteriorPuncture())
            throw std::invalid_argument("exceptional surface: monogon or bigon");
    }
}

TriangulatedSurface withAttached(TriangulatedSurface s, std::set<int> att) {
    s.attached_ = std::move(att);
    return s;
}

TriangulatedSurface TriangulatedSurface::extended() const {
    std::vector<std::string> faces = faces_;
    std::vector<Gluing> gluings = gluings_;
    std::set<int> att;
    for (const EdgeRef& e : boundaryEdges()) {
        int nf = static_cast<int>(faces.size());
        faces.push_back(faces_[e.face] + "@e" + std::to_string(e.slot));
        gluings.push_back({EdgeRef{nf, 1}, e});
        att.insert(nf);
    }
    return withAttached(TriangulatedSurface(faces, gluings), att);
}

EdgeRef TriangulatedSurface::attachingEdgeOf(int attachedFace) const {
    if (!isAttachedFace(attachedFace))
        throw std::invalid_argument("attachingEdgeOf: not an attached face");
    auto p = partner({attachedFace, 1});
    return *p;
}

Bary edgePoint(int n, int slot, int t) {
    if (t < 1 || t >= n) throw std::invalid_argument("edgePoint: position out of range");
    switch (slot) {
        case 1: return {n - t, t, 0};
        case 2: return {0, n - t, t};
        case 3: return {t, 0, n - t};
        default: throw std::invalid_argument("edgePoint: bad slot");
    }
}

int cornerOfSlots(int slotIn, int slotOut) {
    // corner v_m is shared by e_{m-1} and e_m
    if (nextSlot(slotIn) == slotOut) return slotOut;   // enter e_{m-1}, exit e_m
    if (nextSlot(slotOut) == slotIn) return slotIn;    // enter e_m, exit e_{m-1}
    throw std::invalid_argument("cornerOfSlots: slots not adjacent");
}

VertexModel::VertexModel(const TriangulatedSurface& s, int n) : n_(n), surface_(&s) {
    if (n < 2) throw std::invalid_argument("VertexModel: n must be at least 2");
    s.requireTriangulable();

    std::vector<std::pair<int, Bary>> pts;
    for (int f = 0; f < s.faceCount(); ++f)
        for (int i = 0; i <= n; ++i)
            for (int j = 0; i + j <= n; ++j) {
                int k = n - i - j;
                if (i == n || j == n || k == n) continue;  // corners
                pts.push_back({f, Bary{i, j, k}});
            }
    std::map<std::pair<int, Bary>, int> idx;
    for (int t = 0; t < static_cast<int>(pts.size()); ++t) idx[pts[t]] = t;

    UnionFind uf(static_cast<int>(pts.size()));
    for (const auto& g : s.gluings())
        for (int t = 1; t < n; ++t) {
            auto pa = std::make_pair(g.a.face, edgePoint(n, g.a.slot, t));
            auto pb = std::make_pair(g.b.face, edgePoint(n, g.b.slot, n - t));
            uf.unite(idx.at(pa), idx.at(pb));
        }

    std::map<int, std::vector<int>> classes;
    for (int t = 0; t < static_cast<int>(pts.size()); ++t) classes[uf.find(t)].push_back(t);

    // deterministic order: by smallest (face, bary) representative
    std::vector<std::pair<std::pair<int, Bary>, std::vector<int>>> ordered;
    for (auto& [root, members] : classes) {
        std::pair<int, Bary> best = pts[members[0]];
        for (int m : members) best = std::min(best, pts[m]);
        ordered.push_back({best, members});
    }
    std::sort(ordered.begin(), ordered.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    for (const auto& [best, members] : ordered) {
        SmallVertex v;
        std::ostringstream os;
        os << s.faces()[best.first] << ":" << best.second.i << "," << best.second.j << ","
           << best.second.k;
        v.id = os.str();
        for (int m : members) v.reps.push_back(pts[m]);
        std::sort(v.reps.begin(), v.reps.end());
        for (const auto& [f, b] : v.reps) {
            auto onSlot = [&](int slot) {
                return (slot == 1 && b.k == 0) || (slot == 2 && b.i == 0) || (slot == 3 && b.j == 0);
            };
            for (int slot = 1; slot <= 3; ++slot)
                if (onSlot(slot)) {
                    if (s.isGlued({f, slot})) v.onInteriorEdge = true;
                    else v.onBoundary = true;
                }
        }
        int cls = static_cast<int>(verts_.size());
        verts_.push_back(std::move(v));
        for (int m : members) classIndex_[pts[m]] = cls;
    }
}

int VertexModel::classOf(int face, const Bary& b) const {
    auto it = classIndex_.find({face, b});
    return it == classIndex_.end() ? -1 : it->second;
}

std::vector<std::string> VertexModel::ids() const {
    std::vector<std::string> out;
    out.reserve(verts_.size());
    for (const auto& v : verts_) out.push_back(v.id);
    return out;
}

VertexSets vertexSets(const TriangulatedSurface& ext, int n) {
    VertexModel vm(ext, n);
    VertexSets out;
    for (const auto& v : vm.vertices()) {
        bool inOriginal = false, onE3Attached = false, onE2Attached = false;
        for (const auto& [f, b] : v.reps) {
            if (!ext.isAttachedFace(f)) inOriginal = true;
            else {
                if (b.j == 0) onE3Attached = true;
                if (b.i == 0) onE2Attached = true;
            }
        }
        if (inOriginal) out.reduced.push_back(v.id);
        if (!onE3Attached) out.xSet.push_back(v.id);
        if (!onE2Attached) out.aSet.push_back(v.id);
    }
    return out;
}

}  // namespace qtri
