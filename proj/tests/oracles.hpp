// Test-only independent oracles. These deliberately avoid the library's own
// combinatorics: paths are counted by DFS over a geometrically-built dual
// graph, and balancedness by a brute-force span test over residues.
#pragma once

#include "qtri/qtrace.hpp"

#include <array>
#include <map>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using namespace qtri;

// exact plane embedding, scaled so all node coordinates are integers
struct Node {
    std::int64_t x, y;
    bool operator<(const Node& o) const { return x < o.x || (x == o.x && y < o.y); }
    bool operator==(const Node& o) const { return x == o.x && y == o.y; }
};

// Dual graph of the n-triangulation as raw geometry: nodes are centroids of
// all small triangles plus one point per boundary small edge; edges join
// nodes whose small triangles share a small edge (or touch that boundary
// point). Compatibility of a step is decided from coordinates alone.
class DualGraphOracle {
public:
    explicit DualGraphOracle(int n) : n_(n) {
        // lattice corners of small triangles, scaled by 6
        auto pt = [](int i, int j) { return Node{12 * j + 6 * i, 6 * i}; };
        for (int i = 0; i + 1 <= n; ++i)
            for (int j = 0; i + j + 1 <= n; ++j) {
                // upward triangle with corners (i+1,j,k),(i,j+1,k),(i,j,k+1)
                Node a = pt(i + 1, j), b = pt(i, j + 1), c = pt(i, j);
                Node cen{(a.x + b.x + c.x) / 3, (a.y + b.y + c.y) / 3};
                up_.push_back(cen);
                sides_.push_back({{mid(a, b), mid(a, c), mid(b, c)}});
            }
        for (int i = 0; i + 2 <= n; ++i)
            for (int j = 0; i + j + 2 <= n; ++j) {
                Node a = pt(i + 1, j + 1), b = pt(i + 1, j), c = pt(i, j + 1);
                Node cen{(a.x + b.x + c.x) / 3, (a.y + b.y + c.y) / 3};
                down_.push_back(cen);
                downSides_.push_back({{mid(a, b), mid(a, c), mid(b, c)}});
            }
        // adjacency between triangles sharing a small-edge midpoint
        for (size_t u = 0; u < up_.size(); ++u)
            for (size_t d = 0; d < down_.size(); ++d)
                for (const Node& mu : sides_[u])
                    for (const Node& md : downSides_[d])
                        if (mu == md) edges_.insert(ordered(up_[u], down_[d]));
        // boundary points: midpoints of boundary small edges, attached to the
        // unique triangle having that side
        for (size_t u = 0; u < up_.size(); ++u)
            for (const Node& m : sides_[u])
                if (onBoundary(m)) {
                    boundary_.push_back(m);
                    edges_.insert(ordered(up_[u], m));
                }
    }

    // number of compatible paths of the stated corner arc
    long countPaths(const StatedCornerArc& arc) const {
        // endpoints: boundary points on the two edges at the corner, numbered
        // from the corner (CCW) or toward it (CW)
        Node from = endpointNode(arc, true);
        Node to = endpointNode(arc, false);
        std::set<Node> visited;
        return dfs(from, to, visited, arc);
    }

private:
    static Node mid(const Node& a, const Node& b) { return {(a.x + b.x) / 2, (a.y + b.y) / 2}; }
    static std::pair<Node, Node> ordered(const Node& a, const Node& b) {
        return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
    }
    bool onBoundary(const Node& p) const {
        // e_2: y = 0; e_3: y = x; e_1: x + y = 18n - ... in scaled coords the
        // right edge runs from (12n, 0) to (6n, 6n): x + y = 12n
        return p.y == 0 || p.y == p.x || p.x + p.y == 12 * n_;
    }
    bool hasEdge(const Node& a, const Node& b) const { return edges_.count(ordered(a, b)) > 0; }

    Node endpointNode(const StatedCornerArc& arc, bool start) const {
        // corner v_m with left edge e_{m-1} and right edge e_m; points are
        // numbered from the one nearest the corner: 1..n for C, n..1 for C-bar
        int m = arc.corner;
        bool ccw = arc.orientation == CornerOrientation::CCW;
        // boundary points on an edge sorted by distance from the corner
        auto pointsOn = [&](int slot) {
            std::vector<Node> pts;
            for (const Node& b : boundary_)
                if (slotOf(b) == slot) pts.push_back(b);
            Node corner = cornerNode(m);
            std::sort(pts.begin(), pts.end(), [&](const Node& a, const Node& b) {
                auto d = [&](const Node& p) {
                    return (p.x - corner.x) * (p.x - corner.x) + (p.y - corner.y) * (p.y - corner.y);
                };
                return d(a) < d(b);
            });
            return pts;
        };
        int leftSlot = m == 1 ? 3 : m - 1;
        int rightSlot = m;
        auto lp = pointsOn(leftSlot);
        auto rp = pointsOn(rightSlot);
        // position: CCW numbering 1..n from the corner; CW numbering n..1
        auto pick = [&](std::vector<Node>& v, int number) {
            int pos = ccw ? number : n_ + 1 - number;
            return v[pos - 1];
        };
        if (ccw) return start ? pick(lp, arc.i) : pick(rp, arc.j);
        return start ? pick(rp, arc.j) : pick(lp, arc.i);
    }

    int slotOf(const Node& p) const {
        if (p.x + p.y == 12 * n_) return 1;
        if (p.y == 0) return 2;
        return 3;
    }
    Node cornerNode(int m) const {
        if (m == 1) return {6 * n_, 6 * n_};
        if (m == 2) return {12 * n_, 0};
        return {0, 0};
    }

    bool stepAllowed(const Node& a, const Node& b, const StatedCornerArc& arc) const {
        // bring the step vector into the v_1 frame: apply the linear part of
        // the 120-degree rotation (1 - corner) mod 3 times, on 4x-scaled
        // coordinates so the halves stay integral
        std::int64_t dx = 4 * (b.x - a.x), dy = 4 * (b.y - a.y);
        int times = ((1 - arc.corner) % 3 + 3) % 3;
        for (int t = 0; t < times; ++t) {
            std::int64_t nx = (-dx + 3 * dy) / 2;
            std::int64_t ny = (-dx - dy) / 2;
            dx = nx;
            dy = ny;
        }
        if (dx == 0) return dy > 0;  // vertical segments must be upwards
        // other segments: left-to-right for C(v_m), right-to-left for C-bar
        return arc.orientation == CornerOrientation::CCW ? dx > 0 : dx < 0;
    }

    long dfs(const Node& at, const Node& goal, std::set<Node>& visited,
             const StatedCornerArc& arc) const {
        if (at == goal) return 1;
        visited.insert(at);
        long total = 0;
        for (const Node& nb : neighbours(at)) {
            if (visited.count(nb)) continue;
            if (!stepAllowed(at, nb, arc)) continue;
            if (onBoundary(nb) && !(nb == goal)) continue;
            total += dfs(nb, goal, visited, arc);
        }
        visited.erase(at);
        return total;
    }

    std::vector<Node> neighbours(const Node& p) const {
        std::vector<Node> out;
        for (const auto& [a, b] : edges_) {
            if (a == p) out.push_back(b);
            else if (b == p) out.push_back(a);
        }
        return out;
    }

    int n_;
    std::vector<Node> up_, down_, boundary_;
    std::vector<std::array<Node, 3>> sides_, downSides_;
    std::set<std::pair<Node, Node>> edges_;
};

// brute-force balanced test on one face: the pullback lies in the span of
// k_1, k_2 modulo n
inline bool spanBalanced(int n, const std::map<Bary, std::int64_t>& pullback) {
    auto val = [&](const Bary& b) {
        auto it = pullback.find(b);
        return it == pullback.end() ? 0 : it->second;
    };
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            bool ok = true;
            for (const Bary& v : tri::vertices(n))
                if (((val(v) - a * v.i - b * v.j) % n + n) % n != 0) {
                    ok = false;
                    break;
                }
            if (ok) return true;
        }
    return false;
}

// per-face pullback span test over a whole surface
inline bool spanBalancedOnSurface(const VertexModel& vm, const ExponentVector& k) {
    const auto& s = vm.surface();
    for (int f = 0; f < s.faceCount(); ++f) {
        std::map<Bary, std::int64_t> pull;
        for (const Bary& b : tri::vertices(vm.n())) {
            int cls = vm.classOf(f, b);
            std::int64_t v = k.at(cls);
            if (v != 0) pull[b] = v;
        }
        if (!spanBalanced(vm.n(), pull)) return false;
    }
    return true;
}

inline std::mt19937& rng() {
    static std::mt19937 gen(20240817);
    return gen;
}

inline std::int64_t randInt(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng());
}

inline LaurentScalar randScalar() {
    LaurentScalar s;
    int terms = static_cast<int>(randInt(0, 3));
    for (int t = 0; t < terms; ++t)
        s += LaurentScalar::term(Integer(randInt(-5, 5)), randInt(-6, 6));
    return s;
}

inline ExponentVector randExponent(int rank, int maxAbs = 3, int support = 4) {
    ExponentVector k;
    for (int t = 0; t < support; ++t)
        k.set(static_cast<int>(randInt(0, rank - 1)), randInt(-maxAbs, maxAbs));
    return k;
}

inline TorusElement randElement(const PresentationPtr& p, int terms = 3) {
    TorusElement e(p);
    for (int t = 0; t < terms; ++t)
        e.addTerm(randExponent(p->rank()), randScalar());
    return e;
}

}  // namespace oracle
