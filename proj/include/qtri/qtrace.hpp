#pragma once

#include "qtri/qmatrix.hpp"
#include "qtri/structmat.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qtri {

enum class CornerOrientation { CCW, CW };  // C(v) and C-bar(v)

/// Stated arc hugging corner v_m of the triangle. The state i sits on the
/// left edge e_{m-1}, j on the right edge e_m; CCW arcs run left to right,
/// CW arcs right to left. Bad iff i < j.
struct StatedCornerArc {
    int corner = 1;                                      // 1..3
    CornerOrientation orientation = CornerOrientation::CCW;
    int i = 1, j = 1;                                    // 1..n
    bool bad() const { return i < j; }
};

/// Compatible dual-graph path, stored as the sequence of upward small
/// triangles it visits, in travel order, in the frame of the arc's corner.
struct CompatiblePath {
    std::vector<Bary> upTriangles;  // coords with i+j+k = n-1
};

/// exhaustive, duplicate-free, lexicographic in the step sequence
std::vector<CompatiblePath> compatiblePaths(int n, const StatedCornerArc& arc);

/// k_p of eq-path-val over the small vertices of the triangle: n on every
/// vertex left of the path, minus k_1 (CCW) or k_2 + k_3 (CW)
std::map<Bary, std::int64_t> pathExponent(int n, const CompatiblePath& p, const StatedCornerArc& arc);

/// the standalone triangle as a one-face surface (face name "t")
const TriangulatedSurface& standaloneTriangle();

/// presentation of T(Q-bar) of one face of a surface... ids "<face>:i,j,k"
PresentationPtr trianglePresentation(int n);

/// sum over compatible paths of x^{k_p}, over trianglePresentation(n)
TorusElement traceCorner(int n, const StatedCornerArc& arc);

/// transport matrices: M_m[i][j] = trace C(v_m)_{ij},
/// Mbar_m[i][j] = trace C-bar(v_m)_{ji}
QMatrix transportMatrix(int n, int corner, CornerOrientation orientation);

/// R-matrix entry R^{ab}_{cd} of the fundamental representation (1-based)
LaurentScalar rMatrixEntry(int n, int a, int b, int c, int d);

struct ExchangeReport {
    struct Failure { int i, j, k, l; };
    std::vector<Failure> failures;
    bool pass() const { return failures.empty(); }
};

/// (M_1)_{ij} (Mbar_2)_{kl} = sum_{j',l'} R^{j'l'}_{jl} (Mbar_2)_{kl'} (M_1)_{ij'}
ExchangeReport exchangeRelationCheck(int n);
/// same with an injected R-matrix table r[a-1][b-1][c-1][d-1] (negative controls)
ExchangeReport exchangeRelationCheckWith(int n,
    const std::vector<std::vector<std::vector<std::vector<LaurentScalar>>>>& r);

/// Weyl normalization of a product of two q-commuting elements:
/// a b = hq^{2c} b a must hold exactly; returns hq^{-c} a b
TorusElement weylProduct(const TorusElement& a, const TorusElement& b);

/// trace of the frame element g_v: x^{K(v,.)} over the reduced or extended
/// X-torus of the surface
TorusElement traceFrame(const SurfaceMatrices& m, const std::string& vertexId, bool reduced);

/// B / B-bar membership over the standalone triangle (section 10.4):
/// balanced, vanishing on the j=0 edge, and monotone (resp. constant)
/// along each j-line
bool balancedOnTriangle(int n, const std::map<Bary, std::int64_t>& k);
bool inAttachB(int n, const std::map<Bary, std::int64_t>& k);
bool inAttachBbar(int n, const std::map<Bary, std::int64_t>& k);

/// b_{ijk} generator of the attach monoid
std::map<Bary, std::int64_t> attachGenerator(int n, const Bary& v);

/// extended counit on T(Q-bar_P3; B): B-bar monomials keep their
/// coefficient, B \ B-bar monomials die; error off B
LaurentScalar epsilonX(int n, const TorusElement& e);

/// Simple stated arc across the triangulated surface.
struct SimpleArcSpec {
    struct Pass {
        std::string face;
        int entrySlot = 0, exitSlot = 0;
    };
    std::vector<Pass> passes;
    int startState = 1, endState = 1;
};

/// Trace machinery bound to one (surface, n); builds the tensor torus of
/// the faces and the glued/extended presentations once.
class TraceContext {
public:
    TraceContext(const TriangulatedSurface& s, int n);

    int n() const { return mats_.n(); }
    const SurfaceMatrices& matrices() const { return mats_; }
    const TriangulatedSurface& surface() const { return mats_.surface(); }

    /// reduced trace over T(Q-bar_lambda), or extended over T(Q_lambda)
    TorusElement traceArc(const SimpleArcSpec& arc, bool extended) const;

    /// pr: B-bar_lambda monomials restrict to the reduced torus, the rest to 0
    TorusElement projection(const TorusElement& extendedTrace) const;

    /// psi^{-1} of the X-trace; lands in the A-torus
    TorusElement traceArcA(const SimpleArcSpec& arc, bool extended) const;
    TorusElement traceFrameA(const std::string& vertexId, bool reduced) const;

    /// cutting homomorphism along one interior edge
    MultLinearHom cutMap(const EdgeRef& interiorEdge) const;
    /// matching-exponent predicate for the image of the cut map
    bool inCutImage(const MultLinearHom& cut, const TorusElement& e) const;

    /// edge-weight degree d_e of the arc at a boundary edge of the surface
    WeightVector boundaryWeight(const SimpleArcSpec& arc, const EdgeRef& boundaryEdge) const;
    /// i-th small vertex (positive order) on a boundary edge
    std::string boundaryVertexId(const EdgeRef& boundaryEdge, int i) const;

private:
    TorusElement traceOn(const TriangulatedSurface& s, const VertexModel& vm,
                         PresentationPtr glued, const SimpleArcSpec& arc) const;

    SurfaceMatrices mats_;
    std::unique_ptr<VertexModel> vmSurf_;   // model of the original surface
};

}  // namespace qtri
