#pragma once

#include "qtri/qtorus.hpp"
#include "qtri/surface.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace qtri {

using Mat = std::vector<std::vector<std::int64_t>>;

Mat matMul(const Mat& a, const Mat& b);
Mat matTranspose(const Mat& a);
Mat matScale(const Mat& a, std::int64_t c);
Mat matSub(const Mat& a, const Mat& b);
Mat matIdentity(int r, std::int64_t c = 1);

/// Direct formulas on the standard triangle P3. All take barycentric
/// coordinates with i + j + k = n (corners excluded).
namespace tri {

/// rotation carrying corner v_1 to v_2
Bary rotate(const Bary& b);

/// weighted-quiver adjacency; boundary arrows weight 1, interior weight 2
std::int64_t qEntry(int n, const Bary& u, const Bary& v);
/// eq-P-tri extended Z/3-invariantly
std::int64_t pEntry(int n, const Bary& u, const Bary& v);
/// eq-trigen-exp extended Z/3-invariantly
std::int64_t kEntry(int n, const Bary& u, const Bary& v);
/// two-case H definition (appendix sign convention)
std::int64_t hEntry(int n, const Bary& u, const Bary& v);

/// small vertices of P3 in canonical order
std::vector<Bary> vertices(int n);

}  // namespace tri

/// one segment of an elongated Y-graph: the face it lies in and the small
/// vertex Y(s) recording it
struct SkeletonSegment {
    int face;
    Bary y;
};

/// Q-bar, P-bar, K-bar, H-bar of a triangulated surface on its small-vertex
/// classes. P/K/H require no interior punctures and no self-glued faces.
class MatrixBundle {
public:
    MatrixBundle(const TriangulatedSurface& s, int n);

    int n() const { return n_; }
    const TriangulatedSurface& surface() const { return *surf_; }
    const VertexModel& model() const { return vm_; }
    bool pkAvailable() const { return pkAvailable_; }

    const Mat& q() const { return q_; }
    const Mat& p() const { return requirePk(), p_; }
    const Mat& k() const { return requirePk(), k_; }
    const Mat& h() const { return requirePk(), h_; }

    /// full segment list of the elongated Y-graph of vertex class u,
    /// starting from its representative `rep` (defaults to the first)
    std::vector<SkeletonSegment> skeletonSegments(int u, int rep = 0) const;
    /// multiset of Y(s) over face tau (includes the main segment when
    /// tau contains u)
    std::vector<Bary> skeleton(int u, int tau) const;

    /// K-bar row of u computed from the given representative of v;
    /// used to check well-definedness across the two adjacent faces
    std::int64_t kEntryVia(int u, int v, int repOfV) const;

private:
    void requirePk() const;
    int n_;
    const TriangulatedSurface* surf_;
    VertexModel vm_;
    bool pkAvailable_;
    Mat q_, p_, k_, h_;
};

/// The full matrix set of (surface, n): reduced matrices on V-bar, extended
/// matrices over the extended surface, and the change-of-variable matrix C.
class SurfaceMatrices {
public:
    SurfaceMatrices(const TriangulatedSurface& s, int n);

    int n() const { return n_; }
    const TriangulatedSurface& surface() const { return surf_; }
    const TriangulatedSurface& extendedSurface() const { return ext_; }
    const MatrixBundle& reduced() const { return *red_; }
    const MatrixBundle& starred() const { return *star_; }   // reduced bundle of S*

    // class indices into starred().model()
    const std::vector<int>& xSet() const { return xIdx_; }
    const std::vector<int>& aSet() const { return aIdx_; }
    const std::vector<int>& reducedSet() const { return rIdx_; }

    bool extendedAvailable() const { return extAvailable_; }
    const Mat& qExt() const { return qx_; }       // V x V
    const Mat& pExt() const { return requireExt(), pa_; }   // V' x V'
    const Mat& kExt() const { return requireExt(), kax_; }  // V' x V
    const Mat& hExt() const { return requireExt(), hxa_; }  // V x V'
    const Mat& cMat() const { return requireExt(), c_; }    // V' x V-bar*

    std::vector<std::string> xIds() const;
    std::vector<std::string> aIds() const;
    std::vector<std::string> reducedIds() const;

    PresentationPtr xPresentation() const { return xPres_; }         // T(Q_lambda)
    PresentationPtr reducedXPresentation() const { return rxPres_; } // T(Q-bar_lambda)
    PresentationPtr aPresentation() const { return requireExt(), aPres_; }
    PresentationPtr reducedAPresentation() const { return requireExt(), raPres_; }

    // writable copies for negative controls in tests
    Mat qReduced, pReduced, kReduced, hReduced;

private:
    void requireExt() const;
    int n_;
    TriangulatedSurface surf_;
    TriangulatedSurface ext_;
    std::unique_ptr<MatrixBundle> red_;
    std::unique_ptr<MatrixBundle> star_;
    std::vector<int> rIdx_, xIdx_, aIdx_;
    bool extAvailable_ = false;
    Mat qx_, pa_, kax_, hxa_, c_;
    PresentationPtr xPres_, rxPres_, aPres_, raPres_;
};

struct IdentityReport {
    struct Item {
        std::string name;
        bool pass;
        std::string counterexample;  // empty when pass
    };
    std::vector<Item> items;
    bool allPass() const;
    std::string str() const;
};

/// n(K - K^t) = P, H^t - H = Q, HK = n Id (reduced and extended),
/// K Q K^t = P, and the PQ block identity.
IdentityReport verifyIdentities(const SurfaceMatrices& m);
/// the reduced/triangle subset, run against explicitly supplied matrices
IdentityReport verifyReducedIdentities(int n, const MatrixBundle& bundle, const Mat& q, const Mat& p,
                                       const Mat& k, const Mat& h);

/// Balanced lattice of a quantum torus layer: membership by the mod-n test
/// on kH, solve by c = kH/n, basis rows from K.
class BalancedLattice {
public:
    BalancedLattice(int n, Mat k, Mat h, std::vector<std::string> ids);

    bool contains(const ExponentVector& kv) const;
    /// c with cK = kv; throws naming the violating vertex if unbalanced
    ExponentVector solve(const ExponentVector& kv) const;
    /// k = cK for a coefficient row c
    ExponentVector fromCoefficients(const ExponentVector& c) const;
    const Mat& basis() const { return k_; }
    int rank() const { return static_cast<int>(ids_.size()); }
    const std::vector<std::string>& ids() const { return ids_; }

private:
    int n_;
    Mat k_, h_;
    std::vector<std::string> ids_;
};

BalancedLattice balancedLattice(const SurfaceMatrices& m, bool reduced);

/// psi: a^k -> x^{kK}, with exact inverse on balanced monomials
class Transition {
public:
    Transition(PresentationPtr aPres, PresentationPtr xPres, Mat k, Mat h, int n);

    const MultLinearHom& forward() const { return fwd_; }
    TorusElement apply(const TorusElement& a) const { return fwd_.apply(a); }
    /// defined exactly on balanced monomials; throws otherwise
    TorusElement inverse(const TorusElement& x) const;

private:
    MultLinearHom fwd_;
    Mat h_;
    int n_;
    PresentationPtr aPres_;
};

Transition transitionPsi(const SurfaceMatrices& m, bool reduced);

}  // namespace qtri
