#include "qtri/structmat.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qtri {

Mat matMul(const Mat& a, const Mat& b) {
    if (a.empty() || b.empty()) return {};
    int r = static_cast<int>(a.size()), m = static_cast<int>(b.size()),
        c = static_cast<int>(b[0].size());
    Mat out(r, std::vector<std::int64_t>(c, 0));
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(a[i].size()) != m) throw std::invalid_argument("matMul: size mismatch");
        for (int t = 0; t < m; ++t) {
            if (a[i][t] == 0) continue;
            for (int j = 0; j < c; ++j) out[i][j] += a[i][t] * b[t][j];
        }
    }
    return out;
}

Mat matTranspose(const Mat& a) {
    if (a.empty()) return {};
    int r = static_cast<int>(a.size()), c = static_cast<int>(a[0].size());
    Mat out(c, std::vector<std::int64_t>(r, 0));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) out[j][i] = a[i][j];
    return out;
}

Mat matScale(const Mat& a, std::int64_t s) {
    Mat out = a;
    for (auto& row : out)
        for (auto& v : row) v *= s;
    return out;
}

Mat matSub(const Mat& a, const Mat& b) {
    Mat out = a;
    for (size_t i = 0; i < out.size(); ++i)
        for (size_t j = 0; j < out[i].size(); ++j) out[i][j] -= b[i][j];
    return out;
}

Mat matIdentity(int r, std::int64_t c) {
    Mat out(r, std::vector<std::int64_t>(r, 0));
    for (int i = 0; i < r; ++i) out[i][i] = c;
    return out;
}

namespace tri {

Bary rotate(const Bary& b) { return {b.k, b.i, b.j}; }

std::vector<Bary> vertices(int n) {
    std::vector<Bary> out;
    for (int i = 0; i <= n; ++i)
        for (int j = 0; i + j <= n; ++j) {
            int k = n - i - j;
            if (i == n || j == n || k == n) continue;
            out.push_back({i, j, k});
        }
    return out;
}

namespace {

// is {u,v} a small edge, and if so: arrow direction and weight.
// Arrows: boundary edges follow the counterclockwise boundary orientation;
// interior edges follow the parallel boundary edge. In coordinates: i=const
// edges point j-increasing, k=const point i-increasing, j=const point
// k-increasing.
std::int64_t arrowTo([[maybe_unused]] int n, const Bary& u, const Bary& v) {
    int di = v.i - u.i, dj = v.j - u.j, dk = v.k - u.k;
    int nz = (di != 0) + (dj != 0) + (dk != 0);
    if (nz != 2 || std::abs(di) > 1 || std::abs(dj) > 1 || std::abs(dk) > 1) return 0;
    bool onBoundary = (u.i == 0 && v.i == 0) || (u.j == 0 && v.j == 0) || (u.k == 0 && v.k == 0);
    std::int64_t w = onBoundary ? 1 : 2;
    if (di == 0) return dj > 0 ? w : -w;   // parallel to e_2
    if (dk == 0) return di > 0 ? w : -w;   // parallel to e_1
    if (dj == 0) return dk > 0 ? w : -w;   // parallel to e_3
    return 0;
}

bool pCond(const Bary& u, const Bary& v) {
    return (u.i <= v.i && u.j <= v.j) || (u.i >= v.i && u.j >= v.j);
}

bool kCond(const Bary& u, const Bary& v) { return v.i <= u.i && v.j >= u.j; }

}  // namespace

std::int64_t qEntry(int n, const Bary& u, const Bary& v) { return arrowTo(n, u, v); }

std::int64_t pEntry(int n, const Bary& u, const Bary& v) {
    bool found = false;
    std::int64_t value = 0;
    Bary a = u, b = v;
    for (int r = 0; r < 3; ++r) {
        if (pCond(a, b)) {
            std::int64_t w = static_cast<std::int64_t>(n) * (a.i * b.j - a.j * b.i);
            if (found && w != value)
                throw std::logic_error("pEntry: rotation-invariant extension is inconsistent");
            found = true;
            value = w;
        }
        a = rotate(a);
        b = rotate(b);
    }
    if (!found) throw std::logic_error("pEntry: no rotation satisfies the slope condition");
    return value;
}

std::int64_t kEntry(int n, const Bary& u, const Bary& v) {
    bool found = false;
    std::int64_t value = 0;
    Bary a = u, b = v;
    for (int r = 0; r < 3; ++r) {
        if (kCond(a, b)) {
            std::int64_t w = static_cast<std::int64_t>(a.j) * b.k +
                             static_cast<std::int64_t>(a.k) * b.i +
                             static_cast<std::int64_t>(b.i) * a.j;
            if (found && w != value)
                throw std::logic_error("kEntry: rotation-invariant extension is inconsistent");
            found = true;
            value = w;
        }
        a = rotate(a);
        b = rotate(b);
    }
    if (!found) throw std::logic_error("kEntry: no rotation applies");
    return value;
}

std::int64_t hEntry([[maybe_unused]] int n, const Bary& u, const Bary& v) {
    // same boundary edge of the standalone triangle
    bool sameEdge = (u.i == 0 && v.i == 0) || (u.j == 0 && v.j == 0) || (u.k == 0 && v.k == 0);
    if (!sameEdge) {
        std::int64_t q = qEntry(n, u, v);
        return -q / 2;
    }
    if (u == v) return 1;
    return arrowTo(n, u, v) > 0 ? -1 : 0;
}

}  // namespace tri

namespace {

int nextSlot(int m) { return m == 3 ? 1 : m + 1; }

int slotCoord(const Bary& b, int slot) {
    switch (slot) {
        case 1: return b.i;
        case 2: return b.j;
        default: return b.k;
    }
}

Bary makeBary(int n, int slotA, int va, int slotB, int vb) {
    int c[4] = {0, 0, 0, 0};
    c[slotA] = va;
    c[slotB] = vb;
    c[6 - slotA - slotB] = n - va - vb;
    return {c[1], c[2], c[3]};
}

// boundary edge (face, slot) containing the class, if any
std::optional<std::pair<EdgeRef, int>> boundaryPosition(const TriangulatedSurface& s, int n,
                                                        const SmallVertex& v) {
    for (const auto& [f, b] : v.reps)
        for (int slot = 1; slot <= 3; ++slot) {
            bool onSlot = (slot == 1 && b.k == 0) || (slot == 2 && b.i == 0) || (slot == 3 && b.j == 0);
            if (onSlot && !s.isGlued({f, slot})) {
                // canonical position t measured from corner v_slot
                int t = 0;
                for (int u = 1; u < n; ++u)
                    if (edgePoint(n, slot, u) == b) { t = u; break; }
                return std::make_pair(EdgeRef{f, slot}, t);
            }
        }
    return std::nullopt;
}

}  // namespace

MatrixBundle::MatrixBundle(const TriangulatedSurface& s, int n)
    : n_(n), surf_(&s), vm_(s, n) {
    const int r = vm_.count();
    pkAvailable_ = !s.hasInteriorPuncture() && !s.hasSelfGluedFace();

    // Q-bar: sum of extensions by zero over faces
    q_.assign(r, std::vector<std::int64_t>(r, 0));
    for (int f = 0; f < s.faceCount(); ++f) {
        auto pts = tri::vertices(n);
        for (const Bary& a : pts)
            for (const Bary& b : pts) {
                std::int64_t w = tri::qEntry(n, a, b);
                if (w != 0) q_[vm_.classOf(f, a)][vm_.classOf(f, b)] += w;
            }
    }

    if (!pkAvailable_) return;

    // skeletons of every class, then K, P, H
    std::vector<std::vector<SkeletonSegment>> sk(r);
    for (int u = 0; u < r; ++u) sk[u] = skeletonSegments(u, 0);

    k_.assign(r, std::vector<std::int64_t>(r, 0));
    for (int u = 0; u < r; ++u)
        for (int v = 0; v < r; ++v) {
            const auto& [vf, vb] = vm_.vertex(v).reps.front();
            std::int64_t acc = 0;
            for (const auto& seg : sk[u])
                if (seg.face == vf) acc += tri::kEntry(n, seg.y, vb);
            k_[u][v] = acc;
        }

    p_.assign(r, std::vector<std::int64_t>(r, 0));
    for (int u = 0; u < r; ++u)
        for (int v = 0; v < r; ++v) {
            std::int64_t acc = 0;
            for (const auto& su : sk[u])
                for (const auto& sv : sk[v])
                    if (su.face == sv.face) acc += tri::pEntry(n, su.y, sv.y);
            p_[u][v] = acc;
        }

    h_.assign(r, std::vector<std::int64_t>(r, 0));
    for (int u = 0; u < r; ++u) {
        auto bu = boundaryPosition(s, n, vm_.vertex(u));
        for (int v = 0; v < r; ++v) {
            auto bv = boundaryPosition(s, n, vm_.vertex(v));
            if (bu && bv && bu->first == bv->first) {
                if (u == v) h_[u][v] = 1;
                else if (bv->second == bu->second - 1) h_[u][v] = -1;  // boundary arrow u -> v
                else h_[u][v] = 0;
            } else {
                if (q_[u][v] % 2 != 0) throw std::logic_error("MatrixBundle: odd off-edge Q entry");
                h_[u][v] = -q_[u][v] / 2;
            }
        }
    }
}

void MatrixBundle::requirePk() const {
    if (!pkAvailable_)
        throw std::invalid_argument(
            "P/K/H matrices need a surface with no interior punctures and no self-glued faces");
}

std::vector<SkeletonSegment> MatrixBundle::skeletonSegments(int u, int rep) const {
    requirePk();
    const auto& reps = vm_.vertex(u).reps;
    if (rep < 0 || rep >= static_cast<int>(reps.size()))
        throw std::invalid_argument("skeletonSegments: representative index out of range");
    const auto& [nu, b] = reps[rep];

    std::vector<SkeletonSegment> out;
    out.push_back({nu, b});  // main segment

    const int cap = 3 * surf_->faceCount() + 3;
    for (int slot = 1; slot <= 3; ++slot) {
        int w = slotCoord(b, slot);
        if (w == 0) continue;  // zero-weight legs are not elongated
        EdgeRef exit{nu, slot};
        int steps = 0;
        while (auto enter = surf_->partner(exit)) {
            if (++steps > cap)
                throw std::logic_error("skeletonSegments: elongation exceeded step cap");
            // enter the next face and turn left: hug the corner shared by the
            // entry edge and the cyclically next one
            int face = enter->face;
            int sIn = enter->slot;
            int sOut = nextSlot(sIn);
            out.push_back({face, makeBary(n_, sIn, n_ - w, sOut, w)});
            exit = EdgeRef{face, sOut};
        }
    }
    return out;
}

std::vector<Bary> MatrixBundle::skeleton(int u, int tau) const {
    std::vector<Bary> out;
    for (const auto& seg : skeletonSegments(u, 0))
        if (seg.face == tau) out.push_back(seg.y);
    std::sort(out.begin(), out.end());
    return out;
}

std::int64_t MatrixBundle::kEntryVia(int u, int v, int repOfV) const {
    requirePk();
    const auto& reps = vm_.vertex(v).reps;
    const auto& [vf, vb] = reps.at(repOfV);
    std::int64_t acc = 0;
    for (const auto& seg : skeletonSegments(u, 0))
        if (seg.face == vf) acc += tri::kEntry(n_, seg.y, vb);
    return acc;
}

SurfaceMatrices::SurfaceMatrices(const TriangulatedSurface& s, int n)
    : n_(n), surf_(s), ext_(s.extended()) {
    red_ = std::make_unique<MatrixBundle>(surf_, n);
    star_ = std::make_unique<MatrixBundle>(ext_, n);

    const auto& vm = star_->model();
    for (int c = 0; c < vm.count(); ++c) {
        const auto& v = vm.vertex(c);
        bool inOriginal = false, onE3Att = false, onE2Att = false;
        for (const auto& [f, b] : v.reps) {
            if (!ext_.isAttachedFace(f)) inOriginal = true;
            else {
                if (b.j == 0) onE3Att = true;
                if (b.i == 0) onE2Att = true;
            }
        }
        if (inOriginal) rIdx_.push_back(c);
        if (!onE3Att) xIdx_.push_back(c);
        if (!onE2Att) aIdx_.push_back(c);
    }

    // Q_lambda: restriction of Q-bar* to V x V
    const Mat& qs = star_->q();
    qx_.assign(xIdx_.size(), std::vector<std::int64_t>(xIdx_.size(), 0));
    for (size_t i = 0; i < xIdx_.size(); ++i)
        for (size_t j = 0; j < xIdx_.size(); ++j) qx_[i][j] = qs[xIdx_[i]][xIdx_[j]];

    xPres_ = std::make_shared<TorusPresentation>(xIds(), qx_);
    rxPres_ = std::make_shared<TorusPresentation>(reducedIds(), red_->q());
    qReduced = red_->q();

    extAvailable_ = red_->pkAvailable();
    if (!extAvailable_) return;

    pReduced = red_->p();
    kReduced = red_->k();
    hReduced = red_->h();

    // C : V' x V-bar*
    const int rs = vm.count();
    c_.assign(aIdx_.size(), std::vector<std::int64_t>(rs, 0));
    for (size_t i = 0; i < aIdx_.size(); ++i) {
        int cls = aIdx_[i];
        c_[i][cls] = 1;
        const auto& v = vm.vertex(cls);
        bool inOriginal = false;
        for (const auto& [f, b] : v.reps)
            if (!ext_.isAttachedFace(f)) inOriginal = true;
        if (!inOriginal) {
            const auto& [f, b] = v.reps.front();
            Bary pb{0, n - b.k, b.k};
            c_[i][vm.classOf(f, pb)] = -1;
        }
    }

    pa_ = matMul(matMul(c_, star_->p()), matTranspose(c_));

    // K_lambda = (C K*)| restriction, with the vanishing check off V
    Mat ck = matMul(c_, star_->k());
    std::vector<bool> inX(rs, false);
    for (int c : xIdx_) inX[c] = true;
    for (size_t i = 0; i < aIdx_.size(); ++i)
        for (int w = 0; w < rs; ++w)
            if (!inX[w] && ck[i][w] != 0)
                throw std::logic_error("SurfaceMatrices: C K* does not vanish at (" +
                                       vm.vertex(aIdx_[i]).id + "," + vm.vertex(w).id + ")");
    kax_.assign(aIdx_.size(), std::vector<std::int64_t>(xIdx_.size(), 0));
    for (size_t i = 0; i < aIdx_.size(); ++i)
        for (size_t j = 0; j < xIdx_.size(); ++j) kax_[i][j] = ck[i][xIdx_[j]];

    // H_lambda: restriction of H-bar* to V x V'
    const Mat& hs = star_->h();
    hxa_.assign(xIdx_.size(), std::vector<std::int64_t>(aIdx_.size(), 0));
    for (size_t i = 0; i < xIdx_.size(); ++i)
        for (size_t j = 0; j < aIdx_.size(); ++j) hxa_[i][j] = hs[xIdx_[i]][aIdx_[j]];

    aPres_ = std::make_shared<TorusPresentation>(aIds(), pa_);
    raPres_ = std::make_shared<TorusPresentation>(reducedIds(), red_->p());
}

void SurfaceMatrices::requireExt() const {
    if (!extAvailable_)
        throw std::invalid_argument(
            "extended matrices need a surface with no interior punctures and no self-glued faces");
}

std::vector<std::string> SurfaceMatrices::xIds() const {
    std::vector<std::string> out;
    for (int c : xIdx_) out.push_back(star_->model().vertex(c).id);
    return out;
}

std::vector<std::string> SurfaceMatrices::aIds() const {
    std::vector<std::string> out;
    for (int c : aIdx_) out.push_back(star_->model().vertex(c).id);
    return out;
}

std::vector<std::string> SurfaceMatrices::reducedIds() const {
    std::vector<std::string> out;
    for (int c : rIdx_) out.push_back(star_->model().vertex(c).id);
    return out;
}

bool IdentityReport::allPass() const {
    for (const auto& it : items)
        if (!it.pass) return false;
    return true;
}

std::string IdentityReport::str() const {
    std::ostringstream os;
    for (const auto& it : items) {
        os << (it.pass ? "PASS" : "FAIL") << "  " << it.name;
        if (!it.pass) os << "  [" << it.counterexample << "]";
        os << "\n";
    }
    return os.str();
}

namespace {

void checkEqual(IdentityReport& rep, const std::string& name, const Mat& a, const Mat& b,
                const std::vector<std::string>& rowIds, const std::vector<std::string>& colIds) {
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j)
            if (a[i][j] != b[i][j]) {
                std::ostringstream os;
                os << "(" << rowIds[i] << "," << colIds[j] << "): " << a[i][j] << " != " << b[i][j];
                rep.items.push_back({name, false, os.str()});
                return;
            }
    rep.items.push_back({name, true, ""});
}

}  // namespace

IdentityReport verifyReducedIdentities(int n, const MatrixBundle& bundle, const Mat& q, const Mat& p,
                                       const Mat& k, const Mat& h) {
    IdentityReport rep;
    auto ids = bundle.model().ids();
    checkEqual(rep, "n(K - K^t) = P", matScale(matSub(k, matTranspose(k)), n), p, ids, ids);
    checkEqual(rep, "H^t - H = Q", matSub(matTranspose(h), h), q, ids, ids);
    checkEqual(rep, "H K = n Id", matMul(h, k), matIdentity(static_cast<int>(ids.size()), n), ids, ids);
    checkEqual(rep, "K Q K^t = P", matMul(matMul(k, q), matTranspose(k)), p, ids, ids);

    // PQ block identity: for interior v, (PQ)(u,v) = -4n^2 delta_{uv}
    Mat pq = matMul(p, q);
    bool pass = true;
    std::string ce;
    for (size_t v = 0; v < ids.size(); ++v) {
        if (bundle.model().vertex(static_cast<int>(v)).onBoundary) continue;
        for (size_t u = 0; u < ids.size(); ++u) {
            std::int64_t want = (u == v) ? -4LL * n * n : 0;
            if (pq[u][v] != want) {
                pass = false;
                std::ostringstream os;
                os << "(" << ids[u] << "," << ids[v] << "): " << pq[u][v] << " != " << want;
                ce = os.str();
                break;
            }
        }
        if (!pass) break;
    }
    rep.items.push_back({"(PQ)|interior column = -4n^2 Id block", pass, ce});
    return rep;
}

IdentityReport verifyIdentities(const SurfaceMatrices& m) {
    IdentityReport rep = verifyReducedIdentities(m.n(), m.reduced(), m.qReduced, m.pReduced,
                                                 m.kReduced, m.hReduced);
    auto xs = m.xIds();
    auto as = m.aIds();
    checkEqual(rep, "H K = n Id (extended)", matMul(m.hExt(), m.kExt()),
               matIdentity(static_cast<int>(xs.size()), m.n()), xs, xs);
    checkEqual(rep, "K Q K^t = P (extended)", matMul(matMul(m.kExt(), m.qExt()), matTranspose(m.kExt())),
               m.pExt(), as, as);
    return rep;
}

BalancedLattice::BalancedLattice(int n, Mat k, Mat h, std::vector<std::string> ids)
    : n_(n), k_(std::move(k)), h_(std::move(h)), ids_(std::move(ids)) {}

bool BalancedLattice::contains(const ExponentVector& kv) const {
    const int cols = h_.empty() ? 0 : static_cast<int>(h_[0].size());
    for (int c = 0; c < cols; ++c) {
        std::int64_t acc = 0;
        for (const auto& [i, v] : kv.entries()) acc += v * h_[i][c];
        if (acc % n_ != 0) return false;
    }
    return true;
}

ExponentVector BalancedLattice::solve(const ExponentVector& kv) const {
    const int cols = h_.empty() ? 0 : static_cast<int>(h_[0].size());
    ExponentVector c;
    for (int j = 0; j < cols; ++j) {
        std::int64_t acc = 0;
        for (const auto& [i, v] : kv.entries()) acc += v * h_[i][j];
        if (acc % n_ != 0)
            throw std::invalid_argument("BalancedLattice::solve: vector unbalanced at vertex " +
                                        ids_[j]);
        if (acc != 0) c.set(j, acc / n_);
    }
    return c;
}

ExponentVector BalancedLattice::fromCoefficients(const ExponentVector& c) const {
    ExponentVector kv;
    const int cols = k_.empty() ? 0 : static_cast<int>(k_[0].size());
    for (int j = 0; j < cols; ++j) {
        std::int64_t acc = 0;
        for (const auto& [i, v] : c.entries()) acc += v * k_[i][j];
        if (acc != 0) kv.set(j, acc);
    }
    return kv;
}

BalancedLattice balancedLattice(const SurfaceMatrices& m, bool reduced) {
    if (reduced)
        return BalancedLattice(m.n(), m.reduced().k(), m.reduced().h(),
                               m.reduced().model().ids());
    return BalancedLattice(m.n(), m.kExt(), m.hExt(), m.aIds());
}

Transition::Transition(PresentationPtr aPres, PresentationPtr xPres, Mat k, Mat h, int n)
    : fwd_(aPres, xPres, k), h_(std::move(h)), n_(n), aPres_(std::move(aPres)) {}

TorusElement Transition::inverse(const TorusElement& x) const {
    TorusElement out(aPres_);
    for (const auto& [kv, coeff] : x.terms()) {
        ExponentVector c;
        for (size_t j = 0; j < h_[0].size(); ++j) {
            std::int64_t acc = 0;
            for (const auto& [i, v] : kv.entries()) acc += v * h_[i][j];
            if (acc % n_ != 0)
                throw std::invalid_argument("Transition::inverse: unbalanced monomial at vertex " +
                                            aPres_->id(static_cast<int>(j)));
            if (acc != 0) c.set(static_cast<int>(j), acc / n_);
        }
        out.addTerm(c, coeff);
    }
    return out;
}

Transition transitionPsi(const SurfaceMatrices& m, bool reduced) {
    if (reduced)
        return Transition(m.reducedAPresentation(), m.reducedXPresentation(), m.reduced().k(),
                          m.reduced().h(), m.n());
    return Transition(m.aPresentation(), m.xPresentation(), m.kExt(), m.hExt(), m.n());
}

}  // namespace qtri
