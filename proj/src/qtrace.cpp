#include "qtri/qtrace.hpp"

#include <algorithm>
#include <sstream>

namespace qtri {

namespace {

Bary rotatePow(const Bary& b, int times) {
    Bary r = b;
    for (int t = 0; t < times % 3; ++t) r = tri::rotate(r);
    return r;
}

struct Pt {
    std::int64_t x, y;
};

// plane embedding scaled by 6 so that centroids and midpoints are integral
Pt vertexPt(const Bary& b) { return {12 * b.j + 6 * b.i, 6 * b.i}; }
Pt upPt(const Bary& u) { return {12 * u.j + 6 * u.i + 6, 6 * u.i + 2}; }
Pt downPt(const Bary& d) { return {12 * d.j + 6 * d.i + 12, 6 * d.i + 4}; }
Pt midPt(const Bary& a, const Bary& b) {
    Pt pa = vertexPt(a), pb = vertexPt(b);
    return {(pa.x + pb.x) / 2, (pa.y + pb.y) / 2};
}

std::int64_t cross(const Pt& o, const Pt& a, const Pt& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

bool onSegment(const Pt& p, const Pt& a, const Pt& b) {
    if (cross(a, b, p) != 0) return false;
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

// winding number; nonzero means strictly inside
int winding(const Pt& p, const std::vector<Pt>& poly) {
    int wn = 0;
    for (size_t t = 0; t < poly.size(); ++t) {
        const Pt& a = poly[t];
        const Pt& b = poly[(t + 1) % poly.size()];
        if (a.y <= p.y) {
            if (b.y > p.y && cross(a, b, p) > 0) ++wn;
        } else {
            if (b.y <= p.y && cross(a, b, p) < 0) --wn;
        }
    }
    return wn;
}

// enumeration in the v_1 frame; the public functions rotate afterwards
std::vector<CompatiblePath> enumerateV1(int n, CornerOrientation orientation, int i, int j) {
    std::vector<CompatiblePath> out;
    if (i < j) return out;  // bad arc
    std::vector<Bary> cur;
    Bary start, goal;
    if (orientation == CornerOrientation::CCW) {
        start = {n - i, 0, i - 1};
        goal = {n - j, j - 1, 0};
    } else {
        start = {j - 1, n - j, 0};
        goal = {i - 1, 0, n - i};
    }
    // steps: CCW  (a,b,c) -> (a+1,b,c-1) then (a,b+1,c-1)
    //        CW   (a,b,c) -> (a+1,b-1,c) then (a,b-1,c+1)
    auto rec = [&](auto&& self, const Bary& u) -> void {
        cur.push_back(u);
        if (u == goal) {
            out.push_back({cur});
        } else if (orientation == CornerOrientation::CCW) {
            if (u.k > 0) {
                self(self, Bary{u.i + 1, u.j, u.k - 1});
                self(self, Bary{u.i, u.j + 1, u.k - 1});
            }
        } else {
            if (u.j > 0) {
                self(self, Bary{u.i + 1, u.j - 1, u.k});
                self(self, Bary{u.i, u.j - 1, u.k + 1});
            }
        }
        cur.pop_back();
    };
    rec(rec, start);
    return out;
}

// n on every small vertex on the left of the path, 0 otherwise (v_1 frame)
std::map<Bary, std::int64_t> leftRegion(int n, CornerOrientation orientation, int i, int j,
                                        const std::vector<Bary>& ups) {
    std::vector<Pt> poly;
    if (orientation == CornerOrientation::CCW) {
        // entry midpoint on e_3 of U(n-i,0,i-1)
        poly.push_back(midPt({n - i + 1, 0, i - 1}, {n - i, 0, i}));
        for (size_t t = 0; t < ups.size(); ++t) {
            poly.push_back(upPt(ups[t]));
            if (t + 1 < ups.size()) poly.push_back(downPt({ups[t].i, ups[t].j, ups[t].k - 1}));
        }
        poly.push_back(midPt({n - j + 1, j - 1, 0}, {n - j, j, 0}));
        // close counterclockwise: exit on e_1 -> v_1 -> entry on e_3
        poly.push_back(vertexPt({n, 0, 0}));
    } else {
        // entry midpoint on e_1 of U(j-1,n-j,0)
        poly.push_back(midPt({j, n - j, 0}, {j - 1, n - j + 1, 0}));
        for (size_t t = 0; t < ups.size(); ++t) {
            poly.push_back(upPt(ups[t]));
            if (t + 1 < ups.size()) poly.push_back(downPt({ups[t].i, ups[t].j - 1, ups[t].k}));
        }
        poly.push_back(midPt({i, 0, n - i}, {i - 1, 0, n - i + 1}));
        // close counterclockwise: exit on e_3 -> v_3 -> v_2 -> entry on e_1
        poly.push_back(vertexPt({0, 0, n}));
        poly.push_back(vertexPt({0, n, 0}));
    }

    std::map<Bary, std::int64_t> region;
    for (const Bary& v : tri::vertices(n)) {
        Pt p = vertexPt(v);
        bool boundary = false;
        for (size_t t = 0; t < poly.size() && !boundary; ++t)
            boundary = onSegment(p, poly[t], poly[(t + 1) % poly.size()]);
        if (boundary || winding(p, poly) != 0) region[v] = n;
    }
    return region;
}

std::map<Bary, std::int64_t> pathExponentV1(int n, CornerOrientation orientation, int i, int j,
                                            const std::vector<Bary>& ups) {
    auto k = leftRegion(n, orientation, i, j, ups);
    for (const Bary& v : tri::vertices(n)) {
        std::int64_t sub = (orientation == CornerOrientation::CCW) ? v.i : (v.j + v.k);
        if (sub != 0) k[v] -= sub;
        if (k.count(v) && k[v] == 0) k.erase(v);
    }
    return k;
}

int stepsOfArc(const StatedCornerArc& arc) { return (arc.corner - 1) % 3; }

}  // namespace

std::vector<CompatiblePath> compatiblePaths(int n, const StatedCornerArc& arc) {
    if (arc.corner < 1 || arc.corner > 3) throw std::invalid_argument("corner must be 1, 2 or 3");
    if (arc.i < 1 || arc.i > n || arc.j < 1 || arc.j > n)
        throw std::invalid_argument("states must lie in 1..n");
    auto paths = enumerateV1(n, arc.orientation, arc.i, arc.j);
    int r = stepsOfArc(arc);
    for (auto& p : paths)
        for (auto& u : p.upTriangles) u = rotatePow(u, r);
    return paths;
}

std::map<Bary, std::int64_t> pathExponent(int n, const CompatiblePath& p, const StatedCornerArc& arc) {
    // undo the corner rotation, compute in the v_1 frame, rotate back
    int r = stepsOfArc(arc);
    int back = (3 - r) % 3;
    std::vector<Bary> ups;
    for (const Bary& u : p.upTriangles) ups.push_back(rotatePow(u, back));
    auto kv1 = pathExponentV1(n, arc.orientation, arc.i, arc.j, ups);
    std::map<Bary, std::int64_t> out;
    for (const auto& [b, v] : kv1) out[rotatePow(b, r)] = v;
    return out;
}

const TriangulatedSurface& standaloneTriangle() {
    static TriangulatedSurface s({"t"}, {});
    return s;
}

PresentationPtr trianglePresentation(int n) {
    static std::map<int, PresentationPtr> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    MatrixBundle b(standaloneTriangle(), n);
    auto p = std::make_shared<TorusPresentation>(b.model().ids(), b.q());
    cache[n] = p;
    return p;
}

namespace {

std::string baryId(const std::string& face, const Bary& b) {
    std::ostringstream os;
    os << face << ":" << b.i << "," << b.j << "," << b.k;
    return os.str();
}

TorusElement traceCornerInFace(int n, const StatedCornerArc& arc, const std::string& face,
                               const PresentationPtr& pres) {
    TorusElement acc(pres);
    for (const auto& p : compatiblePaths(n, arc)) {
        auto kmap = pathExponent(n, p, arc);
        ExponentVector k;
        for (const auto& [b, v] : kmap) {
            int idx = pres->indexOf(baryId(face, b));
            if (idx < 0) throw std::logic_error("traceCorner: vertex missing from presentation");
            k.set(idx, v);
        }
        acc.addTerm(k, LaurentScalar(1));
    }
    return acc;
}

}  // namespace

TorusElement traceCorner(int n, const StatedCornerArc& arc) {
    return traceCornerInFace(n, arc, "t", trianglePresentation(n));
}

QMatrix transportMatrix(int n, int corner, CornerOrientation orientation) {
    auto pres = trianglePresentation(n);
    QMatrix m(pres, n, n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            StatedCornerArc arc{corner, orientation,
                                orientation == CornerOrientation::CCW ? i : j,
                                orientation == CornerOrientation::CCW ? j : i};
            m.at(i - 1, j - 1) = traceCorner(n, arc);
        }
    return m;
}

LaurentScalar rMatrixEntry(int n, int a, int b, int c, int d) {
    LaurentScalar v;
    if (b == d && a == c) v += qPower(n, a == b ? 1 : 0);
    if (b < d && b == c && a == d) v += qPower(n, 1) - qPower(n, -1);
    return v * qPower(n, -1, n);
}

ExchangeReport exchangeRelationCheck(int n) {
    std::vector r(n, std::vector(n, std::vector(n, std::vector(n, LaurentScalar()))));
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
            for (int c = 1; c <= n; ++c)
                for (int d = 1; d <= n; ++d) r[a - 1][b - 1][c - 1][d - 1] = rMatrixEntry(n, a, b, c, d);
    return exchangeRelationCheckWith(n, r);
}

ExchangeReport exchangeRelationCheckWith(
    int n, const std::vector<std::vector<std::vector<std::vector<LaurentScalar>>>>& r) {
    QMatrix m1 = transportMatrix(n, 1, CornerOrientation::CCW);
    QMatrix mb2 = transportMatrix(n, 2, CornerOrientation::CW);
    ExchangeReport rep;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k)
                for (int l = 1; l <= n; ++l) {
                    TorusElement lhs = m1.at(i - 1, j - 1) * mb2.at(k - 1, l - 1);
                    TorusElement rhs(m1.presentation());
                    for (int jp = 1; jp <= n; ++jp)
                        for (int lp = 1; lp <= n; ++lp) {
                            const LaurentScalar& rc = r[jp - 1][lp - 1][j - 1][l - 1];
                            if (rc.isZero()) continue;
                            rhs = rhs + mb2.at(k - 1, lp - 1) * m1.at(i - 1, jp - 1) * rc;
                        }
                    if (lhs != rhs) rep.failures.push_back({i, j, k, l});
                }
    return rep;
}

namespace {

std::optional<std::int64_t> shiftBetween(const LaurentScalar& a, const LaurentScalar& b) {
    // s with a = b * hq^s
    if (a.terms().size() != b.terms().size() || a.terms().empty()) return std::nullopt;
    std::int64_t s = a.terms().begin()->first - b.terms().begin()->first;
    for (auto ita = a.terms().begin(), itb = b.terms().begin(); ita != a.terms().end();
         ++ita, ++itb)
        if (ita->first - itb->first != s || ita->second != itb->second) return std::nullopt;
    return s;
}

}  // namespace

TorusElement weylProduct(const TorusElement& a, const TorusElement& b) {
    TorusElement ab = a * b;
    if (ab.isZero()) return ab;
    TorusElement ba = b * a;
    const auto& [k, c1] = *ab.terms().begin();
    LaurentScalar c2 = ba.coeff(k);
    auto s = shiftBetween(c1, c2);
    if (!s || *s % 2 != 0 || !(ab == ba * LaurentScalar::hqPow(*s)))
        throw std::invalid_argument("weylProduct: factors do not q-commute");
    return ab * LaurentScalar::hqPow(-*s / 2);
}

TorusElement traceFrame(const SurfaceMatrices& m, const std::string& vertexId, bool reduced) {
    if (reduced) {
        auto pres = m.reducedXPresentation();
        auto ids = m.reducedIds();
        auto it = std::find(ids.begin(), ids.end(), vertexId);
        if (it == ids.end()) throw std::invalid_argument("traceFrame: unknown reduced vertex " + vertexId);
        int row = static_cast<int>(it - ids.begin());
        ExponentVector k;
        for (size_t c = 0; c < ids.size(); ++c)
            if (m.reduced().k()[row][c] != 0) k.set(static_cast<int>(c), m.reduced().k()[row][c]);
        return TorusElement::monomial(pres, k);
    }
    auto ids = m.aIds();
    auto it = std::find(ids.begin(), ids.end(), vertexId);
    if (it == ids.end()) throw std::invalid_argument("traceFrame: vertex not in the A-set: " + vertexId);
    int row = static_cast<int>(it - ids.begin());
    ExponentVector k;
    auto xids = m.xIds();
    for (size_t c = 0; c < xids.size(); ++c)
        if (m.kExt()[row][c] != 0) k.set(static_cast<int>(c), m.kExt()[row][c]);
    return TorusElement::monomial(m.xPresentation(), k);
}

bool balancedOnTriangle(int n, const std::map<Bary, std::int64_t>& k) {
    auto val = [&](const Bary& b) {
        auto it = k.find(b);
        return it == k.end() ? 0 : it->second;
    };
    auto verts = tri::vertices(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            bool ok = true;
            for (const Bary& v : verts)
                if (((val(v) - a * v.i - b * v.j) % n + n) % n != 0) { ok = false; break; }
            if (ok) return true;
        }
    return false;
}

namespace {

bool attachConditions(int n, const std::map<Bary, std::int64_t>& k, bool requireConstant) {
    auto val = [&](const Bary& b) {
        auto it = k.find(b);
        return it == k.end() ? 0 : it->second;
    };
    for (const Bary& v : tri::vertices(n)) {
        if (v.j == 0 && val(v) != 0) return false;
        if (v.j >= 1 && v.i >= 1) {
            // next vertex along the j-line as k grows
            std::int64_t a = val(v), b = val({v.i - 1, v.j, v.k + 1});
            if (requireConstant ? (a != b) : (b > a)) return false;
        }
    }
    return true;
}

}  // namespace

bool inAttachB(int n, const std::map<Bary, std::int64_t>& k) {
    return balancedOnTriangle(n, k) && attachConditions(n, k, false);
}

bool inAttachBbar(int n, const std::map<Bary, std::int64_t>& k) {
    return balancedOnTriangle(n, k) && attachConditions(n, k, true);
}

std::map<Bary, std::int64_t> attachGenerator(int n, const Bary& v) {
    if (v.j == 0) throw std::invalid_argument("attachGenerator: j must be nonzero");
    std::map<Bary, std::int64_t> out;
    for (const Bary& w : tri::vertices(n))
        if (w.j == v.j && w.k >= v.k) out[w] = n;
    return out;
}

LaurentScalar epsilonX(int n, const TorusElement& e) {
    auto pres = trianglePresentation(n);
    if (!e.presentation() || !e.presentation()->sameAs(*pres))
        throw std::invalid_argument("epsilonX: element not over the triangle torus");
    // index -> bary table
    std::vector<Bary> baryOf;
    for (const Bary& b : tri::vertices(n)) baryOf.push_back(b);
    LaurentScalar out;
    for (const auto& [k, c] : e.terms()) {
        std::map<Bary, std::int64_t> kv;
        for (const auto& [i, v] : k.entries()) kv[baryOf[i]] = v;
        if (!inAttachB(n, kv))
            throw std::invalid_argument("epsilonX: monomial exponent outside the attach monoid B");
        if (inAttachBbar(n, kv)) out += c;
    }
    return out;
}

TraceContext::TraceContext(const TriangulatedSurface& s, int n) : mats_(s, n) {}

namespace {

PresentationPtr tensorPresentation(const TriangulatedSurface& s, int n) {
    std::vector<std::string> ids;
    auto verts = tri::vertices(n);
    for (const auto& f : s.faces())
        for (const Bary& b : verts) ids.push_back(baryId(f, b));
    const int per = static_cast<int>(verts.size());
    const int total = per * s.faceCount();
    std::vector<std::vector<std::int64_t>> q(total, std::vector<std::int64_t>(total, 0));
    for (int f = 0; f < s.faceCount(); ++f)
        for (int a = 0; a < per; ++a)
            for (int b = 0; b < per; ++b)
                q[f * per + a][f * per + b] = tri::qEntry(n, verts[a], verts[b]);
    return std::make_shared<TorusPresentation>(ids, q);
}

struct PassArc {
    std::string face;
    StatedCornerArc arc;  // states filled per state assignment
};

}  // namespace

TorusElement TraceContext::traceOn(const TriangulatedSurface& s, const VertexModel& vm,
                                   PresentationPtr glued, const SimpleArcSpec& arc) const {
    const int nn = n();
    const int m = static_cast<int>(arc.passes.size());
    if (m == 0) throw std::invalid_argument("traceArc: empty pass list");
    for (const auto& p : arc.passes) {
        if (p.entrySlot < 1 || p.entrySlot > 3 || p.exitSlot < 1 || p.exitSlot > 3 ||
            p.entrySlot == p.exitSlot)
            throw std::invalid_argument("traceArc: invalid entry/exit slots");
        cornerOfSlots(p.entrySlot, p.exitSlot);  // validates adjacency
    }
    auto faceIdx = [&](const std::string& name) { return s.faceIndex(name); };
    // endpoints on boundary, consecutive passes across glued edges
    if (s.isGlued({faceIdx(arc.passes.front().face), arc.passes.front().entrySlot}))
        throw std::invalid_argument("traceArc: arc must start on a boundary edge");
    if (s.isGlued({faceIdx(arc.passes.back().face), arc.passes.back().exitSlot}))
        throw std::invalid_argument("traceArc: arc must end on a boundary edge");
    for (int t = 0; t + 1 < m; ++t) {
        EdgeRef out{faceIdx(arc.passes[t].face), arc.passes[t].exitSlot};
        auto p = s.partner(out);
        if (!p || p->face != faceIdx(arc.passes[t + 1].face) || p->slot != arc.passes[t + 1].entrySlot)
            throw std::invalid_argument("traceArc: consecutive passes do not share a glued edge (pass " +
                                        std::to_string(t) + ")");
    }
    if (arc.startState < 1 || arc.startState > nn || arc.endState < 1 || arc.endState > nn)
        throw std::invalid_argument("traceArc: endpoint states out of range");

    PresentationPtr tensor = tensorPresentation(s, nn);

    // cache of per-pass corner traces, keyed by (pass, inState, outState)
    std::map<std::tuple<int, int, int>, TorusElement> cache;
    auto passElement = [&](int t, int sIn, int sOut) -> const TorusElement& {
        auto key = std::make_tuple(t, sIn, sOut);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        const auto& p = arc.passes[t];
        int corner = cornerOfSlots(p.entrySlot, p.exitSlot);
        StatedCornerArc ca;
        ca.corner = corner;
        if (p.exitSlot == corner) {  // entered the left edge e_{corner-1}
            ca.orientation = CornerOrientation::CCW;
            ca.i = sIn;
            ca.j = sOut;
        } else {
            ca.orientation = CornerOrientation::CW;
            ca.i = sOut;
            ca.j = sIn;
        }
        return cache.emplace(key, traceCornerInFace(nn, ca, p.face, tensor)).first->second;
    };

    // sum over internal edge states
    std::vector<int> states(m + 1, 1);
    states[0] = arc.startState;
    states[m] = arc.endState;
    TorusElement total(tensor);
    std::vector<int> internal(std::max(0, m - 1), 1);
    while (true) {
        for (int t = 0; t < m - 1; ++t) states[t + 1] = internal[t];
        TorusElement prod = passElement(0, states[0], states[1]);
        for (int t = 1; t < m && !prod.isZero(); ++t)
            prod = prod * passElement(t, states[t], states[t + 1]);
        total = total + prod;
        int carry = 0;
        while (carry < m - 1 && ++internal[carry] > nn) internal[carry++] = 1;
        if (carry >= m - 1) break;
    }

    // matching condition, then fold onto the glued torus
    TorusElement folded(glued);
    for (const auto& [k, c] : total.terms()) {
        ExponentVector kg;
        for (int cls = 0; cls < vm.count(); ++cls) {
            const auto& reps = vm.vertex(cls).reps;
            std::int64_t common = 0;
            bool first = true;
            for (const auto& [f, b] : reps) {
                std::int64_t v = k.at(tensor->indexOf(baryId(s.faces()[f], b)));
                if (first) { common = v; first = false; }
                else if (v != common)
                    throw std::logic_error("traceArc: matching condition violated at " +
                                           vm.vertex(cls).id + " (normalization bug)");
            }
            if (common != 0) {
                int idx = glued->indexOf(vm.vertex(cls).id);
                if (idx < 0) throw std::logic_error("traceArc: fold target missing vertex");
                kg.set(idx, common);
            }
        }
        folded.addTerm(kg, c);
    }
    return folded;
}

TorusElement TraceContext::traceArc(const SimpleArcSpec& arc, bool extended) const {
    if (!extended)
        return traceOn(mats_.surface(), mats_.reduced().model(), mats_.reducedXPresentation(), arc);

    // reroute endpoints through the attached triangles: e -> e_2 of the
    // attachment, entering/leaving across the attaching edge e_1
    const TriangulatedSurface& ext = mats_.extendedSurface();
    SimpleArcSpec lifted = arc;
    const auto& first = arc.passes.front();
    const auto& last = arc.passes.back();
    std::string attStart = first.face + "@e" + std::to_string(first.entrySlot);
    std::string attEnd = last.face + "@e" + std::to_string(last.exitSlot);
    lifted.passes.insert(lifted.passes.begin(), {attStart, 2, 1});
    lifted.passes.push_back({attEnd, 1, 2});

    auto starPres = std::make_shared<TorusPresentation>(mats_.starred().model().ids(),
                                                        mats_.starred().q());
    TorusElement overStar = traceOn(ext, mats_.starred().model(), starPres, lifted);

    // restrict onto T(Q_lambda): exponents vanish on the e_3 vertices of the
    // attached triangles, so the support lies in the X-vertex set
    auto xp = mats_.xPresentation();
    TorusElement out(xp);
    for (const auto& [k, c] : overStar.terms()) {
        ExponentVector kx;
        for (const auto& [i, v] : k.entries()) {
            int idx = xp->indexOf(starPres->id(i));
            if (idx < 0)
                throw std::logic_error("traceArc: extended trace has support off the X-vertex set");
            kx.set(idx, v);
        }
        out.addTerm(kx, c);
    }
    return out;
}

TorusElement TraceContext::projection(const TorusElement& e) const {
    auto xp = mats_.xPresentation();
    if (!e.presentation() || !e.presentation()->sameAs(*xp))
        throw std::invalid_argument("projection: element not over the extended X-torus");
    const auto& ext = mats_.extendedSurface();
    const auto& vm = mats_.starred().model();
    auto rp = mats_.reducedXPresentation();
    const int nn = n();

    TorusElement out(rp);
    for (const auto& [k, c] : e.terms()) {
        bool allBbar = true;
        for (int f : ext.attachedFaces()) {
            std::map<Bary, std::int64_t> pull;
            for (const Bary& b : tri::vertices(nn)) {
                int cls = vm.classOf(f, b);
                int idx = xp->indexOf(vm.vertex(cls).id);
                std::int64_t v = idx < 0 ? 0 : k.at(idx);
                if (v != 0) pull[b] = v;
            }
            if (!inAttachB(nn, pull))
                throw std::invalid_argument("projection: monomial exponent outside B_lambda at face " +
                                            ext.faces()[f]);
            if (!inAttachBbar(nn, pull)) allBbar = false;
        }
        if (!allBbar) continue;
        ExponentVector kr;
        for (int i = 0; i < rp->rank(); ++i) {
            int idx = xp->indexOf(rp->id(i));
            std::int64_t v = idx < 0 ? 0 : k.at(idx);
            if (v != 0) kr.set(i, v);
        }
        out.addTerm(kr, c);
    }
    return out;
}

TorusElement TraceContext::traceArcA(const SimpleArcSpec& arc, bool extended) const {
    Transition psi = transitionPsi(mats_, !extended);
    return psi.inverse(traceArc(arc, extended));
}

TorusElement TraceContext::traceFrameA(const std::string& vertexId, bool reduced) const {
    Transition psi = transitionPsi(mats_, reduced);
    return psi.inverse(traceFrame(mats_, vertexId, reduced));
}

MultLinearHom TraceContext::cutMap(const EdgeRef& interiorEdge) const {
    const TriangulatedSurface& s = mats_.surface();
    auto p = s.partner(interiorEdge);
    if (!p) throw std::invalid_argument("cutMap: edge is not interior");

    std::vector<Gluing> remaining;
    for (const auto& g : s.gluings())
        if (!(g.a == interiorEdge || g.b == interiorEdge)) remaining.push_back(g);
    TriangulatedSurface cut(s.faces(), remaining);

    MatrixBundle cutBundle(cut, n());
    auto cutPres = std::make_shared<TorusPresentation>(cutBundle.model().ids(), cutBundle.q());

    const auto& vmS = mats_.reduced().model();
    const auto& vmC = cutBundle.model();
    std::vector<std::vector<std::int64_t>> h(vmS.count(), std::vector<std::int64_t>(vmC.count(), 0));
    for (int w = 0; w < vmC.count(); ++w) {
        int u = -1;
        for (const auto& [f, b] : vmC.vertex(w).reps) {
            int cls = vmS.classOf(f, b);
            if (u == -1) u = cls;
            else if (u != cls) throw std::logic_error("cutMap: inconsistent class projection");
        }
        h[u][w] = 1;
    }
    return MultLinearHom(mats_.reducedXPresentation(), cutPres, h);
}

bool TraceContext::inCutImage(const MultLinearHom& cut, const TorusElement& e) const {
    const auto& h = cut.h();
    for (const auto& [k, c] : e.terms()) {
        for (const auto& row : h) {
            std::int64_t common = 0;
            bool first = true;
            for (size_t w = 0; w < row.size(); ++w) {
                if (row[w] == 0) continue;
                std::int64_t v = k.at(static_cast<int>(w));
                if (first) { common = v; first = false; }
                else if (v != common) return false;
            }
        }
    }
    return true;
}

WeightVector TraceContext::boundaryWeight(const SimpleArcSpec& arc, const EdgeRef& e) const {
    const TriangulatedSurface& s = mats_.surface();
    if (s.isGlued(e)) throw std::invalid_argument("boundaryWeight: edge is not a boundary edge");
    const int nn = n();
    WeightVector w(nn);
    EdgeRef start{s.faceIndex(arc.passes.front().face), arc.passes.front().entrySlot};
    EdgeRef end{s.faceIndex(arc.passes.back().face), arc.passes.back().exitSlot};
    // the arc leaves the surface at its endpoint (outgoing): +w_{sbar};
    // it enters at its start point (incoming): -w_s
    if (start == e) w = w - WeightVector::basis(nn, arc.startState);
    if (end == e) w = w + WeightVector::basis(nn, nn + 1 - arc.endState);
    return w;
}

std::string TraceContext::boundaryVertexId(const EdgeRef& e, int i) const {
    const int nn = n();
    if (i < 1 || i > nn - 1) throw std::invalid_argument("boundaryVertexId: index out of range");
    const auto& vm = mats_.reduced().model();
    int cls = vm.classOf(e.face, edgePoint(nn, e.slot, nn - i));
    return vm.vertex(cls).id;
}

}  // namespace qtri
