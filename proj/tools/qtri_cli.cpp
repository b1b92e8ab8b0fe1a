#include "qtri/json_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace qtri;

Json loadJson(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    Json j;
    in >> j;
    return j;
}

struct Common {
    std::string surfacePath;
    int n = 0;
    std::string out = "json";
};

SurfaceInput loadSurface(const Common& c) {
    if (c.surfacePath.empty()) throw std::invalid_argument("--surface is required");
    SurfaceInput s = parseSurface(loadJson(c.surfacePath));
    return s;
}

int effectiveN(const Common& c, const SurfaceInput& s) {
    if (c.n > 0) return c.n;
    if (s.n) return *s.n;
    throw std::invalid_argument("no n given (flag --n or surface \"n\" field)");
}

void emit(const Common& c, const Json& j, const std::string& text) {
    if (c.out == "text") std::cout << text << "\n";
    else std::cout << j.dump(2) << "\n";
}

CornerOrientation parseOrientation(const std::string& s) {
    if (s == "ccw") return CornerOrientation::CCW;
    if (s == "cw") return CornerOrientation::CW;
    throw std::invalid_argument("--oriented must be ccw or cw");
}

int runMatrices(const Common& c) {
    SurfaceInput s = loadSurface(c);
    SurfaceMatrices m(s.surface, effectiveN(c, s));
    auto rids = m.reducedIds();
    Json j{{"Q", matrixToJson(m.reduced().q(), rids, rids)}};
    if (m.extendedAvailable()) {
        j["P"] = matrixToJson(m.reduced().p(), rids, rids);
        j["K"] = matrixToJson(m.reduced().k(), rids, rids);
        j["H"] = matrixToJson(m.reduced().h(), rids, rids);
        auto xids = m.xIds();
        auto aids = m.aIds();
        auto sids = m.starred().model().ids();
        j["Q_ext"] = matrixToJson(m.qExt(), xids, xids);
        j["P_ext"] = matrixToJson(m.pExt(), aids, aids);
        j["K_ext"] = matrixToJson(m.kExt(), aids, xids);
        j["H_ext"] = matrixToJson(m.hExt(), xids, aids);
        j["C"] = matrixToJson(m.cMat(), aids, sids);
    }
    emit(c, j, j.dump(2));
    return 0;
}

int runVerify(const Common& c) {
    SurfaceInput s = loadSurface(c);
    SurfaceMatrices m(s.surface, effectiveN(c, s));
    IdentityReport rep = verifyIdentities(m);
    emit(c, reportToJson(rep), rep.str());
    return rep.allPass() ? 0 : 1;
}

int runBalanced(const Common& c, const std::string& vectorJson, bool extended) {
    SurfaceInput s = loadSurface(c);
    SurfaceMatrices m(s.surface, effectiveN(c, s));
    BalancedLattice lat = balancedLattice(m, !extended);
    auto pres = extended ? m.xPresentation() : m.reducedXPresentation();
    if (vectorJson.empty()) {
        Json j{{"basis", matrixToJson(lat.basis(), lat.ids(),
                                      extended ? m.xIds() : m.reducedIds())}};
        emit(c, j, j.dump(2));
        return 0;
    }
    Json vj = Json::parse(vectorJson);
    ExponentVector k;
    for (auto it = vj.begin(); it != vj.end(); ++it) {
        int idx = pres->indexOf(it.key());
        if (idx < 0) throw std::invalid_argument("unknown vertex id " + it.key());
        k.set(idx, it.value().get<std::int64_t>());
    }
    bool member = lat.contains(k);
    Json j{{"balanced", member}};
    if (member) {
        Json sol = Json::object();
        ExponentVector cvec = lat.solve(k);
        for (const auto& [i, v] : cvec.entries()) sol[lat.ids()[i]] = v;
        j["solve"] = sol;
    }
    emit(c, j, j.dump(2));
    return 0;
}

int runPaths(const Common& c, int corner, const std::string& oriented, int i, int j) {
    StatedCornerArc arc{corner, parseOrientation(oriented), i, j};
    auto paths = compatiblePaths(c.n, arc);
    Json out = Json::array();
    for (const auto& p : paths) {
        Json tris = Json::array();
        for (const Bary& u : p.upTriangles) tris.push_back({u.i, u.j, u.k});
        out.push_back({{"triangles", tris}});
    }
    Json top{{"count", paths.size()}, {"paths", out}};
    emit(c, top, top.dump(2));
    return 0;
}

int runCorner(const Common& c, int corner, const std::string& oriented, int i, int j) {
    StatedCornerArc arc{corner, parseOrientation(oriented), i, j};
    TorusElement e = traceCorner(c.n, arc);
    emit(c, elementToJson(e), elementToText(e));
    return 0;
}

int runTransport(const Common& c, int corner, const std::string& oriented) {
    QMatrix m = transportMatrix(c.n, corner, parseOrientation(oriented));
    Json j = qmatrixToJson(m);
    emit(c, j, j.dump(2));
    return 0;
}

int runArc(const Common& c, const std::string& arcPath, bool extended, bool project) {
    SurfaceInput s = loadSurface(c);
    TraceContext ctx(s.surface, effectiveN(c, s));
    SimpleArcSpec arc = parseArc(loadJson(arcPath));
    TorusElement e = ctx.traceArc(arc, extended || project);
    if (project) e = ctx.projection(e);
    emit(c, elementToJson(e), elementToText(e));
    return 0;
}

int runFrame(const Common& c, const std::string& vertex, bool extended, bool aTorus) {
    SurfaceInput s = loadSurface(c);
    SurfaceMatrices m(s.surface, effectiveN(c, s));
    TorusElement e = traceFrame(m, vertex, !extended);
    if (aTorus) {
        Transition psi = transitionPsi(m, !extended);
        e = psi.inverse(e);
    }
    emit(c, elementToJson(e), elementToText(e));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantum tori and SL_n quantum traces of triangulated surfaces"};
    app.require_subcommand(1);

    Common common;
    int corner = 1, si = 1, sj = 1;
    std::string oriented = "ccw", arcPath, vectorJson, vertex;
    bool extended = false, project = false, aTorus = false;

    auto addCommon = [&](CLI::App* sub, bool needsSurface) {
        if (needsSurface) sub->add_option("--surface", common.surfacePath, "surface JSON file");
        sub->add_option("--n", common.n, "rank parameter n of SL_n");
        sub->add_option("--out", common.out, "output format: json or text")
            ->check(CLI::IsMember({"json", "text"}));
    };

    auto* cmdMatrices = app.add_subcommand("matrices", "structure matrices of a surface");
    addCommon(cmdMatrices, true);

    auto* cmdVerify = app.add_subcommand("verify", "matrix identity suite");
    addCommon(cmdVerify, true);

    auto* cmdBalanced = app.add_subcommand("balanced", "balanced lattice: basis or membership");
    addCommon(cmdBalanced, true);
    cmdBalanced->add_option("--vector", vectorJson, "exponent vector as JSON {\"id\":int,...}");
    cmdBalanced->add_flag("--extended", extended, "use the extended lattice");

    auto* cmdPaths = app.add_subcommand("paths", "compatible paths of a stated corner arc");
    addCommon(cmdPaths, false);
    cmdPaths->add_option("--corner", corner)->check(CLI::Range(1, 3));
    cmdPaths->add_option("--oriented", oriented);
    cmdPaths->add_option("--i", si);
    cmdPaths->add_option("--j", sj);

    auto* cmdCorner = app.add_subcommand("corner", "X-trace of a stated corner arc");
    addCommon(cmdCorner, false);
    cmdCorner->add_option("--corner", corner)->check(CLI::Range(1, 3));
    cmdCorner->add_option("--oriented", oriented);
    cmdCorner->add_option("--i", si);
    cmdCorner->add_option("--j", sj);

    auto* cmdTransport = app.add_subcommand("transport", "transport matrix at a corner");
    addCommon(cmdTransport, false);
    cmdTransport->add_option("--corner", corner)->check(CLI::Range(1, 3));
    cmdTransport->add_option("--oriented", oriented);

    auto* cmdArc = app.add_subcommand("arc", "trace of a simple stated arc");
    addCommon(cmdArc, true);
    cmdArc->add_option("--arc", arcPath, "arc JSON file")->required();
    cmdArc->add_flag("--extended", extended, "extended trace");
    cmdArc->add_flag("--project", project, "project the extended trace to the reduced torus");

    auto* cmdFrame = app.add_subcommand("frame", "trace of a frame element g_v");
    addCommon(cmdFrame, true);
    cmdFrame->add_option("--vertex", vertex, "small-vertex id")->required();
    cmdFrame->add_flag("--extended", extended, "extended frame");
    cmdFrame->add_flag("--a-torus", aTorus, "map to the A-torus via psi^{-1}");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmdMatrices->parsed()) return runMatrices(common);
        if (cmdVerify->parsed()) return runVerify(common);
        if (cmdBalanced->parsed()) return runBalanced(common, vectorJson, extended);
        if (cmdPaths->parsed()) return runPaths(common, corner, oriented, si, sj);
        if (cmdCorner->parsed()) return runCorner(common, corner, oriented, si, sj);
        if (cmdTransport->parsed()) return runTransport(common, corner, oriented);
        if (cmdArc->parsed()) return runArc(common, arcPath, extended, project);
        if (cmdFrame->parsed()) return runFrame(common, vertex, extended, aTorus);
    } catch (const std::invalid_argument& ex) {
        std::cerr << "input error: " << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    return 2;
}
