#include "qtri/json_io.hpp"

#include <limits>

namespace qtri {

SurfaceInput parseSurface(const Json& j) {
    if (!j.is_object() || !j.contains("faces"))
        throw std::invalid_argument("surface JSON: expected an object with a \"faces\" array");
    std::vector<std::string> faces = j.at("faces").get<std::vector<std::string>>();
    std::map<std::string, int> idx;
    for (int t = 0; t < static_cast<int>(faces.size()); ++t) idx[faces[t]] = t;

    std::vector<Gluing> gluings;
    if (j.contains("gluings"))
        for (const auto& g : j.at("gluings")) {
            auto side = [&](const Json& s) -> EdgeRef {
                if (!s.is_array() || s.size() != 2)
                    throw std::invalid_argument("surface JSON: gluing side must be [face, slot]");
                std::string f = s.at(0).get<std::string>();
                if (!idx.count(f)) throw std::invalid_argument("surface JSON: unknown face " + f);
                return {idx.at(f), s.at(1).get<int>()};
            };
            gluings.push_back({side(g.at("a")), side(g.at("b"))});
        }

    SurfaceInput out{TriangulatedSurface(faces, gluings), std::nullopt};
    if (j.contains("n")) out.n = j.at("n").get<int>();
    return out;
}

SimpleArcSpec parseArc(const Json& j) {
    SimpleArcSpec arc;
    for (const auto& p : j.at("passes")) {
        if (!p.is_array() || p.size() != 3)
            throw std::invalid_argument("arc JSON: each pass must be [face, entry, exit]");
        arc.passes.push_back({p.at(0).get<std::string>(), p.at(1).get<int>(), p.at(2).get<int>()});
    }
    arc.startState = j.value("start_state", 1);
    arc.endState = j.value("end_state", 1);
    std::string orient = j.value("orientation", "fwd");
    if (orient == "rev") {
        std::reverse(arc.passes.begin(), arc.passes.end());
        for (auto& p : arc.passes) std::swap(p.entrySlot, p.exitSlot);
        std::swap(arc.startState, arc.endState);
    } else if (orient != "fwd") {
        throw std::invalid_argument("arc JSON: orientation must be \"fwd\" or \"rev\"");
    }
    return arc;
}

namespace {

std::int64_t checkedInt(const Integer& c) {
    if (c > std::numeric_limits<std::int64_t>::max() || c < std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error("coefficient does not fit the JSON integer range");
    return static_cast<std::int64_t>(c);
}

}  // namespace

Json elementToJson(const TorusElement& e) {
    Json terms = Json::array();
    for (const auto& [k, c] : e.terms()) {
        Json exp = Json::object();
        for (const auto& [i, v] : k.entries()) exp[e.presentation()->id(i)] = v;
        Json coeff = Json::array();
        for (const auto& [hq, cc] : c.terms()) coeff.push_back({hq, checkedInt(cc)});
        terms.push_back({{"exp", exp}, {"coeff", coeff}});
    }
    return Json{{"terms", terms}};
}

std::string elementToText(const TorusElement& e) { return e.str(); }

Json matrixToJson(const Mat& m, const std::vector<std::string>& rowIds,
                  const std::vector<std::string>& colIds) {
    Json entries = Json::array();
    for (size_t r = 0; r < m.size(); ++r)
        for (size_t c = 0; c < m[r].size(); ++c)
            if (m[r][c] != 0) entries.push_back({r, c, m[r][c]});
    return Json{{"rows", rowIds}, {"cols", colIds}, {"entries", entries}};
}

Json reportToJson(const IdentityReport& r) {
    Json items = Json::array();
    for (const auto& it : r.items) {
        Json o{{"name", it.name}, {"pass", it.pass}};
        if (!it.pass) o["counterexample"] = it.counterexample;
        items.push_back(o);
    }
    return Json{{"pass", r.allPass()}, {"identities", items}};
}

Json qmatrixToJson(const QMatrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(elementToJson(m.at(i, j)));
        rows.push_back(row);
    }
    return Json{{"size", {m.rows(), m.cols()}}, {"entries", rows}};
}

}  // namespace qtri
