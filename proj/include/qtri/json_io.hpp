#pragma once

#include "qtri/qtrace.hpp"
#include "qtri/structmat.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace qtri {

using Json = nlohmann::json;

struct SurfaceInput {
    TriangulatedSurface surface;
    std::optional<int> n;  // surfaces may carry a default n
};

/// {"n":3,"faces":["f0","f1"],"gluings":[{"a":["f0",3],"b":["f1",1]}]}
SurfaceInput parseSurface(const Json& j);

/// {"passes":[["f0",1,3],["f1",1,2]],"start_state":2,"end_state":1,
///  "orientation":"fwd"}; "rev" is normalized to a forward pass list
SimpleArcSpec parseArc(const Json& j);

Json elementToJson(const TorusElement& e);
std::string elementToText(const TorusElement& e);

/// {"rows":[...],"cols":[...],"entries":[[r,c,v],...]} with zeros omitted
Json matrixToJson(const Mat& m, const std::vector<std::string>& rowIds,
                  const std::vector<std::string>& colIds);

Json reportToJson(const IdentityReport& r);

Json qmatrixToJson(const QMatrix& m);

}  // namespace qtri
