#pragma once

#include <string>

#include <json.hpp>

#include "melonic/construction.hpp"
#include "melonic/motive.hpp"
#include "melonic/polyring.hpp"

namespace melonic {

using Json = nlohmann::json;

/// {"basis":"T","coeffs":["-2","4","5","1"]}; coefficients as decimal strings.
Json to_json(const IntPoly& p);
IntPoly poly_from_json(const Json& j);

/// Polynomial form plus "edges".
Json to_json(const GrothendieckClass& u);
GrothendieckClass class_from_json(const Json& j);

/// {"stages":[{"banana":[1,3,1],"parent":0,"slot":1}, ...]}
Json to_json(const MelonicConstruction& c);
MelonicConstruction construction_from_json(const Json& j);

/// {"vertices":N,"edges":[[0,1],[0,1],...]}
Json to_json(const Graph& g);
Graph graph_from_json(const Json& j);

}  // namespace melonic
