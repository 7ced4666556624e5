#pragma once

#include <nlohmann/json.hpp>

#include "canalgeo/canal.hpp"
#include "canalgeo/cheeger.hpp"
#include "canalgeo/geom2d.hpp"
#include "canalgeo/geom3d.hpp"
#include "canalgeo/verify.hpp"

namespace canalgeo {

// Malformed or schema-violating JSON input. Distinct from DegenerateInput so
// callers can map parse failures and geometric failures to different exits.
struct JsonSchemaError : Error {
    explicit JsonSchemaError(const std::string& what) : Error(what) {}
};

// Body formats:
//   {"type":"polygon","vertices":[[x,y],...]}
//   {"type":"rounded","core":{polygon or point},"radius":r}
//   {"type":"point","point":[x,y]}            (legal only as a rounded core)
//   {"type":"polytope3","vertices":[[x,y,z],...]}   (facets derived on load)
nlohmann::json to_json(const ConvexPolygon& p);
nlohmann::json to_json(const RoundedPolygon& p);
nlohmann::json to_json(const Body2& b);
nlohmann::json to_json(const ConvexPolytope3& k);
nlohmann::json to_json(const CheegerResult& r);
nlohmann::json to_json(const CanalReport& r);
nlohmann::json to_json(const CheckOutcome& o);
nlohmann::json to_json(const SweepSummary& s);

ConvexPolygon polygon_from_json(const nlohmann::json& j);
Body2 body2_from_json(const nlohmann::json& j);
ConvexPolytope3 polytope3_from_json(const nlohmann::json& j);

}  // namespace canalgeo
