#include "canalgeo/json_io.hpp"

namespace canalgeo {

using nlohmann::json;

namespace {

json point_to_json(Point2 p) { return json::array({p.x, p.y}); }

Point2 point_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw JsonSchemaError("expected a [x,y] coordinate pair");
    return {j[0].get<double>(), j[1].get<double>()};
}

std::string type_of(const json& j) {
    if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
        throw JsonSchemaError("body object needs a string 'type' field");
    return j["type"].get<std::string>();
}

}  // namespace

json to_json(const ConvexPolygon& p) {
    json verts = json::array();
    for (const auto& v : p.vertices()) verts.push_back(point_to_json(v));
    return json{{"type", "polygon"}, {"vertices", std::move(verts)}};
}

json to_json(const RoundedPolygon& p) {
    json core;
    if (p.has_polygon_core())
        core = to_json(p.core());
    else
        core = json{{"type", "point"}, {"point", point_to_json(p.core_point())}};
    return json{{"type", "rounded"}, {"core", std::move(core)}, {"radius", p.radius()}};
}

json to_json(const Body2& b) {
    return std::visit([](const auto& x) { return to_json(x); }, b);
}

json to_json(const ConvexPolytope3& k) {
    json verts = json::array();
    for (const auto& v : k.vertices()) verts.push_back(json::array({v.x, v.y, v.z}));
    return json{{"type", "polytope3"}, {"vertices", std::move(verts)}};
}

json to_json(const CheegerResult& r) {
    return json{{"t_star", r.t_star}, {"set", to_json(r.cheeger_set)}, {"residual", r.residual}};
}

json to_json(const CanalReport& r) {
    json witnesses = json::array();
    for (const auto& w : r.witnesses)
        witnesses.push_back(json{{"descriptor", w.descriptor}, {"ratio", w.ratio}});
    return json{{"projection", to_json(r.projection)},
                {"cylinder_limit", r.cylinder_limit},
                {"cheeger_upper", r.cheeger_upper},
                {"lower_bound", r.lower_bound},
                {"witnesses", std::move(witnesses)},
                {"verdict_q1", to_string(r.verdict_q1)},
                {"calibrability_gap", r.calibrability_gap},
                {"verdict_tolerance", r.verdict_tolerance},
                {"approx_bound", r.approx_bound}};
}

json to_json(const CheckOutcome& o) {
    json inputs;
    if (o.inputs.empty())
        inputs = json::object();
    else
        inputs = json::parse(o.inputs);
    return json{{"name", o.name},   {"lhs", o.lhs},     {"rhs", o.rhs},
                {"slack", o.slack}, {"holds", o.holds}, {"inputs", std::move(inputs)},
                {"seed", o.seed}};
}

json to_json(const SweepSummary& s) {
    return json{{"summary", true},
                {"check", s.check},
                {"seed", s.master_seed},
                {"trials", s.trials},
                {"violations", s.violations},
                {"near_violations", s.near_violations}};
}

ConvexPolygon polygon_from_json(const json& j) {
    if (type_of(j) != "polygon") throw JsonSchemaError("expected a polygon body");
    if (!j.contains("vertices") || !j["vertices"].is_array())
        throw JsonSchemaError("polygon needs a 'vertices' array");
    std::vector<Point2> verts;
    for (const auto& v : j["vertices"]) verts.push_back(point_from_json(v));
    if (verts.size() < 3) throw JsonSchemaError("polygon needs at least 3 vertices");
    return ConvexPolygon(std::move(verts));
}

Body2 body2_from_json(const json& j) {
    const std::string t = type_of(j);
    if (t == "polygon") return Body2(polygon_from_json(j));
    if (t == "rounded") {
        if (!j.contains("core") || !j.contains("radius") || !j["radius"].is_number())
            throw JsonSchemaError("rounded body needs 'core' and numeric 'radius'");
        const double r = j["radius"].get<double>();
        const json& core = j["core"];
        if (type_of(core) == "point") {
            if (!core.contains("point")) throw JsonSchemaError("point core needs 'point'");
            return Body2(RoundedPolygon(point_from_json(core["point"]), r));
        }
        return Body2(RoundedPolygon(polygon_from_json(core), r));
    }
    throw JsonSchemaError("unknown planar body type '" + t + "'");
}

ConvexPolytope3 polytope3_from_json(const json& j) {
    if (type_of(j) != "polytope3") throw JsonSchemaError("expected a polytope3 body");
    if (!j.contains("vertices") || !j["vertices"].is_array())
        throw JsonSchemaError("polytope3 needs a 'vertices' array");
    std::vector<Vec3> pts;
    for (const auto& v : j["vertices"]) {
        if (!v.is_array() || v.size() != 3) throw JsonSchemaError("expected [x,y,z] triples");
        pts.push_back({v[0].get<double>(), v[1].get<double>(), v[2].get<double>()});
    }
    if (pts.size() < 4) throw JsonSchemaError("polytope3 needs at least 4 vertices");
    return ConvexPolytope3::hull(pts);
}

}  // namespace canalgeo
