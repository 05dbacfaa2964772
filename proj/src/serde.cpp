#include "micz/serde.hpp"

#include <charconv>
#include <cmath>

namespace micz::serde {

namespace {

using nlohmann::json;

double finite_number(const json& j, const char* where)
{
    if (!j.is_number())
        throw MiczError(ErrorCode::InvalidParams, std::string(where) + ": expected a number");
    const double v = j.get<double>();
    if (!std::isfinite(v))
        throw MiczError(ErrorCode::InvalidParams, std::string(where) + ": non-finite value");
    return v;
}

Vec3 vec3_field(const json& j, const char* key)
{
    if (!j.contains(key) || !j[key].is_array() || j[key].size() != 3)
        throw MiczError(ErrorCode::InvalidParams,
                        std::string("expected \"") + key + "\" as an array of 3 numbers");
    const json& a = j[key];
    return {finite_number(a[0], key), finite_number(a[1], key), finite_number(a[2], key)};
}

MinkVec4 vec4_field(const json& j, const char* key)
{
    if (!j.contains(key) || !j[key].is_array() || j[key].size() != 4)
        throw MiczError(ErrorCode::InvalidParams,
                        std::string("expected \"") + key + "\" as an array of 4 numbers");
    const json& a = j[key];
    return {finite_number(a[0], key), finite_number(a[1], key), finite_number(a[2], key),
            finite_number(a[3], key)};
}

} // namespace

nlohmann::json to_json(const EuclideanOrbitParams& p)
{
    return {{"A", {p.A.x, p.A.y, p.A.z}}, {"L", {p.L.x, p.L.y, p.L.z}}};
}

nlohmann::json to_json(const MinkowskiOrbitParams& p)
{
    return {{"a", {p.a.x0, p.a.x1, p.a.x2, p.a.x3}},
            {"l", {p.l.x0, p.l.x1, p.l.x2, p.l.x3}}};
}

nlohmann::json to_json(const PhaseState& s)
{
    return {{"t", s.t},
            {"q", {s.q.x, s.q.y, s.q.z}},
            {"v", {s.v.x, s.v.y, s.v.z}},
            {"mu", s.mu}};
}

nlohmann::json to_json(const OrientedSymmetry& g)
{
    json rows = json::array();
    for (int i = 0; i < 4; ++i)
        rows.push_back({g.Lam.m[i][0], g.Lam.m[i][1], g.Lam.m[i][2], g.Lam.m[i][3]});
    return {{"lambda", g.lambda}, {"matrix", rows}};
}

nlohmann::json to_json(const DriftReport& r)
{
    return {{"max_dL", r.max_dL}, {"max_dA", r.max_dA}, {"max_dE", r.max_dE}};
}

EuclideanOrbitParams euclidean_from_json(const nlohmann::json& j)
{
    EuclideanOrbitParams p{vec3_field(j, "A"), vec3_field(j, "L")};
    require_valid(p);
    return p;
}

MinkowskiOrbitParams minkowski_from_json(const nlohmann::json& j)
{
    MinkowskiOrbitParams p{vec4_field(j, "a"), vec4_field(j, "l")};
    require_valid(p);
    return p;
}

PhaseState state_from_json(const nlohmann::json& j)
{
    PhaseState s;
    s.q = vec3_field(j, "q");
    s.v = vec3_field(j, "v");
    s.mu = j.contains("mu") ? finite_number(j["mu"], "mu") : 0.0;
    s.t = j.contains("t") ? finite_number(j["t"], "t") : 0.0;
    if (norm3(s.q) == 0.0)
        throw MiczError(ErrorCode::InvalidParams, "phase state: |q| must be > 0");
    return s;
}

OrientedSymmetry symmetry_from_json(const nlohmann::json& j)
{
    if (!j.contains("lambda") || !j.contains("matrix") || !j["matrix"].is_array() ||
        j["matrix"].size() != 4)
        throw MiczError(ErrorCode::InvalidParams,
                        "expected {\"lambda\": number, \"matrix\": 4x4 array}");
    OrientedSymmetry g;
    g.lambda = finite_number(j["lambda"], "lambda");
    for (int i = 0; i < 4; ++i) {
        const json& row = j["matrix"][i];
        if (!row.is_array() || row.size() != 4)
            throw MiczError(ErrorCode::InvalidParams, "matrix rows must have 4 entries");
        for (int k = 0; k < 4; ++k)
            g.Lam.m[i][k] = finite_number(row[k], "matrix");
    }
    require_valid(g);
    return g;
}

AnyInput parse_input(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw MiczError(ErrorCode::InvalidParams, std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object())
        throw MiczError(ErrorCode::InvalidParams, "input must be a JSON object");
    if (j.contains("A") && j.contains("L"))
        return euclidean_from_json(j);
    if (j.contains("a") && j.contains("l"))
        return minkowski_from_json(j);
    if (j.contains("q") && j.contains("v"))
        return state_from_json(j);
    throw MiczError(ErrorCode::InvalidParams,
                    "unrecognized input: expected keys A/L, a/l, or q/v[/mu]");
}

std::string dump_json(const nlohmann::json& j) { return j.dump(2) + "\n"; }

std::string format_double(double v)
{
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string trajectory_csv(const Trajectory& tr)
{
    std::string out = "t,qx,qy,qz,vx,vy,vz\n";
    for (const auto& s : tr.samples) {
        out += format_double(s.t);
        for (double c : {s.q.x, s.q.y, s.q.z, s.v.x, s.v.y, s.v.z}) {
            out += ',';
            out += format_double(c);
        }
        out += '\n';
    }
    return out;
}

std::string samples_csv(const std::vector<MinkVec4>& pts)
{
    std::string out = "x,y,z,x0\n";
    for (const auto& x : pts) {
        out += format_double(x.x1);
        for (double c : {x.x2, x.x3, x.x0}) {
            out += ',';
            out += format_double(c);
        }
        out += '\n';
    }
    return out;
}

} // namespace micz::serde
