#include "toric/io.hpp"

#include <fstream>
#include <nlohmann/json.hpp>

#include "toric/errors.hpp"

namespace toric {

namespace {

Rat rat_from_json(const json& j) {
    if (j.is_string()) return rat_from_string(j.get<std::string>());
    if (j.is_number_integer()) return Rat(j.get<long long>());
    throw SchemaError("expected a rational as \"p/q\" string or integer");
}

IntVec intvec_from_json(const json& j) {
    if (!j.is_array()) throw SchemaError("expected an array of integers");
    IntVec v;
    for (const auto& x : j) {
        if (x.is_number_integer()) v.emplace_back(x.get<long long>());
        else if (x.is_string()) v.emplace_back(Int(x.get<std::string>()));
        else throw SchemaError("expected an integer coordinate");
    }
    return v;
}

}  // namespace

json series_to_json(const PolySeries& s) {
    json terms = json::array();
    for (const auto& [e, c] : s.terms()) {
        json t;
        t["exp"] = e;
        t["coef"] = rat_to_string(c);
        terms.push_back(std::move(t));
    }
    json out;
    out["order"] = s.is_exact() ? json("exact") : json(s.order());
    out["terms"] = std::move(terms);
    return out;
}

PolySeries series_from_json(const json& j) {
    if (!j.is_object() || !j.contains("order") || !j.contains("terms"))
        throw SchemaError("series: need {\"order\":..., \"terms\":[...]}");
    int order;
    if (j["order"].is_string() && j["order"] == "exact") order = PolySeries::kExact;
    else if (j["order"].is_number_integer()) order = j["order"].get<int>();
    else throw SchemaError("series: bad order");
    int nvars = -1;
    std::vector<std::pair<std::vector<int>, Rat>> terms;
    for (const auto& t : j["terms"]) {
        if (!t.is_object() || !t.contains("exp") || !t.contains("coef"))
            throw SchemaError("series: term needs exp and coef");
        std::vector<int> e = t["exp"].get<std::vector<int>>();
        for (int x : e)
            if (x < 0) throw SchemaError("series: negative exponent");
        if (nvars < 0) nvars = static_cast<int>(e.size());
        if (static_cast<int>(e.size()) != nvars)
            throw SchemaError("series: inconsistent exponent arity");
        terms.push_back({e, rat_from_json(t["coef"])});
    }
    if (nvars < 0) throw SchemaError("series: cannot infer variable count from no terms");
    PolySeries s(nvars, order);
    for (auto& [e, c] : terms) s.add_term(e, c);
    return s;
}

FanData fan_from_json(const json& j) {
    if (!j.is_object() || !j.contains("rank") || !j.contains("rays") || !j.contains("cones"))
        throw SchemaError("fan: need {\"rank\", \"rays\", \"cones\"}");
    if (!j["rank"].is_number_integer()) throw SchemaError("fan: bad rank");
    int rank = j["rank"].get<int>();
    std::vector<IntVec> rays;
    for (const auto& r : j["rays"]) rays.push_back(intvec_from_json(r));
    std::vector<std::vector<int>> cones;
    for (const auto& c : j["cones"]) {
        if (!c.is_array()) throw SchemaError("fan: cone must be an array of ray indices");
        cones.push_back(c.get<std::vector<int>>());
    }
    return FanData(rank, std::move(rays), std::move(cones));
}

json fan_to_json(const FanData& fan) {
    json out;
    out["rank"] = fan.rank();
    json rays = json::array();
    for (const auto& r : fan.rays()) {
        json row = json::array();
        for (const auto& c : r) row.push_back(c.str());
        rays.push_back(std::move(row));
    }
    out["rays"] = std::move(rays);
    out["cones"] = fan.cones();
    return out;
}

InnerProductMap gram_from_json(const json& j) {
    if (!j.is_object() || !j.contains("gram"))
        throw SchemaError("inner product: need {\"gram\": [[...]]}");
    RatMat g;
    for (const auto& row : j["gram"]) {
        RatVec r;
        for (const auto& x : row) r.push_back(rat_from_json(x));
        g.push_back(std::move(r));
    }
    return InnerProductMap(std::move(g));
}

RatVec alpha_from_json(const json& j, size_t nrays) {
    if (!j.is_object() || !j.contains("alpha"))
        throw SchemaError("divisor: need {\"alpha\": [...]}");
    RatVec a;
    for (const auto& x : j["alpha"]) a.push_back(rat_from_json(x));
    if (a.size() != nrays)
        throw SchemaError("divisor: alpha length must match the number of fan rays");
    return a;
}

LatticePolytope polytope_from_json(const json& j) {
    if (!j.is_object() || !j.contains("rank") || !j.contains("vertices"))
        throw SchemaError("polytope: need {\"rank\", \"vertices\"}");
    if (!j["rank"].is_number_integer()) throw SchemaError("polytope: bad rank");
    int rank = j["rank"].get<int>();
    std::vector<IntVec> vertices;
    for (const auto& v : j["vertices"]) vertices.push_back(intvec_from_json(v));
    std::optional<std::vector<LatticePolytope::FacetPair>> facets;
    if (j.contains("facets_optional")) {
        std::vector<LatticePolytope::FacetPair> fs;
        for (const auto& f : j["facets_optional"]) {
            if (!f.is_object() || !f.contains("normal") || !f.contains("offset"))
                throw SchemaError("polytope: facet needs normal and offset");
            fs.push_back({intvec_from_json(f["normal"]), rat_from_json(f["offset"])});
        }
        facets = std::move(fs);
    }
    return LatticePolytope(rank, std::move(vertices), std::move(facets));
}

DPolynomial dpoly_from_json(const json& j, const FanData& fan) {
    if (!j.is_object() || !j.contains("terms"))
        throw SchemaError("dpolynomial: need {\"terms\": [...]}");
    DPolynomial out;
    for (const auto& t : j["terms"]) {
        if (!t.is_object() || !t.contains("exps") || !t.contains("coef"))
            throw SchemaError("dpolynomial: term needs exps and coef");
        DMonomial m;
        m.exps = t["exps"].get<std::vector<int>>();
        if (m.exps.size() != fan.rays().size())
            throw SchemaError("dpolynomial: exps length must match the number of fan rays");
        for (int e : m.exps)
            if (e < 0) throw SchemaError("dpolynomial: negative exponent");
        if (t["coef"].is_object()) {
            m.coef = series_from_json(t["coef"]);
            if (m.coef.nvars() != fan.rank())
                throw SchemaError("dpolynomial: coefficient variable count must equal rank");
        } else {
            m.coef = PolySeries::constant(fan.rank(), rat_from_json(t["coef"]));
        }
        out.push_back(std::move(m));
    }
    return out;
}

std::string cone_key_name(const ConeKey& key) {
    if (key.empty()) return "V0";
    bool small = std::all_of(key.begin(), key.end(), [](int i) { return i + 1 <= 9; });
    std::string s = "V";
    for (size_t i = 0; i < key.size(); ++i) {
        if (i && !small) s += "_";
        s += std::to_string(key[i] + 1);
    }
    return s;
}

json cycle_to_json(const EquivariantCycle& c) {
    json out = json::object();
    for (const auto& [key, series] : c.coeffs())
        out[cone_key_name(key)] = series.to_string();
    return out;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw SchemaError("invalid JSON in " + path + ": " + e.what());
    }
    return j;
}

}  // namespace toric
