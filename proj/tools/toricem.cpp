// toricem: exact equivariant Todd / Euler-Maclaurin calculator for toric data.
//
// Subcommands: act, rcoef, todd, count, verify, reduce.  All arithmetic is
// exact rational; output rationals are "p/q" strings.
//
// Exit codes: 0 ok, 2 schema error, 3 non-Cartier ray values,
// 4 genericity failure, 5 verification mismatch, 1 anything else.

#include <CLI11.hpp>
#include <iostream>
#include <nlohmann/json.hpp>

#include "toric/errors.hpp"
#include "toric/io.hpp"
#include "toric/polytope.hpp"
#include "toric/todd.hpp"

using namespace toric;
using nlohmann::json;

namespace {

struct Options {
    int order = 6;
    std::string gram_file;
    bool no_cache = false;
    bool pretty = false;
};

void add_common(CLI::App* cmd, Options& opt, bool with_order = true) {
    if (with_order)
        cmd->add_option("--order", opt.order, "truncation order")->check(CLI::Range(0, 64));
    cmd->add_option("--gram", opt.gram_file,
                    "inner-product JSON file (default: standard inner product)");
    cmd->add_flag("--no-cache", opt.no_cache, "disable the per-cone memo cache");
    cmd->add_flag("--pretty", opt.pretty, "indent JSON output");
    cmd->add_flag("--json", [](int64_t) {}, "JSON output (default)");
}

InnerProductMap load_gram(const Options& opt, int rank) {
    if (opt.gram_file.empty()) return InnerProductMap::standard(rank);
    InnerProductMap g = gram_from_json(load_json_file(opt.gram_file));
    if (g.rank() != rank)
        throw SchemaError("inner product rank does not match the input rank");
    return g;
}

void emit(const json& j, const Options& opt) {
    if (opt.pretty) std::cout << j.dump(2) << "\n";
    else std::cout << j.dump() << "\n";
}

// "V13", "1,3", "V1,3" or "0"/"V0" (zero cone) as 1-based ray indices.
ConeKey parse_cycle_spec(std::string s, size_t nrays) {
    if (!s.empty() && (s[0] == 'V' || s[0] == 'v')) s = s.substr(1);
    if (s.empty()) throw SchemaError("empty cycle spec");
    ConeKey key;
    if (s == "0") return key;
    if (s.find(',') != std::string::npos) {
        size_t pos = 0;
        while (pos < s.size()) {
            size_t next = s.find(',', pos);
            if (next == std::string::npos) next = s.size();
            key.push_back(std::stoi(s.substr(pos, next - pos)) - 1);
            pos = next + 1;
        }
    } else {
        for (char c : s) {
            if (c < '1' || c > '9')
                throw SchemaError("cycle spec must be digits 1-9 or comma-separated indices");
            key.push_back(c - '1');
        }
    }
    for (int i : key)
        if (i < 0 || i >= static_cast<int>(nrays))
            throw SchemaError("cycle spec: ray index out of range");
    std::sort(key.begin(), key.end());
    return key;
}

int run(int argc, char** argv) {
    CLI::App app{"exact equivariant Todd classes and Euler-Maclaurin identities on toric data"};
    app.require_subcommand(1);

    Options opt;
    std::string fan_file, divisor_file, cycle_spec, poly_file, cone_inline, dpoly_file;

    auto* cmd_act = app.add_subcommand("act", "apply a divisor to a cycle V_sigma");
    cmd_act->add_option("--fan", fan_file, "fan JSON file")->required();
    cmd_act->add_option("--divisor", divisor_file, "divisor JSON file")->required();
    cmd_act->add_option("--cycle", cycle_spec, "target cycle, e.g. V1 or V13 or 1,3")->required();
    add_common(cmd_act, opt);

    auto* cmd_rcoef = app.add_subcommand("rcoef", "Todd coefficient r(sigma) of a cone");
    cmd_rcoef->add_option("--cone", cone_inline, "generators as JSON, e.g. [[1,0],[1,2]]")
        ->required();
    add_common(cmd_rcoef, opt);

    auto* cmd_todd = app.add_subcommand("todd", "equivariant Todd class of a fan");
    cmd_todd->add_option("--fan", fan_file, "fan JSON file")->required();
    add_common(cmd_todd, opt);

    auto* cmd_count = app.add_subcommand("count", "certified lattice-point count of a polytope");
    cmd_count->add_option("--poly", poly_file, "polytope JSON file")->required();
    add_common(cmd_count, opt, /*with_order=*/false);

    auto* cmd_verify =
        app.add_subcommand("verify", "compare the interpolator series against the exponential sum");
    cmd_verify->add_option("--poly", poly_file, "polytope JSON file")->required();
    add_common(cmd_verify, opt);

    auto* cmd_reduce = app.add_subcommand("reduce", "square-free normal form of a D-polynomial");
    cmd_reduce->add_option("--fan", fan_file, "fan JSON file")->required();
    cmd_reduce->add_option("--dpoly", dpoly_file, "D-polynomial JSON file")->required();
    add_common(cmd_reduce, opt);

    CLI11_PARSE(app, argc, argv);

    if (cmd_act->parsed()) {
        FanData fan = fan_from_json(load_json_file(fan_file));
        InnerProductMap psi = load_gram(opt, fan.rank());
        EquivariantDivisor div(fan, alpha_from_json(load_json_file(divisor_file),
                                                    fan.rays().size()));
        ConeKey key = parse_cycle_spec(cycle_spec, fan.rays().size());
        if (!fan.has_cone(key)) throw SchemaError("cycle spec: not a cone of the fan");
        EquivariantCycle c(&fan);
        c.add(key, PolySeries::constant(fan.rank(), 1).with_order(opt.order));
        emit(cycle_to_json(act(div, c, psi)), opt);
        return 0;
    }
    if (cmd_rcoef->parsed()) {
        json gens_json;
        try {
            gens_json = json::parse(cone_inline);
        } catch (const std::exception& e) {
            throw SchemaError(std::string("cone generators: ") + e.what());
        }
        std::vector<IntVec> gens;
        for (const auto& g : gens_json) {
            IntVec v;
            for (const auto& x : g) v.emplace_back(Int(x.is_string()
                                                           ? Int(x.get<std::string>())
                                                           : Int(x.get<long long>())));
            gens.push_back(std::move(v));
        }
        if (gens.empty()) throw SchemaError("cone generators: empty");
        ConeData sigma(static_cast<int>(gens[0].size()), gens);
        InnerProductMap psi = load_gram(opt, sigma.rank());
        ToddEngine engine(psi, opt.order, !opt.no_cache);
        PolySeries r = engine.r_general(sigma);
        json out;
        json cone = json::array();
        for (const auto& g : sigma.gens()) {
            json row = json::array();
            for (const auto& c : g) row.push_back(c.str());
            cone.push_back(std::move(row));
        }
        out["cone"] = std::move(cone);
        out["order"] = opt.order;
        out["series"] = series_to_json(r);
        if (opt.pretty) out["display"] = r.to_string();
        emit(out, opt);
        return 0;
    }
    if (cmd_todd->parsed()) {
        FanData fan = fan_from_json(load_json_file(fan_file));
        InnerProductMap psi = load_gram(opt, fan.rank());
        ToddEngine engine(psi, opt.order, !opt.no_cache);
        emit(cycle_to_json(engine.todd_class(fan)), opt);
        return 0;
    }
    if (cmd_count->parsed()) {
        LatticePolytope p = polytope_from_json(load_json_file(poly_file));
        InnerProductMap psi = load_gram(opt, p.rank());
        CountResult res = count_lattice_points(p, psi);
        json out;
        out["count"] = res.count.str();
        out["em_constant"] = rat_to_string(res.em_constant);
        out["enumeration"] = res.enumerated.str();
        out["certificate"] = "EM=" + rat_to_string(res.em_constant) +
                             ", enumeration=" + res.enumerated.str();
        emit(out, opt);
        return 0;
    }
    if (cmd_verify->parsed()) {
        LatticePolytope p = polytope_from_json(load_json_file(poly_file));
        InnerProductMap psi = load_gram(opt, p.rank());
        PolySeries lhs = euler_maclaurin_series(p, psi, opt.order);
        PolySeries rhs = exp_sum_series(p, opt.order);
        PolySeries diff = (lhs - rhs).truncated(opt.order);
        Rat max_abs = 0;
        json bad = json::array();
        for (const auto& [e, c] : diff.terms()) {
            Rat a = c < 0 ? -c : c;
            if (a > max_abs) max_abs = a;
            json t;
            t["exp"] = e;
            t["diff"] = rat_to_string(c);
            bad.push_back(std::move(t));
        }
        json out;
        out["order"] = opt.order;
        out["max_abs_diff"] = rat_to_string(max_abs);
        out["mismatches"] = std::move(bad);
        out["status"] = diff.is_zero() ? "match" : "mismatch";
        emit(out, opt);
        if (!diff.is_zero()) {
            std::cerr << "verify: interpolator series deviates from the exponential sum\n";
            return 5;
        }
        return 0;
    }
    if (cmd_reduce->parsed()) {
        FanData fan = fan_from_json(load_json_file(fan_file));
        InnerProductMap psi = load_gram(opt, fan.rank());
        DPolynomial p = dpoly_from_json(load_json_file(dpoly_file), fan);
        emit(cycle_to_json(squarefree_reduce(p, fan, psi, opt.order)), opt);
        return 0;
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const SchemaError& e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return 2;
    } catch (const CartierError& e) {
        std::cerr << "cartier error: " << e.what() << "\n";
        return 3;
    } catch (const GenericityError& e) {
        std::cerr << "genericity error: " << e.what() << "\n";
        return 4;
    } catch (const VerificationError& e) {
        std::cerr << "verification error: " << e.what() << "\n";
        return 5;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
