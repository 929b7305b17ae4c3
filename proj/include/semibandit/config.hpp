#pragma once

#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "semibandit/harness.hpp"

namespace semibandit {

namespace cfg {

using nlohmann::json;

[[noreturn]] inline void bad(const std::string& path, const std::string& msg) {
    fail(Errc::config, path + ": " + msg);
}

inline const json& field(const json& j, const std::string& path, const char* key) {
    if (!j.is_object()) bad(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) bad(path + "." + key, "missing required field");
    return *it;
}

inline void reject_unknown(const json& j, const std::string& path,
                           const std::set<std::string>& allowed) {
    if (!j.is_object()) bad(path, "expected an object");
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!allowed.count(it.key())) bad(path + "." + it.key(), "unknown field");
}

inline std::string get_string(const json& j, const std::string& path, const char* key) {
    const json& v = field(j, path, key);
    if (!v.is_string()) bad(path + "." + key, "expected a string");
    return v.get<std::string>();
}

inline long get_long(const json& j, const std::string& path, const char* key) {
    const json& v = field(j, path, key);
    if (!v.is_number_integer()) bad(path + "." + key, "expected an integer");
    return v.get<long>();
}

inline double get_real(const json& j, const std::string& path, const char* key) {
    const json& v = field(j, path, key);
    if (!v.is_number()) bad(path + "." + key, "expected a number");
    return v.get<double>();
}

inline std::vector<double> real_list(const json& v, const std::string& path) {
    if (!v.is_array()) bad(path, "expected an array of numbers");
    std::vector<double> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_number()) bad(path + "[" + std::to_string(i) + "]", "expected a number");
        out.push_back(v[i].get<double>());
    }
    return out;
}

inline std::vector<std::vector<int>> int_matrix(const json& v, const std::string& path) {
    if (!v.is_array()) bad(path, "expected an array of 0/1 rows");
    std::vector<std::vector<int>> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const std::string rp = path + "[" + std::to_string(i) + "]";
        if (!v[i].is_array()) bad(rp, "expected an array");
        std::vector<int> row;
        for (std::size_t k = 0; k < v[i].size(); ++k) {
            if (!v[i][k].is_number_integer())
                bad(rp + "[" + std::to_string(k) + "]", "expected 0 or 1");
            const int x = v[i][k].get<int>();
            if (x != 0 && x != 1) bad(rp + "[" + std::to_string(k) + "]", "expected 0 or 1");
            row.push_back(x);
        }
        out.push_back(std::move(row));
    }
    return out;
}

inline std::vector<std::vector<double>> real_matrix(const json& v, const std::string& path) {
    if (!v.is_array()) bad(path, "expected an array of rows");
    std::vector<std::vector<double>> out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out.push_back(real_list(v[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

inline std::vector<ArmModel> parse_environment(const json& j, const std::string& path) {
    reject_unknown(j, path, {"family", "means", "raw_means", "halfwidth"});
    RewardFamily family = RewardFamily::Bernoulli;
    if (j.contains("family")) {
        const std::string f = get_string(j, path, "family");
        if (f == "bernoulli")
            family = RewardFamily::Bernoulli;
        else if (f == "uniform")
            family = RewardFamily::UniformAround;
        else
            bad(path + ".family", "expected bernoulli|uniform");
    }
    double halfwidth = 0.0;
    if (j.contains("halfwidth")) halfwidth = get_real(j, path, "halfwidth");
    const bool has_means = j.contains("means");
    const bool has_raw = j.contains("raw_means");
    if (has_means == has_raw) bad(path, "give exactly one of means / raw_means");
    std::vector<ArmModel> arms;
    if (has_means) {
        for (double m : real_list(j.at("means"), path + ".means"))
            arms.push_back(ArmModel{m, family, halfwidth, 1.0});
    } else {
        auto raw = real_list(j.at("raw_means"), path + ".raw_means");
        auto [env, scale] = normalize_environment(raw, 0, family);
        arms = env.arms();
        for (ArmModel& a : arms) a.halfwidth = halfwidth;
    }
    return arms;
}

inline OracleProblem parse_problem(const json& j, const std::string& path,
                                   std::vector<ArmModel>* conflict_arms, double* conflict_scale) {
    const std::string type = get_string(j, path, "type");
    if (type == "exhaustive") {
        reject_unknown(j, path, {"type", "strategies"});
        const json& lst = field(j, path, "strategies");
        if (!lst.is_array()) bad(path + ".strategies", "expected an array of arm-index lists");
        ExhaustiveProblem p;
        for (std::size_t i = 0; i < lst.size(); ++i) {
            const std::string sp = path + ".strategies[" + std::to_string(i) + "]";
            if (!lst[i].is_array()) bad(sp, "expected an array of arm indices");
            Strategy s;
            for (const auto& e : lst[i]) {
                if (!e.is_number_integer()) bad(sp, "expected integer arm indices");
                s.arms.push_back(e.get<int>());
            }
            p.strategies.push_back(std::move(s));
        }
        return p;
    }
    if (type == "threshold_subset") {
        reject_unknown(j, path, {"type", "bids", "threshold", "max_size"});
        ThresholdProblem p;
        p.bids = real_list(field(j, path, "bids"), path + ".bids");
        p.threshold = get_real(j, path, "threshold");
        p.max_size = static_cast<int>(get_long(j, path, "max_size"));
        return p;
    }
    if (type == "path") {
        reject_unknown(j, path, {"type", "nodes", "source", "sink", "edges", "mode"});
        PathProblem p;
        p.nodes = static_cast<int>(get_long(j, path, "nodes"));
        p.source = static_cast<int>(get_long(j, path, "source"));
        p.sink = static_cast<int>(get_long(j, path, "sink"));
        const json& ed = field(j, path, "edges");
        if (!ed.is_array()) bad(path + ".edges", "expected an array of [u,v] pairs");
        for (std::size_t i = 0; i < ed.size(); ++i) {
            const std::string ep = path + ".edges[" + std::to_string(i) + "]";
            if (!ed[i].is_array() || ed[i].size() != 2 || !ed[i][0].is_number_integer() ||
                !ed[i][1].is_number_integer())
                bad(ep, "expected [u,v]");
            p.edges.emplace_back(ed[i][0].get<int>(), ed[i][1].get<int>());
        }
        if (j.contains("mode")) {
            const std::string m = get_string(j, path, "mode");
            if (m == "gain")
                p.mode = PathMode::GainOptimism;
            else if (m == "literal")
                p.mode = PathMode::LiteralAlg3;
            else
                bad(path + ".mode", "expected gain|literal");
        }
        return p;
    }
    if (type == "mwis") {
        reject_unknown(j, path, {"type", "adjacency"});
        const auto m = int_matrix(field(j, path, "adjacency"), path + ".adjacency");
        return MwisProblem{graph_from_adjacency(m), MwisMode::Exact};
    }
    if (type == "conflict_mwis") {
        reject_unknown(j, path, {"type", "conflict", "rates"});
        const auto conflict = int_matrix(field(j, path, "conflict"), path + ".conflict");
        const auto rates = real_matrix(field(j, path, "rates"), path + ".rates");
        RunConfig base = make_channel_access_config(conflict, rates);
        if (conflict_arms) *conflict_arms = base.arms;
        if (conflict_scale) *conflict_scale = base.scale;
        return base.problem;
    }
    bad(path + ".type", "expected exhaustive|threshold_subset|path|mwis|conflict_mwis");
}

} // namespace cfg

inline RunConfig parse_run_config(const cfg::json& j, const std::string& path = "config") {
    using namespace cfg;
    reject_unknown(j, path,
                   {"scenario", "policy", "oracle_mode", "horizon", "replications", "seed",
                    "environment", "problem"});
    const std::string scenario = get_string(j, path, "scenario");

    RunConfig c;
    if (scenario == "custom") {
        c.scenario = Scenario::Custom;
        std::vector<ArmModel> conflict_arms;
        double conflict_scale = 1.0;
        c.problem = parse_problem(field(j, path, "problem"), path + ".problem", &conflict_arms,
                                  &conflict_scale);
        if (!conflict_arms.empty()) {
            if (j.contains("environment"))
                bad(path + ".environment", "conflict_mwis derives the environment from rates");
            c.arms = conflict_arms;
            c.scale = conflict_scale;
        } else {
            c.arms = parse_environment(field(j, path, "environment"), path + ".environment");
            c.scale = c.arms.empty() ? 1.0 : c.arms.front().scale;
        }
    } else {
        if (j.contains("environment") || j.contains("problem"))
            bad(path, "environment/problem are implied by the built-in scenario " + scenario);
        c = builtin_scenario(scenario);
    }

    if (j.contains("policy")) c.policy = get_string(j, path, "policy");
    if (j.contains("oracle_mode")) {
        const std::string m = get_string(j, path, "oracle_mode");
        if (m == "exact")
            c.oracle_mode = MwisMode::Exact;
        else if (m == "greedy")
            c.oracle_mode = MwisMode::Greedy;
        else
            bad(path + ".oracle_mode", "expected exact|greedy");
    }
    if (j.contains("horizon")) c.horizon = get_long(j, path, "horizon");
    if (j.contains("replications"))
        c.replications = static_cast<int>(get_long(j, path, "replications"));
    if (j.contains("seed")) {
        const auto& v = j.at("seed");
        if (!v.is_number_integer() && !v.is_number_unsigned())
            bad(path + ".seed", "expected an integer");
        c.seed = v.get<std::uint64_t>();
    }
    validate_config(c);
    return c;
}

inline RunConfig load_run_config(const std::string& file_path) {
    std::ifstream in(file_path);
    if (!in) fail(Errc::config, "cannot open config file " + file_path);
    cfg::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        fail(Errc::config, "config parse error in " + file_path + ": " + e.what());
    }
    return parse_run_config(j);
}

} // namespace semibandit
