#pragma once

#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "semibandit/config.hpp"
#include "semibandit/harness.hpp"
#include "semibandit/regret.hpp"

namespace semibandit {

// Stable exit-code contract: 0 success, 2 usage/config, 3 runtime.
inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 2;
inline constexpr int exit_runtime = 3;

namespace detail {

inline int exit_code_for(const SimError& e) {
    return e.code() == Errc::config ? exit_usage : exit_runtime;
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) fail(Errc::config, "cannot write " + path);
    f << content;
}

} // namespace detail

inline RunConfig resolve_config(const std::string& scenario, const std::string& config_path) {
    if (!scenario.empty() && !config_path.empty())
        fail(Errc::config, "give either --scenario or --config, not both");
    if (!scenario.empty()) return builtin_scenario(scenario);
    if (!config_path.empty()) return load_run_config(config_path);
    fail(Errc::config, "one of --scenario or --config is required");
}

// run: write trace.csv and summary.csv into out_dir.
inline int cmd_run(const std::string& config_path, const std::string& out_dir, std::ostream& out,
                   std::ostream& err) {
    RunConfig config;
    try {
        config = load_run_config(config_path);
    } catch (const SimError& e) {
        err << e.what() << "\n";
        return exit_usage;
    }
    try {
        const RunOutput res = run(config);
        std::filesystem::create_directories(out_dir);
        const std::string trace_path = out_dir + "/trace.csv";
        const std::string summary_path = out_dir + "/summary.csv";
        detail::write_file(trace_path, trace_csv(res.traces));
        detail::write_file(summary_path, summary_csv(res.summary));
        out << "wrote " << trace_path << "\n";
        out << "wrote " << summary_path << "\n";
        return exit_ok;
    } catch (const SimError& e) {
        err << e.what() << "\n";
        return detail::exit_code_for(e);
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return exit_runtime;
    }
}

// optimum: print "{arms} lambda1" (normalized) and "raw lambda1*scale".
inline int cmd_optimum(const std::string& scenario, const std::string& config_path,
                       std::ostream& out, std::ostream& err) {
    try {
        const RunConfig config = resolve_config(scenario, config_path);
        const auto [strategy, lambda1] = static_optimum(regret_means(config), config.problem);
        out << format_strategy(strategy) << " " << format_real(lambda1) << "\n";
        out << "raw " << format_real(lambda1 * config.scale) << "\n";
        return exit_ok;
    } catch (const SimError& e) {
        err << e.what() << "\n";
        return detail::exit_code_for(e);
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return exit_runtime;
    }
}

struct BoundArgs {
    int lemma = 0;
    std::optional<double> n, k, cap_n, beta, delta;
};

inline int cmd_bound(const BoundArgs& a, std::ostream& out, std::ostream& err) {
    try {
        if (a.lemma < 1 || a.lemma > 4) fail(Errc::config, "--lemma must be 1, 2, 3 or 4");
        if (!a.n || !a.k || !a.cap_n)
            fail(Errc::config, "--n, --k and --cap-n are required");
        if ((a.lemma == 2 || a.lemma == 4) && !a.delta)
            fail(Errc::config, "--delta is required for lemma " + std::to_string(a.lemma));
        if ((a.lemma == 3 || a.lemma == 4) && !a.beta)
            fail(Errc::config, "--beta is required for lemma " + std::to_string(a.lemma));
        double v = 0.0;
        switch (a.lemma) {
            case 1: v = bound_lemma1(*a.n, *a.k, *a.cap_n); break;
            case 2: v = bound_lemma2(*a.n, *a.k, *a.cap_n, *a.delta); break;
            case 3: v = bound_lemma3(*a.n, *a.k, *a.cap_n, *a.beta); break;
            case 4: v = bound_lemma4(*a.n, *a.k, *a.cap_n, *a.beta, *a.delta); break;
        }
        out << format_real(v) << "\n";
        return exit_ok;
    } catch (const SimError& e) {
        err << e.what() << "\n";
        return e.code() == Errc::config || e.code() == Errc::domain ? exit_usage : exit_runtime;
    }
}

// compare: run each policy on identical environments (common seeds) and write
// a joined summary with one mean-regret column per policy.
inline int cmd_compare(const std::string& config_path, const std::vector<std::string>& policies,
                       const std::string& out_dir, std::ostream& out, std::ostream& err) {
    RunConfig config;
    try {
        if (policies.size() < 2) fail(Errc::config, "--policies needs at least two names");
        for (const std::string& p : policies) policy_from_name(p);
        config = load_run_config(config_path);
    } catch (const SimError& e) {
        err << e.what() << "\n";
        return exit_usage;
    }
    try {
        std::vector<RunSummary> summaries;
        for (const std::string& p : policies) {
            RunConfig c = config;
            c.policy = p;
            summaries.push_back(run(c).summary);
        }
        std::filesystem::create_directories(out_dir);
        const std::string path = out_dir + "/compare.csv";
        detail::write_file(path, compare_csv(summaries));
        out << "wrote " << path << "\n";
        return exit_ok;
    } catch (const SimError& e) {
        err << e.what() << "\n";
        return detail::exit_code_for(e);
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return exit_runtime;
    }
}

} // namespace semibandit
