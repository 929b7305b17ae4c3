#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "semibandit/cli.hpp"

namespace {

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        const std::size_t comma = s.find(',', start);
        if (comma == std::string::npos) {
            out.push_back(s.substr(start));
            break;
        }
        out.push_back(s.substr(start, comma - start));
        start = comma + 1;
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Combinatorial semi-bandit simulator: DFL/LLR/MOSS policies over "
                 "threshold-subset, path and independent-set oracles"};
    app.require_subcommand(1);

    std::string run_config, run_out;
    CLI::App* c_run = app.add_subcommand("run", "run an experiment, write trace.csv + summary.csv");
    c_run->add_option("--config", run_config, "run-config JSON file")->required();
    c_run->add_option("--out", run_out, "output directory")->required();

    std::string opt_scenario, opt_config;
    CLI::App* c_opt = app.add_subcommand("optimum", "print the static optimum strategy and value");
    c_opt->add_option("--scenario", opt_scenario,
                      "ad_placement | channel_access | shortest_path_demo");
    c_opt->add_option("--config", opt_config, "run-config JSON file");

    semibandit::BoundArgs bound;
    double b_n = 0, b_k = 0, b_cap = 0, b_beta = 0, b_delta = 0;
    CLI::App* c_bound = app.add_subcommand("bound", "evaluate a closed-form regret bound");
    c_bound->add_option("--lemma", bound.lemma, "1|2|3|4")->required();
    CLI::Option* o_n = c_bound->add_option("--n", b_n, "horizon");
    CLI::Option* o_k = c_bound->add_option("--k", b_k, "number of arms K");
    CLI::Option* o_cap = c_bound->add_option("--cap-n", b_cap, "max strategy size N");
    CLI::Option* o_beta = c_bound->add_option("--beta", b_beta, "approximation factor");
    CLI::Option* o_delta = c_bound->add_option("--delta", b_delta, "minimum gap");

    std::string cmp_config, cmp_out, cmp_policies;
    CLI::App* c_cmp = app.add_subcommand("compare", "run several policies on common seeds");
    c_cmp->add_option("--config", cmp_config, "run-config JSON file")->required();
    c_cmp->add_option("--policies", cmp_policies, "comma-separated policy names")->required();
    c_cmp->add_option("--out", cmp_out, "output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : semibandit::exit_usage;
    }

    if (c_run->parsed())
        return semibandit::cmd_run(run_config, run_out, std::cout, std::cerr);
    if (c_opt->parsed())
        return semibandit::cmd_optimum(opt_scenario, opt_config, std::cout, std::cerr);
    if (c_bound->parsed()) {
        if (o_n->count()) bound.n = b_n;
        if (o_k->count()) bound.k = b_k;
        if (o_cap->count()) bound.cap_n = b_cap;
        if (o_beta->count()) bound.beta = b_beta;
        if (o_delta->count()) bound.delta = b_delta;
        return semibandit::cmd_bound(bound, std::cout, std::cerr);
    }
    if (c_cmp->parsed())
        return semibandit::cmd_compare(cmp_config, split_csv(cmp_policies), cmp_out, std::cout,
                                       std::cerr);
    return semibandit::exit_usage;
}
