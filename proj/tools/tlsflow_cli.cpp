// tlsflow: spectra, stationary flows and parameter sweeps for two coupled dissipative qubits

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tlsflow/sweep.hpp"
#include "tlsflow/validation.hpp"

namespace {

constexpr int kExitValidation = 1;
constexpr int kExitConfig = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw tlsflow::sweep::ConfigError("cannot read config file '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

int run_with_config(const std::string& path, const std::vector<std::string>& overrides,
                    void (*runner)(const tlsflow::sweep::SweepConfig&, std::ostream&)) {
    const auto cfg = tlsflow::sweep::load_config(path.empty() ? std::string() : read_file(path), overrides);
    if (cfg.output == "-") {
        runner(cfg, std::cout);
        return 0;
    }
    std::ofstream out(cfg.output, std::ios::binary);
    if (!out) throw tlsflow::sweep::ConfigError("config key 'output': cannot open '" + cfg.output + "'");
    runner(cfg, out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectra and stationary energy flows of two coupled two-level systems"};
    app.require_subcommand(1);

    std::string config_path;
    std::vector<std::string> overrides;
    auto add_config_options = [&](CLI::App* sub) {
        sub->add_option("-c,--config", config_path, "key = value configuration file");
        sub->add_option("--set", overrides, "override a configuration key (key=value)")->take_all();
    };

    auto* eigs = app.add_subcommand("eigs", "eigenvalues of the moment generators over the Omega grid");
    auto* sweep = app.add_subcommand("sweep", "stationary flows over the (gamma1, Omega) grid");
    auto* optline = app.add_subcommand("optline", "coupling that maximizes the specific flow, per gamma1");
    auto* steady = app.add_subcommand("steady", "steady state and flows at a single point");
    for (auto* sub : {eigs, sweep, optline, steady}) add_config_options(sub);

    auto* validate = app.add_subcommand("validate", "run the acceptance suite");
    int only = 0;
    bool mutate = false;
    int threads = 8;
    validate->add_option("--only", only, "run a single criterion (1-12)")->check(CLI::Range(1, 12));
    validate->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
    validate->add_flag("--mutate-local-sign", mutate, "deliberately break the local generator")->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    try {
        if (*eigs) return run_with_config(config_path, overrides, tlsflow::sweep::run_eigs);
        if (*sweep) return run_with_config(config_path, overrides, tlsflow::sweep::run_sweep);
        if (*optline) return run_with_config(config_path, overrides, tlsflow::sweep::run_optline);
        if (*steady) return run_with_config(config_path, overrides, tlsflow::sweep::run_steady);

        tlsflow::validation::ValidationOptions opts;
        opts.mutate_local_sign = mutate;
        opts.threads = threads;
        bool all_passed = true;
        for (int id = 1; id <= tlsflow::validation::kCriterionCount; ++id) {
            if (only != 0 && id != only) continue;
            const auto r = tlsflow::validation::run_criterion(id, opts);
            std::cout << tlsflow::validation::format_result(r) << std::endl;
            all_passed = all_passed && r.passed;
        }
        return all_passed ? 0 : kExitValidation;
    } catch (const tlsflow::sweep::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::domain_error& e) {
        std::cerr << "parameter error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    }
}
