// fecwb: FEC decoding workbench CLI.
//   sweep     run a Monte-Carlo BER sweep from a config file / flags
//   gain      Eb/N0 gain between two result tables at a target BER
//   validate  run the oracle and invariant self-check battery

#include <cstdio>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "fec/harness.hpp"
#include "fec/selftest.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitCensored = 3;
constexpr int kExitIo = 4;

std::vector<double> parse_list(const std::string& s) {
    std::vector<double> out;
    std::string item;
    std::stringstream ss(s);
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(std::stod(item));
    return out;
}

int cmd_sweep(const fec::ExperimentConfig& cfg) {
    auto records = fec::run_sweep(cfg);
    std::printf("# %s  (%s)\n", cfg.name.c_str(), fec::version_string().c_str());
    std::printf("# Eb_N0_dB        BER     errors         bits  censored  wall_s\n");
    bool any_exact = false;
    for (const auto& r : records) {
        std::printf("%9.4f  %.3e  %9lld  %11lld  %8s  %6.1f\n", r.ebn0_db, r.ber, r.bit_errors,
                    r.bits_counted, r.censored ? "yes" : "no", r.wall_time_s);
        any_exact |= !r.censored;
    }
    std::printf("wrote %s/%s.txt\n", cfg.out_dir.c_str(), cfg.name.c_str());
    return any_exact ? kExitOk : kExitCensored;
}

int cmd_gain(const std::string& table_a, const std::string& table_b, double target) {
    auto a = fec::load_ber_table(table_a);
    auto b = fec::load_ber_table(table_b);
    double g = fec::measure_gain(a, b, target);
    std::printf("gain of %s over %s at BER %.3e: %+.4f dB\n", table_b.c_str(), table_a.c_str(),
                target, g);
    return kExitOk;
}

int cmd_validate() {
    auto results = fec::run_selftests();
    bool all = true;
    for (const auto& r : results) {
        std::printf("[%s] %s%s%s\n", r.pass ? "ok" : "FAIL", r.name.c_str(),
                    r.detail.empty() ? "" : ": ", r.detail.c_str());
        all &= r.pass;
    }
    return all ? kExitOk : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"fecwb: product/staircase FEC decoding workbench"};
    app.require_subcommand(1);
    app.set_version_flag("--version", fec::version_string());

    fec::ExperimentConfig cfg;
    std::string ebn0_list, alpha_list, beta_list, scheme = "product", rule = "proposed";

    auto* sweep = app.add_subcommand("sweep", "run a Monte-Carlo BER sweep");
    sweep->set_config("--config", "", "key=value config file; flags override");
    sweep->add_option("--scheme", scheme, "product | staircase");
    sweep->add_option("--m", cfg.m, "constituent field degree (n = 2^m)");
    sweep->add_option("--t", cfg.t, "constituent error-correction radius (1 or 2)");
    sweep->add_option("--rule", rule, "proposed | pyndiah | pyndiah_like");
    sweep->add_option("--gamma", cfg.gamma, "proposed-rule weighting coefficient");
    sweep->add_option("--alpha", cfg.alpha, "pyndiah_like extrinsic weight");
    sweep->add_option("--beta", cfg.beta, "pyndiah_like saturated-position reliability");
    sweep->add_option("--alpha-schedule", alpha_list, "comma list, classic pyndiah per half-iteration");
    sweep->add_option("--beta-schedule", beta_list, "comma list, classic pyndiah per half-iteration");
    sweep->add_option("--p", cfg.p, "Chase-II flip positions (2^p patterns)");
    sweep->add_option("--iterations", cfg.iterations, "product full iterations");
    sweep->add_option("--window", cfg.window, "staircase window size w");
    sweep->add_option("--warmup-blocks", cfg.warmup_blocks, "staircase blocks excluded from counting");
    sweep->add_option("--chain-blocks", cfg.chain_blocks, "staircase transmitted blocks per chain");
    sweep->add_option("--ebn0", ebn0_list, "comma-separated Eb/N0 sweep list [dB]")->required();
    sweep->add_option("--min-errors", cfg.min_errors, "stop a point after this many bit errors");
    sweep->add_option("--max-bits", cfg.max_bits, "hard cap of counted bits per point");
    sweep->add_option("--batch-trials", cfg.batch_trials, "trials per stopping-rule batch (0 = auto)");
    sweep->add_option("--seed", cfg.master_seed, "master seed");
    sweep->add_option("--workers", cfg.workers, "worker threads (0 = hardware)");
    sweep->add_option("--out-dir", cfg.out_dir, "output directory");
    sweep->add_option("--name", cfg.name, "output file base name");

    std::string table_a, table_b;
    double target_ber = 1e-4;
    auto* gain = app.add_subcommand("gain", "Eb/N0 gain of table B over table A at a target BER");
    gain->add_option("table_a", table_a, "baseline BER table")->required();
    gain->add_option("table_b", table_b, "comparison BER table")->required();
    gain->add_option("--ber", target_ber, "target BER (default 1e-4)");

    auto* validate = app.add_subcommand("validate", "run the oracle/invariant suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (sweep->parsed()) {
            cfg.scheme = fec::scheme_from_string(scheme);
            cfg.rule = fec::rule_from_string(rule);
            cfg.ebn0_db = parse_list(ebn0_list);
            if (!alpha_list.empty()) cfg.alpha_schedule = parse_list(alpha_list);
            if (!beta_list.empty()) cfg.beta_schedule = parse_list(beta_list);
            cfg.validate();
            return cmd_sweep(cfg);
        }
        if (gain->parsed()) return cmd_gain(table_a, table_b, target_ber);
        if (validate->parsed()) return cmd_validate();
    } catch (const fec::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitOk;
}
