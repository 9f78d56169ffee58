#ifndef FEC_HARNESS_HPP
#define FEC_HARNESS_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "fec/channel.hpp"
#include "fec/staircase.hpp"

namespace fec {

enum class Scheme { product, staircase };

std::string to_string(Scheme s);
std::string to_string(DecodeRule r);
Scheme scheme_from_string(const std::string& s);
DecodeRule rule_from_string(const std::string& s);

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ExperimentConfig {
    Scheme scheme = Scheme::product;
    int m = 8;
    int t = 2;

    DecodeRule rule = DecodeRule::proposed;
    double gamma = 0x1p-17;
    double alpha = 0.4; // pyndiah_like weighting
    double beta = 3.6;
    std::vector<double> alpha_schedule; // classic pyndiah; empty = published ramp
    std::vector<double> beta_schedule;

    int p = 5;
    int iterations = 4; // product

    int window = 8; // staircase
    int warmup_blocks = 20;
    int chain_blocks = 227; // transmitted blocks per chain

    std::vector<double> ebn0_db;
    long long min_errors = 100;
    long long max_bits = 1'000'000'000;
    int batch_trials = 0; // 0 = scheme default (16 words / 4 chains)
    std::uint64_t master_seed = 1;
    int workers = 0; // 0 = hardware concurrency

    std::string out_dir = ".";
    std::string name = "sweep";

    void validate() const; // throws ConfigError
    double code_rate() const;
    int resolved_batch() const;
    int resolved_workers() const;
    PyndiahCoefficients product_coeffs() const;
    std::string describe() const; // key = value lines
};

struct BerRecord {
    double ebn0_db = 0.0;
    long long bits_counted = 0;
    long long bit_errors = 0;
    double ber = 0.0;
    double wall_time_s = 0.0;
    std::uint64_t seed = 0;
    bool censored = false; // stopped at the bit cap before min_errors
};

// Monte-Carlo at one operating point. Trials (product words or staircase
// chains) run in deterministic fixed-size batches distributed over the worker
// pool; the stopping rule is evaluated between batches, so results do not
// depend on the worker count.
BerRecord run_point(const ExperimentConfig& cfg, double ebn0_db);

// All sweep points ascending; writes "<name>.txt" (header "Eb_N0 BER") and
// "<name>.meta.txt" under out_dir.
std::vector<BerRecord> run_sweep(const ExperimentConfig& cfg);

using BerCurve = std::vector<std::pair<double, double>>; // (Eb/N0 dB, BER)

// Eb/N0 offset between two curves at a target BER, each curve interpolated
// log-linearly; positive when curve_b reaches the target at lower Eb/N0.
// Throws std::domain_error when either curve does not bracket the target.
double measure_gain(const BerCurve& curve_a, const BerCurve& curve_b, double target_ber);

BerCurve load_ber_table(const std::string& path);
void write_ber_table(const std::string& path, const std::vector<BerRecord>& records);
void write_metadata(const std::string& path, const ExperimentConfig& cfg,
                    const std::vector<BerRecord>& records);

std::string version_string();

} // namespace fec

#endif
