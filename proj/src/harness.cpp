#include "fec/harness.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#ifndef FECWB_VERSION
#define FECWB_VERSION "fecwb-dev"
#endif

namespace fec {

std::string version_string() { return FECWB_VERSION; }

std::string to_string(Scheme s) { return s == Scheme::product ? "product" : "staircase"; }

std::string to_string(DecodeRule r) {
    switch (r) {
        case DecodeRule::proposed: return "proposed";
        case DecodeRule::pyndiah: return "pyndiah";
        case DecodeRule::pyndiah_like: return "pyndiah_like";
    }
    return "?";
}

Scheme scheme_from_string(const std::string& s) {
    if (s == "product") return Scheme::product;
    if (s == "staircase") return Scheme::staircase;
    throw ConfigError("unknown scheme: " + s);
}

DecodeRule rule_from_string(const std::string& s) {
    if (s == "proposed") return DecodeRule::proposed;
    if (s == "pyndiah") return DecodeRule::pyndiah;
    if (s == "pyndiah_like") return DecodeRule::pyndiah_like;
    throw ConfigError("unknown rule: " + s);
}

void ExperimentConfig::validate() const {
    if (ebn0_db.empty()) throw ConfigError("ebn0_db sweep list is empty");
    if (m < 3 || m > 8) throw ConfigError("m must be in [3, 8]");
    if (t != 1 && t != 2) throw ConfigError("t must be 1 or 2");
    const int n = 1 << m;
    if (p < 0 || p > n) throw ConfigError("p out of range");
    if (min_errors < 1) throw ConfigError("min_errors must be >= 1");
    if (max_bits < 1) throw ConfigError("max_bits must be >= 1");
    if (batch_trials < 0) throw ConfigError("batch_trials must be >= 0");
    if (workers < 0) throw ConfigError("workers must be >= 0");
    if (rule == DecodeRule::proposed && !(gamma > 0.0))
        throw ConfigError("gamma must be positive for the proposed rule");

    CodeSpec spec = CodeSpec::make(m, t); // throws on unsupported combos
    if (scheme == Scheme::product) {
        if (iterations < 1) throw ConfigError("iterations must be >= 1");
        if (rule == DecodeRule::pyndiah) {
            auto c = product_coeffs();
            if (static_cast<int>(c.alpha.size()) < 2 * iterations ||
                static_cast<int>(c.beta.size()) < 2 * iterations)
                throw ConfigError("alpha/beta schedule shorter than 2 * iterations");
        }
    } else {
        if (window < 2) throw ConfigError("window must be >= 2");
        if (rule == DecodeRule::pyndiah)
            throw ConfigError("staircase decoding supports rules proposed and pyndiah_like");
        if (spec.k() - spec.n() / 2 < 1) throw ConfigError("constituent code too weak for staircase");
        if (chain_blocks < warmup_blocks + window)
            throw ConfigError("chain_blocks must be >= warmup_blocks + window");
        if (warmup_blocks < 0) throw ConfigError("warmup_blocks must be >= 0");
    }
}

double ExperimentConfig::code_rate() const {
    CodeSpec spec = CodeSpec::make(m, t);
    double kn = static_cast<double>(spec.k()) / spec.n();
    return scheme == Scheme::product ? kn * kn : 2.0 * kn - 1.0;
}

int ExperimentConfig::resolved_batch() const {
    if (batch_trials > 0) return batch_trials;
    return scheme == Scheme::product ? 16 : 4;
}

int ExperimentConfig::resolved_workers() const {
    if (workers > 0) return workers;
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

PyndiahCoefficients ExperimentConfig::product_coeffs() const {
    if (rule == DecodeRule::pyndiah_like)
        return PyndiahCoefficients::constant(alpha, beta, 2 * iterations);
    if (alpha_schedule.empty() && beta_schedule.empty()) {
        auto c = PyndiahCoefficients::classic();
        while (static_cast<int>(c.alpha.size()) < 2 * iterations) c.alpha.push_back(c.alpha.back());
        while (static_cast<int>(c.beta.size()) < 2 * iterations) c.beta.push_back(c.beta.back());
        return c;
    }
    return {alpha_schedule, beta_schedule};
}

namespace {

std::string join(const std::vector<double>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    return os.str();
}

} // namespace

std::string ExperimentConfig::describe() const {
    std::ostringstream os;
    os << "scheme = " << to_string(scheme) << '\n'
       << "m = " << m << '\n'
       << "t = " << t << '\n'
       << "rule = " << to_string(rule) << '\n'
       << "gamma = " << gamma << '\n'
       << "alpha = " << alpha << '\n'
       << "beta = " << beta << '\n'
       << "alpha_schedule = " << join(alpha_schedule) << '\n'
       << "beta_schedule = " << join(beta_schedule) << '\n'
       << "p = " << p << '\n'
       << "iterations = " << iterations << '\n'
       << "window = " << window << '\n'
       << "warmup_blocks = " << warmup_blocks << '\n'
       << "chain_blocks = " << chain_blocks << '\n'
       << "ebn0_db = " << join(ebn0_db) << '\n'
       << "min_errors = " << min_errors << '\n'
       << "max_bits = " << max_bits << '\n'
       << "batch_trials = " << resolved_batch() << '\n'
       << "master_seed = " << master_seed << '\n'
       << "code_rate = " << code_rate() << '\n';
    return os.str();
}

namespace {

struct TrialResult {
    long long errors = 0;
    long long bits = 0;
};

// one product word: encode random info, transmit, decode, count info-bit errors
TrialResult product_trial(const ExperimentConfig& cfg, const CodeSpec& spec,
                          const ChannelParams& params, std::uint64_t trial_seed) {
    const int n = spec.n(), k = spec.k();
    NoiseStream rng(trial_seed);

    Grid<std::uint8_t> info(k, k);
    for (auto& b : info) b = static_cast<std::uint8_t>(rng.bit());
    Grid<std::uint8_t> cw = encode_product(spec, info);

    auto symbols = modulate({cw.data(), cw.size()});
    auto llr = transmit(symbols, params, rng);
    Grid<double> ch(n, n);
    std::copy(llr.begin(), llr.end(), ch.begin());

    ProductDecodeParams dp;
    dp.rule = cfg.rule;
    dp.p = cfg.p;
    dp.iterations = cfg.iterations;
    dp.gamma = cfg.gamma;
    dp.coeffs = cfg.product_coeffs();

    LlrPlane plane = LlrPlane::from_channel(std::move(ch));
    Grid<std::uint8_t> decided = decode_product(plane, spec, dp);

    TrialResult res;
    res.bits = static_cast<long long>(k) * k;
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c) res.errors += decided(r, c) != info(r, c);
    return res;
}

// one staircase chain: continuous sliding window over chain_blocks blocks,
// info-bit errors counted on decided blocks after the warmup
TrialResult staircase_trial(const ExperimentConfig& cfg, const CodeSpec& spec,
                            const ChannelParams& params, std::uint64_t trial_seed) {
    const int h = spec.n() / 2;
    NoiseStream rng(trial_seed);
    StaircaseEncoder enc(spec);
    const int info_cols = enc.info_cols();
    const int last_decided = cfg.chain_blocks - cfg.window + 1;

    StairDecodeParams dp;
    dp.rule = cfg.rule;
    dp.p = cfg.p;
    dp.gamma = cfg.gamma;
    dp.alpha = cfg.alpha;
    dp.beta = cfg.beta;

    long next_tx = 1;
    std::deque<Grid<std::uint8_t>> tx_info; // info of in-flight blocks, oldest first
    auto make_block = [&](long index) {
        Grid<std::uint8_t> info(h, info_cols);
        for (auto& b : info) b = static_cast<std::uint8_t>(rng.bit());
        Grid<std::uint8_t> block = enc.encode_next(info);
        tx_info.push_back(std::move(info));
        auto symbols = modulate({block.data(), block.size()});
        auto llr = transmit(symbols, params, rng);
        Grid<double> ch(h, h);
        std::copy(llr.begin(), llr.end(), ch.begin());
        return make_decoder_block(spec, index, std::move(ch));
    };

    DecodeWindow win;
    win.w = cfg.window;
    win.blocks.push_back(known_block(spec));
    for (; next_tx < cfg.window; ++next_tx) win.blocks.push_back(make_block(next_tx));

    TrialResult res;
    for (long pos = 0; pos <= last_decided; ++pos) {
        WindowDecision dec = decode_window(win, spec, dp);
        if (pos >= 1) { // transmitted block; pos 0 is the known block
            const Grid<std::uint8_t>& sent = tx_info.front();
            if (pos > cfg.warmup_blocks) {
                for (int r = 0; r < h; ++r)
                    for (int c = 0; c < info_cols; ++c) res.errors += dec.bits(r, c) != sent(r, c);
                res.bits += static_cast<long long>(h) * info_cols;
            }
            tx_info.pop_front();
        }
        if (pos < last_decided) {
            slide(win, make_block(next_tx));
            ++next_tx;
        }
    }
    return res;
}

} // namespace

BerRecord run_point(const ExperimentConfig& cfg, double ebn0_db) {
    cfg.validate();
    const CodeSpec spec = CodeSpec::make(cfg.m, cfg.t);
    const ChannelParams params = ChannelParams::make(ebn0_db, cfg.code_rate());
    const std::uint64_t point_tag = std::bit_cast<std::uint64_t>(ebn0_db);
    const int batch = cfg.resolved_batch();
    const int workers = cfg.resolved_workers();

    auto t0 = std::chrono::steady_clock::now();
    BerRecord rec;
    rec.ebn0_db = ebn0_db;
    rec.seed = cfg.master_seed;

    long long next_trial = 0;
    while (true) {
        std::vector<TrialResult> slot(batch);
        std::atomic<int> cursor{0};
        auto work = [&] {
            for (int i; (i = cursor.fetch_add(1)) < batch;) {
                std::uint64_t seed = derive_seed(cfg.master_seed, point_tag,
                                                 static_cast<std::uint64_t>(next_trial + i));
                slot[i] = cfg.scheme == Scheme::product
                              ? product_trial(cfg, spec, params, seed)
                              : staircase_trial(cfg, spec, params, seed);
            }
        };
        std::vector<std::thread> pool;
        for (int w = 1; w < std::min(workers, batch); ++w) pool.emplace_back(work);
        work();
        for (auto& th : pool) th.join();

        for (const auto& r : slot) { // fixed-order reduction
            rec.bit_errors += r.errors;
            rec.bits_counted += r.bits;
        }
        next_trial += batch;
        if (rec.bit_errors >= cfg.min_errors || rec.bits_counted >= cfg.max_bits) break;
    }

    rec.censored = rec.bit_errors < cfg.min_errors;
    rec.ber = rec.bits_counted > 0 ? static_cast<double>(rec.bit_errors) / rec.bits_counted : 0.0;
    rec.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rec;
}

std::vector<BerRecord> run_sweep(const ExperimentConfig& cfg) {
    cfg.validate();
    std::vector<double> points = cfg.ebn0_db;
    std::sort(points.begin(), points.end());

    std::vector<BerRecord> records;
    records.reserve(points.size());
    for (double e : points) records.push_back(run_point(cfg, e));

    std::filesystem::create_directories(cfg.out_dir);
    const std::string base = cfg.out_dir + "/" + cfg.name;
    write_ber_table(base + ".txt", records);
    write_metadata(base + ".meta.txt", cfg, records);
    return records;
}

void write_ber_table(const std::string& path, const std::vector<BerRecord>& records) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open " + path);
    os << "Eb_N0 BER\n";
    char line[64];
    for (const auto& r : records) {
        std::snprintf(line, sizeof line, "%.10g %.6e\n", r.ebn0_db, r.ber);
        os << line;
    }
    if (!os.good()) throw std::runtime_error("write failed: " + path);
}

void write_metadata(const std::string& path, const ExperimentConfig& cfg,
                    const std::vector<BerRecord>& records) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open " + path);
    os << "# fecwb sweep metadata\n"
       << "version = " << version_string() << "\n\n"
       << "[config]\n"
       << cfg.describe() << "\n[points]\n"
       << "# Eb_N0_dB bits_counted bit_errors BER censored wall_time_s\n";
    char line[160];
    for (const auto& r : records) {
        std::snprintf(line, sizeof line, "%.10g %lld %lld %.6e %d %.2f\n", r.ebn0_db,
                      r.bits_counted, r.bit_errors, r.ber, r.censored ? 1 : 0, r.wall_time_s);
        os << line;
    }
    if (!os.good()) throw std::runtime_error("write failed: " + path);
}

BerCurve load_ber_table(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open " + path);
    std::string header;
    std::getline(is, header);
    if (header.find("Eb_N0") == std::string::npos || header.find("BER") == std::string::npos)
        throw std::runtime_error("not a BER table (missing 'Eb_N0 BER' header): " + path);
    BerCurve curve;
    double e, b;
    while (is >> e >> b) curve.emplace_back(e, b);
    return curve;
}

namespace {

// Eb/N0 reaching the target BER, log-linear between bracketing points
double interpolate_ebn0(const BerCurve& curve, double target) {
    for (std::size_t i = 0; i + 1 < curve.size(); ++i) {
        auto [e1, b1] = curve[i];
        auto [e2, b2] = curve[i + 1];
        if (b1 <= 0.0 || b2 <= 0.0) continue;
        double hi = std::max(b1, b2), lo = std::min(b1, b2);
        if (target > hi || target < lo) continue;
        if (b1 == b2) return e1;
        double f = (std::log10(b1) - std::log10(target)) / (std::log10(b1) - std::log10(b2));
        return e1 + f * (e2 - e1);
    }
    throw std::domain_error("target BER not bracketed by curve");
}

} // namespace

double measure_gain(const BerCurve& curve_a, const BerCurve& curve_b, double target_ber) {
    if (curve_a.size() < 2 || curve_b.size() < 2)
        throw std::domain_error("curves need at least two points");
    if (!(target_ber > 0.0)) throw std::domain_error("target BER must be positive");
    return interpolate_ebn0(curve_a, target_ber) - interpolate_ebn0(curve_b, target_ber);
}

} // namespace fec
