#include "fec/selftest.hpp"

#include <cmath>
#include <sstream>

#include "fec/channel.hpp"
#include "fec/harness.hpp"
#include "fec/logmath.hpp"
#include "fec/softout.hpp"
#include "fec/staircase.hpp"

namespace fec {

namespace {

using Check = bool (*)(std::string&);

bool check_field_axioms(std::string& detail) {
    auto f = FieldTable::build(3, FieldTable::default_primitive_poly(3));
    for (int a = 0; a < 8; ++a) {
        for (int b = 0; b < 8; ++b) {
            auto ab = f.mul(a, b);
            if (ab != f.mul(b, a)) { detail = "commutativity"; return false; }
            for (int c = 0; c < 8; ++c) {
                if (f.mul(ab, c) != f.mul(a, f.mul(b, c))) { detail = "associativity"; return false; }
                if (f.mul(a, b ^ c) != (f.mul(a, b) ^ f.mul(a, c))) { detail = "distributivity"; return false; }
            }
        }
    }
    for (int m : {3, 6, 8}) {
        auto g = FieldTable::build(m, FieldTable::default_primitive_poly(m));
        for (int a = 1; a < g.num_elements(); ++a) {
            if (g.pow(a, g.order()) != 1) { detail = "pow(a, 2^m-1) != 1"; return false; }
            if (g.mul(g.inv(a), a) != 1) { detail = "inv"; return false; }
        }
    }
    return true;
}

bool check_bounded_decoding(std::string& detail) {
    auto small = CodeSpec::make(3, 1);
    for (const auto& cw : enumerate_codebook(small)) {
        for (int e = 0; e < small.n(); ++e) {
            HardWord w = cw;
            w[e] ^= 1;
            auto dec = small.decode_bounded(w);
            if (!dec || *dec != cw) { detail = "(8,4) single error"; return false; }
        }
    }
    auto big = CodeSpec::make(8, 2);
    NoiseStream rng(7);
    HardWord msg(big.k());
    for (int trial = 0; trial < 300; ++trial) {
        for (auto& b : msg) b = static_cast<std::uint8_t>(rng.bit());
        HardWord cw = big.encode(msg);
        HardWord w = cw;
        int e1 = static_cast<int>(rng.bits64() % big.n());
        int e2 = static_cast<int>(rng.bits64() % big.n());
        w[e1] ^= 1;
        if (e2 != e1) w[e2] ^= 1;
        auto dec = big.decode_bounded(w);
        if (!dec || *dec != cw) { detail = "(256,239) double error"; return false; }
    }
    return true;
}

bool check_path_metric_duality(std::string& detail) {
    auto spec = CodeSpec::make(3, 1);
    NoiseStream rng(11);
    for (int trial = 0; trial < 500; ++trial) {
        LlrWord l(spec.n());
        for (auto& v : l) v = 3.0 * rng.gaussian();
        auto list = chase2_list(spec, l, 4);
        if (list.empty()) continue;
        const Candidate* best_pm = &list.candidates.front();
        std::size_t best_corr = 0;
        double corr_max = -1e300;
        for (std::size_t i = 0; i < list.candidates.size(); ++i) {
            const auto& c = list.candidates[i];
            if (c.path_metric < best_pm->path_metric) best_pm = &c;
            double corr = correlation(c.word, l);
            if (corr > corr_max) { corr_max = corr; best_corr = i; }
            double lhs = -c.path_metric;
            double k = 0.0;
            for (double v : l) k += softplus(std::fabs(v)) - std::fabs(v) / 2.0; // ln 2cosh(v/2)
            if (std::fabs(lhs - (corr / 2.0 - k)) > 1e-9) { detail = "metric identity"; return false; }
        }
        if (best_pm != &list.candidates[best_corr]) { detail = "argmin PM vs argmax corr"; return false; }
    }
    return true;
}

bool check_soft_output(std::string& detail) {
    auto spec = CodeSpec::make(3, 1);
    auto book = enumerate_codebook(spec);
    NoiseStream rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        LlrWord l(spec.n());
        for (auto& v : l) v = 2.0 + 2.0 * rng.gaussian();
        auto oracle = exact_app(spec, l);
        auto full = list_from_codewords(book, l);
        auto prop = proposed_soft_output(full, l, 1e-300);
        auto like = pyndiah_like_raw(full, l);
        for (int i = 0; i < spec.n(); ++i) {
            if (std::fabs(prop.app[i] - oracle[i]) > 1e-6) { detail = "proposed vs exact"; return false; }
            if (std::fabs(like.app[i] - oracle[i]) > 1e-9) { detail = "pyndiah_like vs exact"; return false; }
        }
        CandidateList none;
        auto empty = proposed_soft_output(none, l, 0x1p-17);
        for (int i = 0; i < spec.n(); ++i)
            if (empty.extrinsic[i] != 0.0) { detail = "empty-list extrinsic"; return false; }
    }
    return true;
}

bool check_constructions(std::string& detail) {
    auto spec = CodeSpec::make(6, 1);
    NoiseStream rng(17);
    for (int trial = 0; trial < 5; ++trial) {
        Grid<std::uint8_t> info(spec.k(), spec.k());
        for (auto& b : info) b = static_cast<std::uint8_t>(rng.bit());
        auto cw = encode_product(spec, info);
        HardWord buf(spec.n());
        for (int r = 0; r < spec.n(); ++r)
            if (!spec.is_codeword(cw.row(r))) { detail = "product row"; return false; }
        for (int c = 0; c < spec.n(); ++c) {
            for (int r = 0; r < spec.n(); ++r) buf[r] = cw(r, c);
            if (!spec.is_codeword(buf)) { detail = "product column"; return false; }
        }
    }
    StaircaseEncoder enc(spec);
    const int h = enc.block_dim();
    Grid<std::uint8_t> prev(h, h, 0);
    for (int i = 1; i <= 5; ++i) {
        Grid<std::uint8_t> info(h, enc.info_cols());
        for (auto& b : info) b = static_cast<std::uint8_t>(rng.bit());
        auto block = enc.encode_next(info);
        HardWord row(spec.n());
        for (int r = 0; r < h; ++r) {
            for (int c = 0; c < h; ++c) row[c] = prev(c, r);
            for (int c = 0; c < h; ++c) row[h + c] = block(r, c);
            if (!spec.is_codeword(row)) { detail = "staircase interface row"; return false; }
        }
        prev = block;
    }
    return true;
}

bool check_channel_moments(std::string& detail) {
    ChannelParams params = ChannelParams::make(10.0 * std::log10(0.5), 1.0); // sigma^2 = 1
    NoiseStream rng(23);
    std::vector<double> ones(1000, 1.0);
    double sum = 0.0, sum2 = 0.0;
    const int reps = 1000;
    for (int r = 0; r < reps; ++r) {
        auto llr = transmit(ones, params, rng);
        for (double v : llr) { sum += v; sum2 += v * v; }
    }
    const double cnt = 1000.0 * reps;
    double mean = sum / cnt;
    double var = sum2 / cnt - mean * mean;
    double m_ref = 2.0 / params.sigma2, v_ref = 4.0 / params.sigma2;
    std::ostringstream os;
    os << "mean " << mean << " (ref " << m_ref << "), var " << var << " (ref " << v_ref << ")";
    detail = os.str();
    return std::fabs(mean - m_ref) < 0.01 * m_ref && std::fabs(var - v_ref) < 0.01 * v_ref;
}

bool check_window_smoke(std::string& detail) {
    auto spec = CodeSpec::make(6, 1);
    ExperimentConfig cfg;
    cfg.scheme = Scheme::staircase;
    cfg.m = 6;
    cfg.t = 1;
    cfg.rule = DecodeRule::proposed;
    cfg.window = 2;
    cfg.warmup_blocks = 0;
    cfg.chain_blocks = 6;
    cfg.ebn0_db = {9.0};
    cfg.min_errors = 1;
    cfg.max_bits = 4000;
    cfg.batch_trials = 1;
    cfg.workers = 1;
    auto rec = run_point(cfg, 9.0);
    if (rec.bit_errors != 0) { detail = "errors at high SNR"; return false; }
    (void)spec;
    return true;
}

} // namespace

std::vector<CheckResult> run_selftests() {
    struct Entry { const char* name; Check fn; };
    const Entry entries[] = {
        {"gf field axioms and inverses", check_field_axioms},
        {"ebch bounded-distance decoding", check_bounded_decoding},
        {"chase path-metric duality", check_path_metric_duality},
        {"soft-output oracle identities", check_soft_output},
        {"product/staircase construction validity", check_constructions},
        {"channel LLR moments", check_channel_moments},
        {"staircase window smoke test", check_window_smoke},
    };
    std::vector<CheckResult> out;
    for (const auto& e : entries) {
        CheckResult r;
        r.name = e.name;
        try {
            r.pass = e.fn(r.detail);
        } catch (const std::exception& ex) {
            r.pass = false;
            r.detail = ex.what();
        }
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace fec
