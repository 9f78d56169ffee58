#include "fec/product.hpp"

#include <cmath>
#include <stdexcept>

namespace fec {

LlrPlane LlrPlane::from_channel(Grid<double> ch) {
    LlrPlane plane;
    plane.extrinsic_rows = Grid<double>(ch.rows(), ch.cols(), 0.0);
    plane.extrinsic_cols = Grid<double>(ch.rows(), ch.cols(), 0.0);
    plane.channel = std::move(ch);
    return plane;
}

Grid<std::uint8_t> encode_product(const CodeSpec& spec, const Grid<std::uint8_t>& info) {
    const int n = spec.n(), k = spec.k();
    if (info.rows() != k || info.cols() != k)
        throw std::invalid_argument("product: info block must be k x k");

    Grid<std::uint8_t> cw(n, n, 0);
    HardWord buf(k);
    for (int r = 0; r < k; ++r) {
        auto enc = spec.encode(info.row(r));
        for (int c = 0; c < n; ++c) cw(r, c) = enc[c];
    }
    for (int c = 0; c < n; ++c) {
        for (int r = 0; r < k; ++r) buf[r] = cw(r, c);
        auto enc = spec.encode(buf);
        for (int r = k; r < n; ++r) cw(r, c) = enc[r];
    }
    return cw;
}

namespace {

void read_word(const Grid<double>& g, Orientation o, int idx, LlrWord& out) {
    if (o == Orientation::rows) {
        auto r = g.row(idx);
        out.assign(r.begin(), r.end());
    } else {
        out.resize(g.rows());
        for (int r = 0; r < g.rows(); ++r) out[r] = g(r, idx);
    }
}

void write_word(Grid<double>& g, Orientation o, int idx, const std::vector<double>& in) {
    if (o == Orientation::rows)
        for (int c = 0; c < g.cols(); ++c) g(idx, c) = in[c];
    else
        for (int r = 0; r < g.rows(); ++r) g(r, idx) = in[r];
}

// minimum-path-metric candidate, or hard decision on the input when empty
void decide_word(const CandidateList& list, const LlrWord& l, Orientation o, int idx,
                 Grid<std::uint8_t>& decisions) {
    HardWord bits;
    if (list.empty()) {
        bits = hard_decision(l);
    } else {
        const Candidate* best = &list.candidates.front();
        for (const auto& c : list.candidates)
            if (c.path_metric < best->path_metric) best = &c;
        bits = best->word;
    }
    if (o == Orientation::rows)
        for (int c = 0; c < decisions.cols(); ++c) decisions(idx, c) = bits[c];
    else
        for (int r = 0; r < decisions.rows(); ++r) decisions(r, idx) = bits[r];
}

} // namespace

void half_iteration_proposed(LlrPlane& plane, Orientation o, const CodeSpec& spec, int p,
                             double gamma, Grid<std::uint8_t>* decisions) {
    const int n = spec.n();
    Grid<double>& mine = o == Orientation::rows ? plane.extrinsic_rows : plane.extrinsic_cols;
    const Grid<double>& other = o == Orientation::rows ? plane.extrinsic_cols : plane.extrinsic_rows;

    LlrWord l(n), apriori(n), channel(n);
    for (int w = 0; w < n; ++w) {
        read_word(plane.channel, o, w, channel);
        read_word(other, o, w, apriori);
        for (int i = 0; i < n; ++i) l[i] = channel[i] + apriori[i];

        auto list = chase2_list(spec, l, p);
        auto soft = proposed_soft_output(list, l, gamma);
        write_word(mine, o, w, soft.extrinsic);
        if (decisions) decide_word(list, l, o, w, *decisions);
    }
}

void half_iteration_pyndiah(LlrPlane& plane, Orientation o, const CodeSpec& spec, int p,
                            const PyndiahCoefficients& coeffs, int ell, PyndiahVariant variant,
                            Grid<std::uint8_t>* decisions) {
    const int n = spec.n();
    const double alpha = coeffs.alpha_at(ell);
    const double beta = coeffs.beta_at(ell);
    Grid<double>& mine = o == Orientation::rows ? plane.extrinsic_rows : plane.extrinsic_cols;
    const Grid<double>& other = o == Orientation::rows ? plane.extrinsic_cols : plane.extrinsic_rows;

    double ch_scale = 1.0;
    if (variant == PyndiahVariant::classic) {
        double mean_abs = 0.0;
        for (double v : plane.channel) mean_abs += std::fabs(v);
        mean_abs /= static_cast<double>(plane.channel.size());
        if (mean_abs > 0.0) ch_scale = 1.0 / mean_abs;
    }

    // raw pass; classic scaling needs |app - l| statistics over all n^2 bits
    Grid<double> raw(n, n);        // app - l, or the agreed sign where saturated
    Grid<std::uint8_t> sat(n, n);  // 1 = saturated, 2 = empty list
    double sum_abs_diff = 0.0;
    long long j_count = 0;

    LlrWord l(n), apriori(n), channel(n);
    for (int w = 0; w < n; ++w) {
        read_word(plane.channel, o, w, channel);
        read_word(other, o, w, apriori);
        for (int i = 0; i < n; ++i) l[i] = ch_scale * channel[i] + apriori[i];

        auto list = chase2_list(spec, l, p);
        if (decisions) decide_word(list, l, o, w, *decisions);
        if (list.empty()) { // no candidates: contributes no extrinsic
            for (int i = 0; i < n; ++i) {
                double& rv = o == Orientation::rows ? raw(w, i) : raw(i, w);
                std::uint8_t& sv = o == Orientation::rows ? sat(w, i) : sat(i, w);
                rv = 0.0;
                sv = 2;
            }
            continue;
        }
        auto soft = variant == PyndiahVariant::classic ? pyndiah_raw(list, l)
                                                       : pyndiah_like_raw(list, l);
        for (int i = 0; i < n; ++i) {
            double& rv = o == Orientation::rows ? raw(w, i) : raw(i, w);
            std::uint8_t& sv = o == Orientation::rows ? sat(w, i) : sat(i, w);
            sv = soft.saturated[i];
            if (soft.saturated[i]) {
                rv = soft.extrinsic[i]; // agreed sign
            } else {
                rv = soft.app[i] - l[i];
                sum_abs_diff += std::fabs(rv);
                ++j_count;
            }
        }
    }

    double norm = 1.0; // degenerate all-saturated pass keeps scale 1
    if (variant == PyndiahVariant::classic && j_count > 0) {
        double mean = sum_abs_diff / static_cast<double>(j_count);
        if (mean > 0.0) norm = 1.0 / mean;
    }

    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            double e;
            if (sat(r, c) == 2)
                e = 0.0;
            else if (sat(r, c) == 1)
                e = variant == PyndiahVariant::classic ? alpha * norm * beta * raw(r, c)
                                                       : alpha * beta * raw(r, c);
            else
                e = variant == PyndiahVariant::classic ? alpha * norm * raw(r, c)
                                                       : alpha * raw(r, c);
            mine(r, c) = e;
        }
    }
}

Grid<std::uint8_t> decode_product(LlrPlane& plane, const CodeSpec& spec,
                                  const ProductDecodeParams& params) {
    if (params.iterations < 1) throw std::invalid_argument("product: iterations must be >= 1");
    const int n = spec.n();
    if (plane.channel.rows() != n || plane.channel.cols() != n)
        throw std::invalid_argument("product: plane size mismatch");

    Grid<std::uint8_t> decisions(n, n, 0);
    const int half_iters = 2 * params.iterations;
    for (int ell = 0; ell < half_iters; ++ell) {
        Orientation o = (ell % 2 == 0) ? Orientation::rows : Orientation::cols;
        Grid<std::uint8_t>* dec = (ell == half_iters - 1) ? &decisions : nullptr;
        switch (params.rule) {
            case DecodeRule::proposed:
                half_iteration_proposed(plane, o, spec, params.p, params.gamma, dec);
                break;
            case DecodeRule::pyndiah:
                half_iteration_pyndiah(plane, o, spec, params.p, params.coeffs, ell,
                                       PyndiahVariant::classic, dec);
                break;
            case DecodeRule::pyndiah_like:
                half_iteration_pyndiah(plane, o, spec, params.p, params.coeffs, ell,
                                       PyndiahVariant::like, dec);
                break;
        }
    }
    return decisions;
}

} // namespace fec
