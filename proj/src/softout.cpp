#include "fec/softout.hpp"

#include <cmath>
#include <stdexcept>

#include "fec/logmath.hpp"

namespace fec {

PyndiahCoefficients PyndiahCoefficients::classic() {
    return {{0.2, 0.3, 0.5, 0.7, 0.9, 1.0, 1.0, 1.0},
            {0.2, 0.4, 0.6, 0.8, 1.0, 1.0, 1.0, 1.0}};
}

PyndiahCoefficients PyndiahCoefficients::constant(double a, double b, int half_iterations) {
    return {std::vector<double>(half_iterations, a), std::vector<double>(half_iterations, b)};
}

double PyndiahCoefficients::alpha_at(int ell) const {
    if (ell < 0 || ell >= static_cast<int>(alpha.size()))
        throw std::out_of_range("softout: half-iteration beyond alpha schedule");
    return alpha[ell];
}

double PyndiahCoefficients::beta_at(int ell) const {
    if (ell < 0 || ell >= static_cast<int>(beta.size()))
        throw std::out_of_range("softout: half-iteration beyond beta schedule");
    return beta[ell];
}

std::vector<double> exact_app(const CodeSpec& spec, std::span<const double> llr) {
    const int n = spec.n();
    if (static_cast<int>(llr.size()) != n) throw std::invalid_argument("softout: length mismatch");

    std::vector<double> num(n, kNegInf), den(n, kNegInf);
    for (const auto& cw : enumerate_codebook(spec)) {
        double neg_pm = -path_metric(cw, llr);
        for (int i = 0; i < n; ++i) {
            if (cw[i] == 0)
                num[i] = maxstar(num[i], neg_pm);
            else
                den[i] = maxstar(den[i], neg_pm);
        }
    }
    std::vector<double> app(n);
    for (int i = 0; i < n; ++i) {
        if (num[i] == kNegInf || den[i] == kNegInf)
            throw std::invalid_argument("softout: bit position constant across codebook");
        app[i] = num[i] - den[i];
    }
    return app;
}

SoftOutput proposed_soft_output(const CandidateList& list, std::span<const double> llr, double gamma) {
    if (!(gamma > 0.0)) throw std::invalid_argument("softout: gamma must be positive");
    const int n = static_cast<int>(llr.size());

    SoftOutput out;
    out.app.resize(n);
    out.extrinsic.assign(n, 0.0);
    out.saturated.assign(n, 0);

    if (list.empty()) { // gamma terms alone: app = l, extrinsic exactly zero
        for (int i = 0; i < n; ++i) out.app[i] = llr[i];
        return out;
    }

    const double ln_gamma = std::log(gamma);
    std::vector<double> num(n), den(n);
    for (int i = 0; i < n; ++i) {
        num[i] = ln_gamma + ln_sigmoid(llr[i]);
        den[i] = ln_gamma + ln_sigmoid(-llr[i]);
    }
    for (const auto& cand : list.candidates) {
        const double neg_pm = -cand.path_metric;
        for (int i = 0; i < n; ++i) {
            if (cand.word[i] == 0)
                num[i] = maxstar(num[i], neg_pm);
            else
                den[i] = maxstar(den[i], neg_pm);
        }
    }
    for (int i = 0; i < n; ++i) {
        out.app[i] = num[i] - den[i];
        out.extrinsic[i] = out.app[i] - llr[i];
    }
    return out;
}

namespace {

enum class Accumulate { max, maxstar };

SoftOutput list_soft_output(const CandidateList& list, std::span<const double> llr, Accumulate acc) {
    if (list.empty()) throw std::invalid_argument("softout: empty candidate list");
    const int n = static_cast<int>(llr.size());

    std::vector<double> num(n, kNegInf), den(n, kNegInf);
    for (const auto& cand : list.candidates) {
        const double neg_pm = -cand.path_metric;
        for (int i = 0; i < n; ++i) {
            double& side = cand.word[i] == 0 ? num[i] : den[i];
            side = acc == Accumulate::max ? std::max(side, neg_pm) : maxstar(side, neg_pm);
        }
    }

    SoftOutput out;
    out.app.resize(n);
    out.extrinsic.resize(n);
    out.saturated.assign(n, 0);
    for (int i = 0; i < n; ++i) {
        if (num[i] != kNegInf && den[i] != kNegInf) {
            out.app[i] = num[i] - den[i];
            out.extrinsic[i] = out.app[i] - llr[i];
        } else {
            out.saturated[i] = 1;
            double sign = num[i] != kNegInf ? 1.0 : -1.0; // agreed bit, modulated
            out.app[i] = sign;
            out.extrinsic[i] = sign;
        }
    }
    return out;
}

} // namespace

SoftOutput pyndiah_raw(const CandidateList& list, std::span<const double> llr) {
    return list_soft_output(list, llr, Accumulate::max);
}

SoftOutput pyndiah_like_raw(const CandidateList& list, std::span<const double> llr) {
    return list_soft_output(list, llr, Accumulate::maxstar);
}

} // namespace fec
