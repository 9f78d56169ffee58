#ifndef FEC_SOFTOUT_HPP
#define FEC_SOFTOUT_HPP

#include <span>
#include <vector>

#include "fec/chase.hpp"

namespace fec {

// Soft output of one constituent decode. Where saturated[i] is false,
// extrinsic[i] = app[i] - llr[i]. Where saturated[i] is true (every list
// candidate agrees on bit i), app and extrinsic both hold the agreed
// modulated bit (+1.0 or -1.0) for the caller's fallback scaling.
struct SoftOutput {
    std::vector<double> app;
    std::vector<double> extrinsic;
    std::vector<std::uint8_t> saturated;
};

// Per-half-iteration weighting schedules for Chase-Pyndiah decoding.
struct PyndiahCoefficients {
    std::vector<double> alpha;
    std::vector<double> beta;

    // the original published ramp for 8 half-iterations
    static PyndiahCoefficients classic();
    static PyndiahCoefficients constant(double a, double b, int half_iterations);

    double alpha_at(int ell) const;
    double beta_at(int ell) const;
};

// Brute-force log-APP ratio over the full codebook, log-domain accumulation
// of exp(-PM). Requires k <= 20 and every bit position non-constant across
// the codebook.
std::vector<double> exact_app(const CodeSpec& spec, std::span<const double> llr);

// List-based log-APP approximation with an iteration-independent coefficient:
// each side of the per-bit ratio accumulates exp(-PM) over its candidates
// plus gamma * sigma(+-l_i), so both sides are always nonzero. An empty list
// yields app = llr and extrinsic exactly zero.
SoftOutput proposed_soft_output(const CandidateList& list, std::span<const double> llr, double gamma);

// Max-approximation soft output: app_i = (max correlation with c_i = 0 minus
// max correlation with c_i = 1) / 2. Throws on an empty list.
SoftOutput pyndiah_raw(const CandidateList& list, std::span<const double> llr);

// Same, with each max replaced by log-domain summation over the subset.
SoftOutput pyndiah_like_raw(const CandidateList& list, std::span<const double> llr);

} // namespace fec

#endif
