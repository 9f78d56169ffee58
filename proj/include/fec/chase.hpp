#ifndef FEC_CHASE_HPP
#define FEC_CHASE_HPP

#include <span>
#include <vector>

#include "fec/ebch.hpp"

namespace fec {

using LlrWord = std::vector<double>;

struct Candidate {
    HardWord word;
    double path_metric; // recomputable via path_metric(word, llr)
};

// Distinct codewords found by Chase-II decoding. May be empty when every
// flip pattern fails to decode.
struct CandidateList {
    std::vector<Candidate> candidates;
    int p = 0;
    bool empty() const { return candidates.empty(); }
};

// PM(c, l) = sum_i ln(1 + exp(-x_i l_i)) with x_i = (-1)^{c_i};
// the negative log of the word's bitwise-factorized posterior
double path_metric(std::span<const std::uint8_t> word, std::span<const double> llr);

// correlation <x, l> with x_i = (-1)^{c_i}
double correlation(std::span<const std::uint8_t> word, std::span<const double> llr);

// indices of the p smallest |l_i|, ties broken toward the lower index
std::vector<int> least_reliable_positions(std::span<const double> llr, int p);

// l_i >= 0 -> bit 0
HardWord hard_decision(std::span<const double> llr);

// Hard-decide l, bounded-distance decode all 2^p flip patterns on the least
// reliable positions, deduplicate, and attach path metrics.
CandidateList chase2_list(const CodeSpec& spec, std::span<const double> llr, int p);

// candidate list built directly from given codewords (dedup + metrics)
CandidateList list_from_codewords(const std::vector<HardWord>& words, std::span<const double> llr);

} // namespace fec

#endif
