#include "fec/chase.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "fec/logmath.hpp"

namespace fec {

double path_metric(std::span<const std::uint8_t> word, std::span<const double> llr) {
    if (word.size() != llr.size()) throw std::invalid_argument("chase: length mismatch");
    double pm = 0.0;
    for (std::size_t i = 0; i < word.size(); ++i)
        pm += softplus(word[i] ? llr[i] : -llr[i]);
    return pm;
}

double correlation(std::span<const std::uint8_t> word, std::span<const double> llr) {
    if (word.size() != llr.size()) throw std::invalid_argument("chase: length mismatch");
    double c = 0.0;
    for (std::size_t i = 0; i < word.size(); ++i)
        c += word[i] ? -llr[i] : llr[i];
    return c;
}

std::vector<int> least_reliable_positions(std::span<const double> llr, int p) {
    const int n = static_cast<int>(llr.size());
    if (p < 0 || p > n) throw std::invalid_argument("chase: p out of range");
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::partial_sort(idx.begin(), idx.begin() + p, idx.end(), [&](int a, int b) {
        double ma = std::fabs(llr[a]), mb = std::fabs(llr[b]);
        return ma < mb || (ma == mb && a < b);
    });
    idx.resize(p);
    return idx;
}

HardWord hard_decision(std::span<const double> llr) {
    HardWord w(llr.size());
    for (std::size_t i = 0; i < llr.size(); ++i) w[i] = llr[i] < 0.0 ? 1 : 0;
    return w;
}

namespace {

bool contains(const std::vector<Candidate>& cands, const HardWord& w) {
    for (const auto& c : cands)
        if (c.word == w) return true;
    return false;
}

} // namespace

CandidateList chase2_list(const CodeSpec& spec, std::span<const double> llr, int p) {
    if (static_cast<int>(llr.size()) != spec.n()) throw std::invalid_argument("chase: length mismatch");
    if (p > 20) throw std::invalid_argument("chase: p too large");

    // per-bit metric terms, summed in index order so stored metrics are
    // bit-identical with path_metric()
    const int n = spec.n();
    std::vector<double> term0(n), term1(n);
    for (int i = 0; i < n; ++i) {
        term0[i] = softplus(-llr[i]);
        term1[i] = softplus(llr[i]);
    }
    auto metric = [&](const HardWord& w) {
        double pm = 0.0;
        for (int i = 0; i < n; ++i) pm += w[i] ? term1[i] : term0[i];
        return pm;
    };

    const HardWord hard = hard_decision(llr);
    const std::vector<int> flips = least_reliable_positions(llr, p);

    CandidateList list;
    list.p = p;
    HardWord trial(n);
    for (std::uint32_t mask = 0; mask < (1u << p); ++mask) {
        trial = hard;
        for (int b = 0; b < p; ++b)
            if ((mask >> b) & 1) trial[flips[b]] ^= 1;
        auto decoded = spec.decode_bounded(trial);
        if (!decoded) continue;
        if (!contains(list.candidates, *decoded))
            list.candidates.push_back({std::move(*decoded), 0.0});
    }
    for (auto& c : list.candidates) c.path_metric = metric(c.word);
    return list;
}

CandidateList list_from_codewords(const std::vector<HardWord>& words, std::span<const double> llr) {
    CandidateList list;
    for (const auto& w : words)
        if (!contains(list.candidates, w))
            list.candidates.push_back({w, path_metric(w, llr)});
    int p = 0;
    while ((1u << p) < list.candidates.size()) ++p;
    list.p = p;
    return list;
}

} // namespace fec
