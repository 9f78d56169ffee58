#include "fec/staircase.hpp"

#include <stdexcept>

namespace fec {

StaircaseEncoder::StaircaseEncoder(const CodeSpec& spec)
    : spec_(&spec), half_(spec.n() / 2), prev_(spec.n() / 2, spec.n() / 2, 0) {
    if (spec.k() - half_ < 1)
        throw std::invalid_argument("staircase: constituent code too weak (k <= n/2)");
}

double StaircaseEncoder::rate() const {
    return static_cast<double>(info_cols()) / half_;
}

Grid<std::uint8_t> StaircaseEncoder::encode_next(const Grid<std::uint8_t>& info) {
    const int h = half_, k = spec_->k();
    if (info.rows() != h || info.cols() != k - h)
        throw std::invalid_argument("staircase: info block must be (n/2) x (k - n/2)");

    Grid<std::uint8_t> block(h, h, 0);
    HardWord msg(k);
    for (int r = 0; r < h; ++r) {
        for (int i = 0; i < h; ++i) msg[i] = prev_(i, r); // prev^T row r
        for (int i = 0; i < k - h; ++i) msg[h + i] = info(r, i);
        auto cw = spec_->encode(msg);
        for (int c = 0; c < h; ++c) block(r, c) = cw[h + c];
    }
    prev_ = block;
    return block;
}

void StaircaseEncoder::reset() { prev_ = Grid<std::uint8_t>(half_, half_, 0); }

StairBlock make_decoder_block(const CodeSpec& spec, long index, Grid<double> channel) {
    const int h = spec.n() / 2;
    if (channel.rows() != h || channel.cols() != h)
        throw std::invalid_argument("staircase: block size mismatch");
    StairBlock b;
    b.index = index;
    b.channel = std::move(channel);
    b.extrinsic_new = Grid<double>(h, h, 0.0);
    b.extrinsic_old = Grid<double>(h, h, 0.0);
    return b;
}

StairBlock known_block(const CodeSpec& spec) {
    const int h = spec.n() / 2;
    return make_decoder_block(spec, 0, Grid<double>(h, h, kKnownBitLlr));
}

std::vector<std::pair<int, int>> window_interface_order(int w) {
    if (w < 2) throw std::invalid_argument("staircase: window must span at least 2 blocks");
    std::vector<std::pair<int, int>> order;
    for (int a = w - 2; a >= 0; --a) order.emplace_back(a, a + 1);
    return order;
}

namespace {

std::vector<double> word_extrinsic(const CandidateList& list, const LlrWord& l,
                                   const StairDecodeParams& params) {
    if (params.rule == DecodeRule::proposed)
        return proposed_soft_output(list, l, params.gamma).extrinsic;

    if (list.empty()) return std::vector<double>(l.size(), 0.0);
    auto soft = pyndiah_like_raw(list, l);
    std::vector<double> e(l.size());
    for (std::size_t i = 0; i < l.size(); ++i)
        e[i] = soft.saturated[i] ? params.alpha * params.beta * soft.extrinsic[i] // agreed sign
                                 : params.alpha * soft.extrinsic[i];
    return e;
}

} // namespace

WindowDecision decode_window(DecodeWindow& win, const CodeSpec& spec, const StairDecodeParams& params) {
    if (!win.full()) throw std::invalid_argument("staircase: window not full");
    if (params.rule == DecodeRule::pyndiah)
        throw std::invalid_argument("staircase: classic Pyndiah normalization needs whole product words");
    const int h = spec.n() / 2, n = spec.n();

    WindowDecision result;
    result.bits = Grid<std::uint8_t>(h, h, 0);
    result.ml_words = Grid<std::uint8_t>(h, n, 0);
    result.fallback.assign(h, 0);

    LlrWord l(n);
    for (auto [a, b] : window_interface_order(win.w)) {
        StairBlock& older = win.blocks[a];
        StairBlock& newer = win.blocks[b];
        const bool decide = a == 0;

        for (int r = 0; r < h; ++r) {
            // word = [older^T row r, newer row r]; a-priori comes from the
            // other interface covering each half
            for (int i = 0; i < h; ++i) l[i] = older.channel(i, r) + older.extrinsic_new(i, r);
            for (int i = 0; i < h; ++i) l[h + i] = newer.channel(r, i) + newer.extrinsic_old(r, i);

            auto list = chase2_list(spec, l, params.p);
            auto e = word_extrinsic(list, l, params);
            for (int i = 0; i < h; ++i) older.extrinsic_old(i, r) = e[i];
            for (int i = 0; i < h; ++i) newer.extrinsic_new(r, i) = e[h + i];

            if (decide) {
                HardWord bits;
                if (list.empty()) {
                    bits = hard_decision(l);
                    result.fallback[r] = 1;
                } else {
                    const Candidate* best = &list.candidates.front();
                    for (const auto& c : list.candidates)
                        if (c.path_metric < best->path_metric) best = &c;
                    bits = best->word;
                }
                for (int i = 0; i < n; ++i) result.ml_words(r, i) = bits[i];
                for (int i = 0; i < h; ++i) result.bits(i, r) = bits[i]; // older^T row r
            }
        }
    }
    return result;
}

void slide(DecodeWindow& win, StairBlock next) {
    if (!win.full()) throw std::invalid_argument("staircase: window not full");
    if (next.index != win.blocks.back().index + 1)
        throw std::invalid_argument("staircase: blocks must be consecutive");
    win.blocks.pop_front();
    win.blocks.push_back(std::move(next));
}

} // namespace fec
