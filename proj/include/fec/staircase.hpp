#ifndef FEC_STAIRCASE_HPP
#define FEC_STAIRCASE_HPP

#include <deque>

#include "fec/grid.hpp"
#include "fec/product.hpp"

namespace fec {

// One n/2 x n/2 staircase block on the decoder side. Block i is covered by
// two sets of constituent codes: the rows of [B_{i-1}^T, B_i], where it is
// the newer half, and the rows of [B_i^T, B_{i+1}], where it is the older
// half. extrinsic_new / extrinsic_old store the extrinsic from each set;
// both are zero when the block enters the window.
struct StairBlock {
    long index = 0;
    Grid<double> channel;
    Grid<double> extrinsic_new;
    Grid<double> extrinsic_old;
};

// LLR magnitude standing in for the known bits of block 0
inline constexpr double kKnownBitLlr = 1e9;

class StaircaseEncoder {
public:
    explicit StaircaseEncoder(const CodeSpec& spec); // requires k - n/2 >= 1
    int block_dim() const { return half_; }
    int info_cols() const { return spec_->k() - half_; }
    double rate() const; // 2k/n - 1

    // info: (n/2) x (k - n/2); returns the next block, every row of
    // [prev^T, block] a constituent codeword
    Grid<std::uint8_t> encode_next(const Grid<std::uint8_t>& info);
    void reset();

private:
    const CodeSpec* spec_;
    int half_;
    Grid<std::uint8_t> prev_; // starts all-zero (the known block)
};

struct StairDecodeParams {
    DecodeRule rule = DecodeRule::proposed;
    int p = 5;
    double gamma = 0x1p-17;
    double alpha = 0.4; // pyndiah_like
    double beta = 3.6;
};

struct DecodeWindow {
    std::deque<StairBlock> blocks; // oldest first, consecutive indices
    int w = 0;
    bool full() const { return static_cast<int>(blocks.size()) == w; }
};

struct WindowDecision {
    Grid<std::uint8_t> bits;           // departing block
    Grid<std::uint8_t> ml_words;       // (n/2) x n codewords chosen on the oldest interface
    std::vector<std::uint8_t> fallback; // rows decided from input signs (empty list)
};

// fresh decoder-side block with zeroed extrinsic
StairBlock make_decoder_block(const CodeSpec& spec, long index, Grid<double> channel);

// block 0: channel clamped to +kKnownBitLlr (all bits known zero)
StairBlock known_block(const CodeSpec& spec);

// interface processing order within one window position, newest pair first:
// (w-2, w-1), (w-3, w-2), ..., (0, 1)
std::vector<std::pair<int, int>> window_interface_order(int w);

// Decode the w-1 interfaces of a full window, each constituent word reading
// channel + the extrinsic stored by the other interface covering its bits,
// and replacing this interface's stored extrinsic. Returns the decision for
// the departing (oldest) block, taken from the oldest interface's lists.
WindowDecision decode_window(DecodeWindow& win, const CodeSpec& spec, const StairDecodeParams& params);

// Drop the oldest block, append the next one; surviving extrinsic untouched.
void slide(DecodeWindow& win, StairBlock next);

} // namespace fec

#endif
