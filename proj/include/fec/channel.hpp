#ifndef FEC_CHANNEL_HPP
#define FEC_CHANNEL_HPP

#include <cstdint>
#include <random>
#include <span>

#include "fec/chase.hpp"
#include "fec/grid.hpp"

namespace fec {

// BPSK over AWGN at a given SNR per information bit.
struct ChannelParams {
    double ebn0_db = 0.0;
    double rate = 1.0;
    double sigma2 = 0.0; // noise variance, 1 / (2 R 10^(EbN0/10))

    static ChannelParams make(double ebn0_db, double rate);
};

// seed for substream (a, b) of a master seed; splitmix64 finalizer chain
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b);

// Deterministic Gaussian source: mt19937_64 driving an explicit Box-Muller
// transform (u1 in (0,1], z = sqrt(-2 ln u1) * {cos, sin}(2 pi u2), pair
// cached). Identical seeds give identical sequences on any platform.
class NoiseStream {
public:
    explicit NoiseStream(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t bits64() { return eng_(); }
    int bit(); // fair bit, consuming one engine word per 64 bits

    double uniform() { // [0, 1)
        return static_cast<double>(eng_() >> 11) * 0x1p-53;
    }

    double gaussian();

private:
    std::mt19937_64 eng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
    std::uint64_t bit_buf_ = 0;
    int bits_left_ = 0;
};

// x = 1 - 2c
std::vector<double> modulate(std::span<const std::uint8_t> bits);

// y = x + noise, returned as channel LLRs (2 / sigma^2) * y
LlrWord transmit(std::span<const double> symbols, const ChannelParams& params, NoiseStream& rng);

} // namespace fec

#endif
