#include "fec/channel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fec {

ChannelParams ChannelParams::make(double ebn0_db, double rate) {
    if (!(rate > 0.0 && rate <= 1.0)) throw std::invalid_argument("channel: rate must be in (0, 1]");
    ChannelParams p;
    p.ebn0_db = ebn0_db;
    p.rate = rate;
    p.sigma2 = 1.0 / (2.0 * rate * std::pow(10.0, ebn0_db / 10.0));
    return p;
}

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

} // namespace

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b) {
    return splitmix64(splitmix64(splitmix64(master) ^ a) ^ b);
}

int NoiseStream::bit() {
    if (bits_left_ == 0) {
        bit_buf_ = eng_();
        bits_left_ = 64;
    }
    int b = static_cast<int>(bit_buf_ & 1);
    bit_buf_ >>= 1;
    --bits_left_;
    return b;
}

double NoiseStream::gaussian() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u1 = static_cast<double>((eng_() >> 11) + 1) * 0x1p-53; // (0, 1]
    double u2 = static_cast<double>(eng_() >> 11) * 0x1p-53;       // [0, 1)
    double r = std::sqrt(-2.0 * std::log(u1));
    double t = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(t);
    have_spare_ = true;
    return r * std::cos(t);
}

std::vector<double> modulate(std::span<const std::uint8_t> bits) {
    std::vector<double> x(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) x[i] = bits[i] ? -1.0 : 1.0;
    return x;
}

LlrWord transmit(std::span<const double> symbols, const ChannelParams& params, NoiseStream& rng) {
    const double sigma = std::sqrt(params.sigma2);
    const double scale = 2.0 / params.sigma2;
    LlrWord llr(symbols.size());
    for (std::size_t i = 0; i < symbols.size(); ++i)
        llr[i] = scale * (symbols[i] + sigma * rng.gaussian());
    return llr;
}

} // namespace fec
