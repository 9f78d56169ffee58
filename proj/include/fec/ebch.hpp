#ifndef FEC_EBCH_HPP
#define FEC_EBCH_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fec/gf.hpp"

namespace fec {

using HardWord = std::vector<std::uint8_t>;

// Extended BCH constituent code: inner BCH of length 2^m - 1 correcting t
// errors, plus one overall even-parity bit. Systematic layout:
//   bits [0, k)        message
//   bits [k, n-1)      inner parity (remainder of x^r * m(x) mod g)
//   bit  n-1           overall parity (even total weight)
// Bit j of the inner word is the coefficient of x^(n-2-j).
class CodeSpec {
public:
    // t = 1: g = minimal polynomial of alpha; t = 2: g = m_1(x) * m_3(x).
    static CodeSpec make(int m, int t);

    int n() const { return n_; }
    int k() const { return k_; }
    int t() const { return t_; }
    int m() const { return field_.m(); }
    std::uint64_t generator_poly() const { return gen_; }
    const FieldTable& field() const { return field_; }

    HardWord encode(std::span<const std::uint8_t> message) const;

    // Bounded-distance decoding: corrects up to t errors in the inner word by
    // syndrome methods, then recomputes the overall parity bit. Returns the
    // corrected codeword, or nullopt when no codeword lies within the radius.
    std::optional<HardWord> decode_bounded(std::span<const std::uint8_t> word) const;

    // zero inner syndromes and even overall parity
    bool is_codeword(std::span<const std::uint8_t> word) const;

private:
    CodeSpec(FieldTable f) : field_(std::move(f)) {}

    std::uint16_t syndrome(std::span<const std::uint8_t> word, int power) const;

    FieldTable field_;
    int n_ = 0, k_ = 0, t_ = 0;
    std::uint64_t gen_ = 0;                   // bit i = coefficient of x^i
    std::vector<std::int16_t> quad_solution_; // y with y^2 + y = d, or -1
};

// All 2^k codewords, message order. Throws if k > 20.
std::vector<HardWord> enumerate_codebook(const CodeSpec& spec);

} // namespace fec

#endif
