#ifndef FEC_GF_HPP
#define FEC_GF_HPP

#include <cstdint>
#include <vector>

namespace fec {

// Log/antilog tables for GF(2^m), 3 <= m <= 8. Addition is bitwise XOR.
// Immutable after construction; safe for concurrent reads.
class FieldTable {
public:
    // Builds the tables by iterating powers of alpha = x modulo the defining
    // polynomial. Throws std::invalid_argument if the polynomial does not have
    // degree m or is not primitive (a power of alpha repeats early).
    static FieldTable build(int m, std::uint32_t primitive_poly);

    // Fixed default polynomials: m=3: x^3+x+1, m=4: x^4+x+1, m=5: x^5+x^2+1,
    // m=6: x^6+x+1, m=7: x^7+x^3+1, m=8: x^8+x^4+x^3+x^2+1.
    static std::uint32_t default_primitive_poly(int m);

    int m() const { return m_; }
    std::uint32_t primitive_poly() const { return poly_; }
    int order() const { return order_; }            // 2^m - 1
    int num_elements() const { return order_ + 1; } // 2^m

    // alpha^e for any integer e (reduced mod 2^m - 1)
    std::uint16_t antilog(long long e) const {
        long long r = e % order_;
        if (r < 0) r += order_;
        return antilog_[r];
    }

    // discrete log of a nonzero element
    int log(std::uint16_t a) const;

    std::uint16_t mul(std::uint16_t a, std::uint16_t b) const {
        if (a == 0 || b == 0) return 0;
        int s = log_[a] + log_[b];
        if (s >= order_) s -= order_;
        return antilog_[s];
    }

    std::uint16_t inv(std::uint16_t a) const; // throws on a == 0

    std::uint16_t pow(std::uint16_t a, long long e) const;

private:
    FieldTable() = default;
    int m_ = 0;
    int order_ = 0;
    std::uint32_t poly_ = 0;
    std::vector<std::uint16_t> antilog_; // size 2^m - 1
    std::vector<int> log_;               // size 2^m, log_[0] unused
};

} // namespace fec

#endif
