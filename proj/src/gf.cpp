#include "fec/gf.hpp"

#include <stdexcept>

namespace fec {

std::uint32_t FieldTable::default_primitive_poly(int m) {
    switch (m) {
        case 3: return 0x0B;  // x^3 + x + 1
        case 4: return 0x13;  // x^4 + x + 1
        case 5: return 0x25;  // x^5 + x^2 + 1
        case 6: return 0x43;  // x^6 + x + 1
        case 7: return 0x89;  // x^7 + x^3 + 1
        case 8: return 0x11D; // x^8 + x^4 + x^3 + x^2 + 1
        default: throw std::invalid_argument("gf: unsupported extension degree");
    }
}

FieldTable FieldTable::build(int m, std::uint32_t primitive_poly) {
    if (m < 3 || m > 8) throw std::invalid_argument("gf: extension degree must be in [3, 8]");
    const std::uint32_t top = 1u << m;
    if ((primitive_poly & top) == 0 || primitive_poly >= (top << 1))
        throw std::invalid_argument("gf: defining polynomial must have degree m");

    FieldTable f;
    f.m_ = m;
    f.order_ = static_cast<int>(top) - 1;
    f.poly_ = primitive_poly;
    f.antilog_.assign(f.order_, 0);
    f.log_.assign(top, -1);

    std::uint32_t x = 1;
    for (int e = 0; e < f.order_; ++e) {
        if (f.log_[x] != -1) // cycle closed before covering all nonzero elements
            throw std::invalid_argument("gf: polynomial is not primitive");
        f.antilog_[e] = static_cast<std::uint16_t>(x);
        f.log_[x] = e;
        x <<= 1;
        if (x & top) x ^= primitive_poly;
    }
    if (x != 1) throw std::invalid_argument("gf: polynomial is not primitive");
    return f;
}

int FieldTable::log(std::uint16_t a) const {
    if (a == 0 || a > order_) throw std::invalid_argument("gf: log of zero or out-of-field element");
    return log_[a];
}

std::uint16_t FieldTable::inv(std::uint16_t a) const {
    if (a == 0) throw std::invalid_argument("gf: inverse of zero");
    int e = order_ - log_[a];
    if (e == order_) e = 0;
    return antilog_[e];
}

std::uint16_t FieldTable::pow(std::uint16_t a, long long e) const {
    if (a == 0) {
        if (e < 0) throw std::invalid_argument("gf: negative power of zero");
        return e == 0 ? 1 : 0;
    }
    long long r = (static_cast<long long>(log_[a]) * (e % order_)) % order_;
    if (r < 0) r += order_;
    return antilog_[r];
}

} // namespace fec
