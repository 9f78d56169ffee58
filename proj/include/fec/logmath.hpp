#ifndef FEC_LOGMATH_HPP
#define FEC_LOGMATH_HPP

#include <cmath>
#include <limits>

namespace fec {

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// ln(1 + e^z), stable for any z
inline double softplus(double z) {
    if (z > 0.0) return z + std::log1p(std::exp(-z));
    return std::log1p(std::exp(z));
}

// ln sigma(z) = -ln(1 + e^-z)
inline double ln_sigmoid(double z) { return -softplus(-z); }

// ln(e^a + e^b); identity element is -inf
inline double maxstar(double a, double b) {
    if (a == kNegInf) return b;
    if (b == kNegInf) return a;
    double hi = a > b ? a : b;
    return hi + std::log1p(std::exp(-std::fabs(a - b)));
}

} // namespace fec

#endif
