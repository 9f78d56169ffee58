#include "fec/ebch.hpp"

#include <numeric>
#include <stdexcept>

namespace fec {

namespace {

// minimal polynomial of alpha^s: product of (x + alpha^e) over the conjugacy
// class {s * 2^j mod (2^m - 1)}; the result has GF(2) coefficients
std::uint64_t minimal_poly(const FieldTable& f, int s) {
    std::vector<int> cls;
    int e = s;
    do {
        cls.push_back(e);
        e = (e * 2) % f.order();
    } while (e != s);

    std::vector<std::uint16_t> coeff{1}; // coeff[i] = coefficient of x^i, in GF(2^m)
    for (int root_exp : cls) {
        std::uint16_t root = f.antilog(root_exp);
        std::vector<std::uint16_t> next(coeff.size() + 1, 0);
        for (std::size_t i = 0; i < coeff.size(); ++i) {
            next[i + 1] ^= coeff[i];
            next[i] ^= f.mul(coeff[i], root);
        }
        coeff = std::move(next);
    }

    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < coeff.size(); ++i) {
        if (coeff[i] > 1) throw std::logic_error("ebch: minimal polynomial not over GF(2)");
        if (coeff[i]) mask |= 1ull << i;
    }
    return mask;
}

std::uint64_t gf2_poly_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    for (int i = 0; b >> i; ++i)
        if ((b >> i) & 1) r ^= a << i;
    return r;
}

int poly_degree(std::uint64_t p) {
    int d = -1;
    while (p) { ++d; p >>= 1; }
    return d;
}

} // namespace

CodeSpec CodeSpec::make(int m, int t) {
    if (t != 1 && t != 2) throw std::invalid_argument("ebch: t must be 1 or 2");
    CodeSpec spec(FieldTable::build(m, FieldTable::default_primitive_poly(m)));
    const FieldTable& f = spec.field_;

    std::uint64_t g = minimal_poly(f, 1);
    if (t == 2) {
        std::uint64_t m3 = minimal_poly(f, 3);
        if (m3 == g) throw std::invalid_argument("ebch: unsupported (m, t) combination");
        g = gf2_poly_mul(g, m3); // distinct conjugacy classes, so lcm = product
    }

    spec.t_ = t;
    spec.n_ = f.num_elements();
    spec.k_ = spec.n_ - 1 - poly_degree(g);
    spec.gen_ = g;
    if (spec.k_ < 1) throw std::invalid_argument("ebch: unsupported (m, t) combination");

    // lookup for roots of y^2 + y = d; each solvable d has solutions {y, y+1}
    spec.quad_solution_.assign(f.num_elements(), -1);
    for (int y = 0; y < f.num_elements(); ++y) {
        std::uint16_t d = f.mul(static_cast<std::uint16_t>(y), static_cast<std::uint16_t>(y)) ^ y;
        if (spec.quad_solution_[d] < 0) spec.quad_solution_[d] = static_cast<std::int16_t>(y);
    }
    return spec;
}

HardWord CodeSpec::encode(std::span<const std::uint8_t> message) const {
    if (static_cast<int>(message.size()) != k_)
        throw std::invalid_argument("ebch: message length mismatch");

    const int r = n_ - 1 - k_;
    HardWord cw(n_, 0);

    // LFSR division of x^r * m(x) by g, message bits high-degree first
    std::uint64_t reg = 0;
    const std::uint64_t low_mask = (1ull << r) - 1;
    const std::uint64_t g_low = gen_ & low_mask;
    for (int i = 0; i < k_; ++i) {
        cw[i] = message[i] & 1;
        std::uint64_t fb = ((reg >> (r - 1)) & 1) ^ cw[i];
        reg = (reg << 1) & low_mask;
        if (fb) reg ^= g_low;
    }
    for (int i = 0; i < r; ++i)
        cw[k_ + i] = static_cast<std::uint8_t>((reg >> (r - 1 - i)) & 1);

    std::uint8_t parity = 0;
    for (int i = 0; i < n_ - 1; ++i) parity ^= cw[i];
    cw[n_ - 1] = parity;
    return cw;
}

std::uint16_t CodeSpec::syndrome(std::span<const std::uint8_t> word, int power) const {
    const int inner = n_ - 1;
    std::uint16_t s = 0;
    for (int j = 0; j < inner; ++j)
        if (word[j]) s ^= field_.antilog(static_cast<long long>(power) * (inner - 1 - j));
    return s;
}

bool CodeSpec::is_codeword(std::span<const std::uint8_t> word) const {
    if (static_cast<int>(word.size()) != n_) return false;
    std::uint8_t parity = 0;
    for (auto b : word) parity ^= b;
    if (parity) return false;
    if (syndrome(word, 1) != 0) return false;
    if (t_ == 2 && syndrome(word, 3) != 0) return false;
    return true;
}

std::optional<HardWord> CodeSpec::decode_bounded(std::span<const std::uint8_t> word) const {
    if (static_cast<int>(word.size()) != n_)
        throw std::invalid_argument("ebch: word length mismatch");

    const int inner = n_ - 1;
    HardWord out(word.begin(), word.end());

    std::uint16_t s1 = syndrome(word, 1);
    if (s1 == 0 && t_ == 1) {
        // no inner error
    } else if (t_ == 1) {
        out[inner - 1 - field_.log(s1)] ^= 1;
    } else {
        std::uint16_t s3 = syndrome(word, 3);
        if (s1 == 0 && s3 == 0) {
            // no inner error
        } else if (s1 != 0 && s3 == field_.pow(s1, 3)) {
            out[inner - 1 - field_.log(s1)] ^= 1;
        } else if (s1 != 0) {
            // two errors: locations X1, X2 satisfy X1 + X2 = S1,
            // X1 * X2 = (S3 + S1^3) / S1; solve x^2 + S1 x + prod = 0
            std::uint16_t prod = field_.mul(s3 ^ field_.pow(s1, 3), field_.inv(s1));
            std::uint16_t d = field_.mul(prod, field_.inv(field_.mul(s1, s1)));
            std::int16_t y = quad_solution_[d];
            if (y < 0) return std::nullopt;
            std::uint16_t x1 = field_.mul(s1, static_cast<std::uint16_t>(y));
            std::uint16_t x2 = x1 ^ s1;
            if (x1 == 0 || x2 == 0) return std::nullopt;
            out[inner - 1 - field_.log(x1)] ^= 1;
            out[inner - 1 - field_.log(x2)] ^= 1;
        } else {
            return std::nullopt; // S1 = 0, S3 != 0: beyond radius
        }
    }

    std::uint8_t parity = 0;
    for (int i = 0; i < inner; ++i) parity ^= out[i];
    out[inner] = parity;
    return out;
}

std::vector<HardWord> enumerate_codebook(const CodeSpec& spec) {
    if (spec.k() > 20) throw std::invalid_argument("ebch: codebook too large to enumerate");
    std::vector<HardWord> book;
    book.reserve(1u << spec.k());
    HardWord msg(spec.k(), 0);
    for (std::uint32_t v = 0; v < (1u << spec.k()); ++v) {
        for (int i = 0; i < spec.k(); ++i) msg[i] = (v >> (spec.k() - 1 - i)) & 1;
        book.push_back(spec.encode(msg));
    }
    return book;
}

} // namespace fec
