#ifndef FEC_PRODUCT_HPP
#define FEC_PRODUCT_HPP

#include "fec/grid.hpp"
#include "fec/softout.hpp"

namespace fec {

enum class Orientation { rows, cols };
enum class DecodeRule { proposed, pyndiah, pyndiah_like };
enum class PyndiahVariant { classic, like };

// Channel LLRs of one product word plus the per-orientation extrinsic state.
// A rows half-iteration reads extrinsic_cols and writes extrinsic_rows, and
// vice versa; both extrinsic planes start at zero.
struct LlrPlane {
    Grid<double> channel;
    Grid<double> extrinsic_rows;
    Grid<double> extrinsic_cols;

    static LlrPlane from_channel(Grid<double> ch);
};

struct ProductDecodeParams {
    DecodeRule rule = DecodeRule::proposed;
    int p = 5;
    int iterations = 4;
    double gamma = 0x1p-17;
    PyndiahCoefficients coeffs = PyndiahCoefficients::classic();
};

// encode rows with the constituent code, then columns (checks on checks)
Grid<std::uint8_t> encode_product(const CodeSpec& spec, const Grid<std::uint8_t>& info);

// One constituent pass over all rows (or columns). Input of each word is
// channel + extrinsic of the other orientation; the resulting extrinsic
// (app - input) replaces this orientation's plane. When `decisions` is given,
// each word's minimum-path-metric candidate is written there (hard decision
// on the input where the list is empty).
void half_iteration_proposed(LlrPlane& plane, Orientation o, const CodeSpec& spec, int p,
                             double gamma, Grid<std::uint8_t>* decisions = nullptr);

// Chase-Pyndiah pass. classic: extrinsic alpha^(ell)-weighted and normalized
// by the mean |app - input| over the non-saturated positions of the whole
// product word, saturated positions falling back to beta^(ell) times the
// agreed sign, and each word's input is extrinsic + channel scaled by the
// inverse mean |channel|. like: max replaced by log-domain sums, no
// normalizers, input is extrinsic + channel.
void half_iteration_pyndiah(LlrPlane& plane, Orientation o, const CodeSpec& spec, int p,
                            const PyndiahCoefficients& coeffs, int ell, PyndiahVariant variant,
                            Grid<std::uint8_t>* decisions = nullptr);

// Alternating half-iterations, rows first; decisions are taken from the final
// half-iteration's candidate lists.
Grid<std::uint8_t> decode_product(LlrPlane& plane, const CodeSpec& spec,
                                  const ProductDecodeParams& params);

} // namespace fec

#endif
