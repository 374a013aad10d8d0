#pragma once

#include <array>

namespace docaug {

// Orthonormal 8x8 DCT-II pair in the block-codec convention: a constant
// block of value v transforms to DC = 8*v with zero AC terms, and
// inverse(forward(x)) == x up to floating-point rounding.
void dct8x8_forward(const double in[64], double out[64]);
void dct8x8_inverse(const double in[64], double out[64]);

// Standard base quantization tables (luminance / chrominance).
extern const std::array<int, 64> kLumaQuantBase;
extern const std::array<int, 64> kChromaQuantBase;

// Conventional quality scaling: scale = 5000/q for q < 50 else 200 - 2q
// (integer arithmetic), entry -> clamp((entry*scale + 50) / 100, 1, 255).
std::array<int, 64> scale_quant_table(const std::array<int, 64>& base, int quality);

} // namespace docaug
