#include "docaug/dct.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace docaug {

namespace {

// basis[u][x] = 0.5 * c(u) * cos((2x+1) * u * pi / 16), c(0) = 1/sqrt(2).
// Rows are orthonormal, so forward is B f B^T and inverse is B^T F B.
struct Basis {
    double m[8][8];
    Basis() {
        for (int u = 0; u < 8; ++u) {
            const double cu = u == 0 ? 1.0 / std::sqrt(2.0) : 1.0;
            for (int x = 0; x < 8; ++x)
                m[u][x] = 0.5 * cu * std::cos((2 * x + 1) * u * std::numbers::pi / 16.0);
        }
    }
};
const Basis kBasis;

} // namespace

void dct8x8_forward(const double in[64], double out[64]) {
    double tmp[64];
    // Transform along x: tmp[y][u] = sum_x B[u][x] * in[y][x]
    for (int y = 0; y < 8; ++y)
        for (int u = 0; u < 8; ++u) {
            double acc = 0;
            for (int x = 0; x < 8; ++x) acc += kBasis.m[u][x] * in[y * 8 + x];
            tmp[y * 8 + u] = acc;
        }
    // Transform along y: out[v][u] = sum_y B[v][y] * tmp[y][u]
    for (int v = 0; v < 8; ++v)
        for (int u = 0; u < 8; ++u) {
            double acc = 0;
            for (int y = 0; y < 8; ++y) acc += kBasis.m[v][y] * tmp[y * 8 + u];
            out[v * 8 + u] = acc;
        }
}

void dct8x8_inverse(const double in[64], double out[64]) {
    double tmp[64];
    // tmp[v][x] = sum_u B[u][x] * in[v][u]
    for (int v = 0; v < 8; ++v)
        for (int x = 0; x < 8; ++x) {
            double acc = 0;
            for (int u = 0; u < 8; ++u) acc += kBasis.m[u][x] * in[v * 8 + u];
            tmp[v * 8 + x] = acc;
        }
    // out[y][x] = sum_v B[v][y] * tmp[v][x]
    for (int y = 0; y < 8; ++y)
        for (int x = 0; x < 8; ++x) {
            double acc = 0;
            for (int v = 0; v < 8; ++v) acc += kBasis.m[v][y] * tmp[v * 8 + x];
            out[y * 8 + x] = acc;
        }
}

const std::array<int, 64> kLumaQuantBase = {
    16, 11, 10, 16, 24,  40,  51,  61,
    12, 12, 14, 19, 26,  58,  60,  55,
    14, 13, 16, 24, 40,  57,  69,  56,
    14, 17, 22, 29, 51,  87,  80,  62,
    18, 22, 37, 56, 68,  109, 103, 77,
    24, 35, 55, 64, 81,  104, 113, 92,
    49, 64, 78, 87, 103, 121, 120, 101,
    72, 92, 95, 98, 112, 100, 103, 99,
};

const std::array<int, 64> kChromaQuantBase = {
    17, 18, 24, 47, 99, 99, 99, 99,
    18, 21, 26, 66, 99, 99, 99, 99,
    24, 26, 56, 99, 99, 99, 99, 99,
    47, 66, 99, 99, 99, 99, 99, 99,
    99, 99, 99, 99, 99, 99, 99, 99,
    99, 99, 99, 99, 99, 99, 99, 99,
    99, 99, 99, 99, 99, 99, 99, 99,
    99, 99, 99, 99, 99, 99, 99, 99,
};

std::array<int, 64> scale_quant_table(const std::array<int, 64>& base, int quality) {
    if (quality < 1 || quality > 100)
        throw std::invalid_argument("quality must be in [1, 100]");
    const int scale = quality < 50 ? 5000 / quality : 200 - 2 * quality;
    std::array<int, 64> out;
    for (int i = 0; i < 64; ++i)
        out[i] = std::clamp((base[i] * scale + 50) / 100, 1, 255);
    return out;
}

} // namespace docaug
