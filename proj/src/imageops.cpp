#include "docaug/imageops.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace docaug {

Raster to_gray(const Raster& img) {
    if (img.channels == 1) return img;
    if (img.channels != 3)
        throw std::invalid_argument("to_gray: raster must have 1 or 3 channels");
    Raster out(img.width, img.height, 1);
    const std::size_t n = static_cast<std::size_t>(img.width) * img.height;
    for (std::size_t i = 0; i < n; ++i)
        out.data[i] = to_u8(luma(&img.data[i * 3], 3));
    return out;
}

InkMask ink_mask(const Raster& img, int threshold) {
    InkMask mask(img.width, img.height);
    const std::size_t n = static_cast<std::size_t>(img.width) * img.height;
    if (img.channels == 1) {
        for (std::size_t i = 0; i < n; ++i)
            mask.bits[i] = img.data[i] < threshold ? 1 : 0;
    } else {
        for (std::size_t i = 0; i < n; ++i)
            mask.bits[i] = round_half_up(luma(&img.data[i * 3], 3)) < threshold ? 1 : 0;
    }
    return mask;
}

namespace {

// Horizontal pass of the separable square dilation: out(x) = any bit in
// [x-r, x+r], computed from per-row prefix sums.
void dilate_rows(const std::vector<std::uint8_t>& in, std::vector<std::uint8_t>& out,
                 int w, int h, int r, std::vector<int>& prefix) {
    for (int y = 0; y < h; ++y) {
        const std::uint8_t* row = &in[static_cast<std::size_t>(y) * w];
        prefix[0] = 0;
        for (int x = 0; x < w; ++x) prefix[x + 1] = prefix[x] + row[x];
        std::uint8_t* dst = &out[static_cast<std::size_t>(y) * w];
        for (int x = 0; x < w; ++x) {
            const int lo = std::max(0, x - r);
            const int hi = std::min(w - 1, x + r);
            dst[x] = prefix[hi + 1] - prefix[lo] > 0 ? 1 : 0;
        }
    }
}

} // namespace

InkMask dilate(const InkMask& mask, int radius) {
    if (radius < 0) throw std::invalid_argument("dilate: radius must be >= 0");
    if (radius == 0 || mask.bits.empty()) return mask;
    const int w = mask.width, h = mask.height;
    InkMask out(w, h);
    std::vector<std::uint8_t> tmp(mask.bits.size());
    std::vector<int> prefix(std::max(w, h) + 1);

    dilate_rows(mask.bits, tmp, w, h, radius, prefix);
    // Vertical pass over columns of the row-dilated mask.
    std::vector<std::uint8_t> col(h);
    for (int x = 0; x < w; ++x) {
        for (int y = 0; y < h; ++y) col[y] = tmp[static_cast<std::size_t>(y) * w + x];
        prefix[0] = 0;
        for (int y = 0; y < h; ++y) prefix[y + 1] = prefix[y] + col[y];
        for (int y = 0; y < h; ++y) {
            const int lo = std::max(0, y - radius);
            const int hi = std::min(h - 1, y + radius);
            out.bits[static_cast<std::size_t>(y) * w + x] = prefix[hi + 1] - prefix[lo] > 0 ? 1 : 0;
        }
    }
    return out;
}

Raster box_blur(const Raster& img, int radius) {
    if (radius < 0) throw std::invalid_argument("box_blur: radius must be >= 0");
    if (radius == 0 || img.empty()) return img;
    const int w = img.width, h = img.height, ch = img.channels;
    const int side = 2 * radius + 1;

    // Horizontal sums with replicated borders, one plane per channel.
    std::vector<std::int32_t> hsum(img.data.size());
    std::vector<std::int32_t> prefix(w + 1);
    for (int c = 0; c < ch; ++c) {
        for (int y = 0; y < h; ++y) {
            prefix[0] = 0;
            for (int x = 0; x < w; ++x) prefix[x + 1] = prefix[x] + img.at(x, y, c);
            const int first = img.at(0, y, c), last = img.at(w - 1, y, c);
            for (int x = 0; x < w; ++x) {
                const int lo = std::max(0, x - radius);
                const int hi = std::min(w - 1, x + radius);
                int sum = prefix[hi + 1] - prefix[lo];
                sum += (lo - (x - radius)) * first;
                sum += ((x + radius) - hi) * last;
                hsum[img.index(x, y, c)] = sum;
            }
        }
    }

    // Vertical sums over the horizontal sums, then one rounded division.
    Raster out(w, h, ch);
    const std::int64_t denom = static_cast<std::int64_t>(side) * side;
    std::vector<std::int64_t> vprefix(h + 1);
    for (int c = 0; c < ch; ++c) {
        for (int x = 0; x < w; ++x) {
            vprefix[0] = 0;
            for (int y = 0; y < h; ++y)
                vprefix[y + 1] = vprefix[y] + hsum[img.index(x, y, c)];
            const std::int64_t first = hsum[img.index(x, 0, c)];
            const std::int64_t last = hsum[img.index(x, h - 1, c)];
            for (int y = 0; y < h; ++y) {
                const int lo = std::max(0, y - radius);
                const int hi = std::min(h - 1, y + radius);
                std::int64_t total = vprefix[hi + 1] - vprefix[lo];
                total += (lo - (y - radius)) * first;
                total += ((y + radius) - hi) * last;
                // floor(total/denom + 1/2) for non-negative total
                out.at(x, y, c) = clamp_u8(static_cast<int>((2 * total + denom) / (2 * denom)));
            }
        }
    }
    return out;
}

std::pair<double, double> rotate_point(double x, double y, double angle_degrees,
                                       double cx, double cy) {
    const double rad = angle_degrees * std::numbers::pi / 180.0;
    const double c = std::cos(rad), s = std::sin(rad);
    const double dx = x - cx, dy = y - cy;
    return {cx + dx * c - dy * s, cy + dx * s + dy * c};
}

Raster rotate_image(const Raster& img, double angle_degrees,
                    const std::vector<std::uint8_t>& fill) {
    if (!std::isfinite(angle_degrees))
        throw std::invalid_argument("rotate_image: angle must be finite");
    if (fill.size() != 1 && fill.size() != static_cast<std::size_t>(img.channels))
        throw std::invalid_argument("rotate_image: fill must have 1 or `channels` samples");

    const int w = img.width, h = img.height, ch = img.channels;
    std::uint8_t fillpx[3];
    for (int c = 0; c < ch; ++c) fillpx[c] = fill.size() == 1 ? fill[0] : fill[c];

    const double rad = angle_degrees * std::numbers::pi / 180.0;
    const double cosv = std::cos(rad), sinv = std::sin(rad);
    const double cx = (w - 1) / 2.0, cy = (h - 1) / 2.0;

    Raster out(w, h, ch);
    for (int y = 0; y < h; ++y) {
        const double dy = y - cy;
        for (int x = 0; x < w; ++x) {
            const double dx = x - cx;
            // Inverse of the forward map: rotate back by the same angle.
            const double sx = cx + dx * cosv + dy * sinv;
            const double sy = cy - dx * sinv + dy * cosv;
            std::uint8_t* dst = out.pixel(x, y);
            if (sx < 0.0 || sx > w - 1 || sy < 0.0 || sy > h - 1) {
                for (int c = 0; c < ch; ++c) dst[c] = fillpx[c];
                continue;
            }
            const int x0 = static_cast<int>(sx);
            const int y0 = static_cast<int>(sy);
            const double fx = sx - x0, fy = sy - y0;
            const int x1 = std::min(x0 + 1, w - 1);
            const int y1 = std::min(y0 + 1, h - 1);
            const std::uint8_t* p00 = img.pixel(x0, y0);
            const std::uint8_t* p10 = img.pixel(x1, y0);
            const std::uint8_t* p01 = img.pixel(x0, y1);
            const std::uint8_t* p11 = img.pixel(x1, y1);
            for (int c = 0; c < ch; ++c) {
                const double v = (1 - fx) * (1 - fy) * p00[c] + fx * (1 - fy) * p10[c] +
                                 (1 - fx) * fy * p01[c] + fx * fy * p11[c];
                dst[c] = to_u8(v);
            }
        }
    }
    return out;
}

} // namespace docaug
