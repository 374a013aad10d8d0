#include "docaug/effects.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "docaug/dct.hpp"
#include "docaug/imageops.hpp"

namespace docaug {

const char* text_effect_name(TextEffectKind kind) {
    switch (kind) {
    case TextEffectKind::InkBleed: return "InkBleed";
    case TextEffectKind::Letterpress: return "Letterpress";
    case TextEffectKind::LowInkRandomLines: return "LowInkRandomLines";
    case TextEffectKind::LowInkPeriodicLines: return "LowInkPeriodicLines";
    }
    return "?";
}

const char* paper_effect_name(PaperEffectKind kind) {
    switch (kind) {
    case PaperEffectKind::JpegArtifact: return "JpegArtifact";
    case PaperEffectKind::DirtyScreen: return "DirtyScreen";
    }
    return "?";
}

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

void check_range(const Range& r, double lo, double hi, const char* name) {
    require(r.lo <= r.hi && r.lo >= lo && r.hi <= hi, name);
}

void check_range(const IntRange& r, int lo, int hi, const char* name) {
    require(r.lo <= r.hi && r.lo >= lo && r.hi <= hi, name);
}

} // namespace

void EffectParams::validate() const {
    require(ink_bleed.dilation_radius >= 0, "ink_bleed.dilation_radius must be >= 0");
    require(ink_bleed.bleed_probability >= 0 && ink_bleed.bleed_probability <= 1,
            "ink_bleed.bleed_probability must be in [0,1]");
    check_range(ink_bleed.darken_alpha, 0, 1, "ink_bleed.darken_alpha_range must be a nonempty subrange of [0,1]");
    require(ink_bleed.blur_radius >= 0, "ink_bleed.blur_radius must be >= 0");
    require(letterpress.blob_density >= 0, "letterpress.blob_density must be >= 0");
    check_range(letterpress.blob_sigma, 0, 1e9, "letterpress.blob_sigma_range must be nonempty and nonnegative");
    require(letterpress.blob_sigma.lo > 0, "letterpress.blob_sigma_range must be positive");
    check_range(letterpress.lighten, 0, 1, "letterpress.lighten_range must be a nonempty subrange of [0,1]");
    check_range(low_ink.line_count, 0, 1 << 30, "low_ink.line_count_range must be nonempty and nonnegative");
    check_range(low_ink.period, 1, 1 << 30, "low_ink.period_range must be nonempty and >= 1");
    check_range(low_ink.lighten_add, 0, 255, "low_ink.lighten_add_range must be a nonempty subrange of [0,255]");
    check_range(jpeg.quality, 1, 100, "jpeg.quality_range must be a nonempty subrange of [1,100]");
    check_range(dirty_screen.cell_size, 1, 1 << 30, "dirty_screen.cell_size_range must be nonempty and >= 1");
    require(dirty_screen.dot_probability >= 0 && dirty_screen.dot_probability <= 1,
            "dirty_screen.dot_probability must be in [0,1]");
    check_range(dirty_screen.darken, 0, 255, "dirty_screen.darken_range must be a nonempty subrange of [0,255]");
}

Raster apply_ink_bleed(const Raster& img, const InkBleedParams& params, RngStream& rng) {
    if (img.empty()) throw std::invalid_argument("apply_ink_bleed: empty raster");
    const InkMask mask = ink_mask(img);
    if (mask.count() == 0) return img;
    const InkMask region = dilate(mask, params.dilation_radius);

    Raster out = img;
    const int w = img.width, h = img.height, ch = img.channels;
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            if (!region.at(x, y) || mask.at(x, y)) continue;
            if (rng.next_unit() >= params.bleed_probability) continue;
            const double alpha = rng.uniform(params.darken_alpha.lo, params.darken_alpha.hi);
            std::uint8_t* px = out.pixel(x, y);
            for (int c = 0; c < ch; ++c) px[c] = to_u8(px[c] * (1.0 - alpha));
        }
    }

    if (params.blur_radius > 0) {
        // Softening pass, restricted to the bleed region and only ever
        // darkening so ink polarity is preserved.
        const Raster blurred = box_blur(out, params.blur_radius);
        for (int y = 0; y < h; ++y)
            for (int x = 0; x < w; ++x) {
                if (!region.at(x, y)) continue;
                std::uint8_t* px = out.pixel(x, y);
                const std::uint8_t* bp = blurred.pixel(x, y);
                for (int c = 0; c < ch; ++c) px[c] = std::min(px[c], bp[c]);
            }
    }
    return out;
}

Raster apply_letterpress(const Raster& img, const LetterpressParams& params, RngStream& rng) {
    if (img.empty()) throw std::invalid_argument("apply_letterpress: empty raster");
    const InkMask mask = ink_mask(img);
    const int w = img.width, h = img.height, ch = img.channels;

    std::vector<std::pair<int, int>> ink;
    ink.reserve(mask.count());
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            if (mask.at(x, y)) ink.emplace_back(x, y);
    if (ink.empty()) return img;

    const int blobs = round_half_up(params.blob_density * static_cast<double>(ink.size()) / 1e4);
    if (blobs <= 0) return img;

    // Accumulated lighten weight per pixel, capped at 1 on application.
    std::vector<double> weight(static_cast<std::size_t>(w) * h, 0.0);
    for (int b = 0; b < blobs; ++b) {
        const auto [cx, cy] = ink[static_cast<std::size_t>(
            rng.uniform_int(0, static_cast<std::int64_t>(ink.size()) - 1))];
        const double sigma = rng.uniform(params.blob_sigma.lo, params.blob_sigma.hi);
        const double strength = rng.uniform(params.lighten.lo, params.lighten.hi);
        const int reach = static_cast<int>(std::ceil(3.0 * sigma));
        const double inv = 1.0 / (2.0 * sigma * sigma);
        for (int dy = -reach; dy <= reach; ++dy) {
            const int y = cy + dy;
            if (y < 0 || y >= h) continue;
            for (int dx = -reach; dx <= reach; ++dx) {
                const int x = cx + dx;
                if (x < 0 || x >= w || !mask.at(x, y)) continue;
                weight[static_cast<std::size_t>(y) * w + x] +=
                    strength * std::exp(-(dx * dx + dy * dy) * inv);
            }
        }
    }

    Raster out = img;
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            const double t = std::min(1.0, weight[static_cast<std::size_t>(y) * w + x]);
            if (t <= 0.0) continue;
            std::uint8_t* px = out.pixel(x, y);
            for (int c = 0; c < ch; ++c) px[c] = to_u8(px[c] + (255.0 - px[c]) * t);
        }
    return out;
}

Raster apply_low_ink_lines(const Raster& img, LowInkVariant variant,
                           const LowInkParams& params, RngStream& rng) {
    if (img.height < 1) throw std::invalid_argument("apply_low_ink_lines: empty raster");
    const InkMask mask = ink_mask(img);
    const int w = img.width, h = img.height, ch = img.channels;

    std::vector<int> rows;
    if (variant == LowInkVariant::Random) {
        const int k = std::min<int>(h, static_cast<int>(
            rng.uniform_int(params.line_count.lo, params.line_count.hi)));
        std::vector<int> all(h);
        std::iota(all.begin(), all.end(), 0);
        for (int i = 0; i < k; ++i)
            std::swap(all[i], all[rng.uniform_int(i, h - 1)]);
        rows.assign(all.begin(), all.begin() + k);
        std::sort(rows.begin(), rows.end());
    } else {
        const int period = std::max<int>(1, static_cast<int>(
            rng.uniform_int(params.period.lo, params.period.hi)));
        const int start = static_cast<int>(rng.uniform_int(0, std::min(period, h) - 1));
        for (int y = start; y < h; y += period) rows.push_back(y);
    }

    Raster out = img;
    for (const int y : rows) {
        const int add = static_cast<int>(
            rng.uniform_int(params.lighten_add.lo, params.lighten_add.hi));
        for (int x = 0; x < w; ++x) {
            if (!mask.at(x, y)) continue;
            std::uint8_t* px = out.pixel(x, y);
            for (int c = 0; c < ch; ++c) px[c] = clamp_u8(px[c] + add);
        }
    }
    return out;
}

namespace {

// Quantized DCT roundtrip of one plane; blocks beyond the plane edge are
// padded by edge replication and the padding is discarded on write-back.
void quantize_plane(std::vector<double>& plane, int w, int h,
                    const std::array<int, 64>& qtable) {
    double block[64], coef[64];
    for (int by = 0; by < h; by += 8) {
        for (int bx = 0; bx < w; bx += 8) {
            for (int i = 0; i < 8; ++i) {
                const int y = std::min(by + i, h - 1);
                for (int j = 0; j < 8; ++j) {
                    const int x = std::min(bx + j, w - 1);
                    block[i * 8 + j] = plane[static_cast<std::size_t>(y) * w + x] - 128.0;
                }
            }
            dct8x8_forward(block, coef);
            for (int i = 0; i < 64; ++i) {
                const double q = qtable[i];
                coef[i] = q * std::floor(coef[i] / q + 0.5);
            }
            dct8x8_inverse(coef, block);
            for (int i = 0; i < 8 && by + i < h; ++i)
                for (int j = 0; j < 8 && bx + j < w; ++j)
                    plane[static_cast<std::size_t>(by + i) * w + bx + j] =
                        block[i * 8 + j] + 128.0;
        }
    }
}

// 2x2 block average; partial edge blocks average the samples present.
std::vector<double> downsample2x2(const std::vector<double>& plane, int w, int h,
                                  int& sw, int& sh) {
    sw = (w + 1) / 2;
    sh = (h + 1) / 2;
    std::vector<double> out(static_cast<std::size_t>(sw) * sh);
    for (int y = 0; y < sh; ++y)
        for (int x = 0; x < sw; ++x) {
            double sum = 0;
            int n = 0;
            for (int dy = 0; dy < 2; ++dy)
                for (int dx = 0; dx < 2; ++dx) {
                    const int yy = 2 * y + dy, xx = 2 * x + dx;
                    if (yy < h && xx < w) {
                        sum += plane[static_cast<std::size_t>(yy) * w + xx];
                        ++n;
                    }
                }
            out[static_cast<std::size_t>(y) * sw + x] = sum / n;
        }
    return out;
}

} // namespace

Raster apply_jpeg_artifact(const Raster& img, const JpegParams& params, RngStream& rng) {
    if (img.empty()) throw std::invalid_argument("apply_jpeg_artifact: empty raster");
    const int quality = static_cast<int>(rng.uniform_int(params.quality.lo, params.quality.hi));
    const auto qluma = scale_quant_table(kLumaQuantBase, quality);
    const auto qchroma = scale_quant_table(kChromaQuantBase, quality);

    const int w = img.width, h = img.height;
    const std::size_t n = static_cast<std::size_t>(w) * h;

    if (img.channels == 1) {
        std::vector<double> yp(n);
        for (std::size_t i = 0; i < n; ++i) yp[i] = img.data[i];
        quantize_plane(yp, w, h, qluma);
        Raster out(w, h, 1);
        for (std::size_t i = 0; i < n; ++i) out.data[i] = to_u8(yp[i]);
        return out;
    }

    // BT.601 full-range conversion; kept in doubles end to end so the
    // only losses are quantization and the final byte rounding.
    std::vector<double> yp(n), cb(n), cr(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double r = img.data[i * 3], g = img.data[i * 3 + 1], b = img.data[i * 3 + 2];
        const double y = 0.299 * r + 0.587 * g + 0.114 * b;
        yp[i] = y;
        cb[i] = 128.0 + (b - y) / 1.772;
        cr[i] = 128.0 + (r - y) / 1.402;
    }

    quantize_plane(yp, w, h, qluma);
    if (params.chroma_subsample) {
        int sw = 0, sh = 0;
        std::vector<double> scb = downsample2x2(cb, w, h, sw, sh);
        std::vector<double> scr = downsample2x2(cr, w, h, sw, sh);
        quantize_plane(scb, sw, sh, qchroma);
        quantize_plane(scr, sw, sh, qchroma);
        for (int y = 0; y < h; ++y)
            for (int x = 0; x < w; ++x) {
                const std::size_t s = static_cast<std::size_t>(y / 2) * sw + x / 2;
                cb[static_cast<std::size_t>(y) * w + x] = scb[s];
                cr[static_cast<std::size_t>(y) * w + x] = scr[s];
            }
    } else {
        quantize_plane(cb, w, h, qchroma);
        quantize_plane(cr, w, h, qchroma);
    }

    Raster out(w, h, 3);
    for (std::size_t i = 0; i < n; ++i) {
        const double y = yp[i], pb = cb[i] - 128.0, pr = cr[i] - 128.0;
        out.data[i * 3] = to_u8(y + 1.402 * pr);
        out.data[i * 3 + 1] = to_u8(y - (0.114 * 1.772 / 0.587) * pb - (0.299 * 1.402 / 0.587) * pr);
        out.data[i * 3 + 2] = to_u8(y + 1.772 * pb);
    }
    return out;
}

Raster apply_dirty_screen(const Raster& img, const DirtyScreenParams& params, RngStream& rng) {
    if (img.empty()) throw std::invalid_argument("apply_dirty_screen: empty raster");
    const int cell = std::max<int>(1, static_cast<int>(
        rng.uniform_int(params.cell_size.lo, params.cell_size.hi)));
    const int w = img.width, h = img.height, ch = img.channels;
    const int cells_x = (w + cell - 1) / cell;
    const int cells_y = (h + cell - 1) / cell;

    Raster out = img;
    for (int cy = 0; cy < cells_y; ++cy) {
        for (int cx = 0; cx < cells_x; ++cx) {
            if (rng.next_unit() >= params.dot_probability) continue;
            const int jx = static_cast<int>(rng.uniform_int(0, cell - 1));
            const int jy = static_cast<int>(rng.uniform_int(0, cell - 1));
            const int size = static_cast<int>(rng.uniform_int(1, 2));
            const int amount = static_cast<int>(
                rng.uniform_int(params.darken.lo, params.darken.hi));
            const int px = cx * cell + jx;
            const int py = cy * cell + jy;
            for (int dy = 0; dy < size; ++dy)
                for (int dx = 0; dx < size; ++dx) {
                    const int x = px + dx, y = py + dy;
                    if (x >= w || y >= h) continue;
                    std::uint8_t* p = out.pixel(x, y);
                    for (int c = 0; c < ch; ++c) p[c] = clamp_u8(p[c] - amount);
                }
        }
    }
    return out;
}

Raster apply_text_effect(const Raster& img, TextEffectKind kind,
                         const EffectParams& params, RngStream& rng) {
    switch (kind) {
    case TextEffectKind::InkBleed:
        return apply_ink_bleed(img, params.ink_bleed, rng);
    case TextEffectKind::Letterpress:
        return apply_letterpress(img, params.letterpress, rng);
    case TextEffectKind::LowInkRandomLines:
        return apply_low_ink_lines(img, LowInkVariant::Random, params.low_ink, rng);
    case TextEffectKind::LowInkPeriodicLines:
        return apply_low_ink_lines(img, LowInkVariant::Periodic, params.low_ink, rng);
    }
    throw std::invalid_argument("unknown text effect");
}

Raster apply_paper_effect(const Raster& img, PaperEffectKind kind,
                          const EffectParams& params, RngStream& rng) {
    switch (kind) {
    case PaperEffectKind::JpegArtifact:
        return apply_jpeg_artifact(img, params.jpeg, rng);
    case PaperEffectKind::DirtyScreen:
        return apply_dirty_screen(img, params.dirty_screen, rng);
    }
    throw std::invalid_argument("unknown paper effect");
}

} // namespace docaug
