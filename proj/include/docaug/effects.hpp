#pragma once

#include "docaug/raster.hpp"
#include "docaug/rng.hpp"

namespace docaug {

// Text effects act on ink pixels only; paper effects act on the whole page.
enum class TextEffectKind { InkBleed, Letterpress, LowInkRandomLines, LowInkPeriodicLines };
enum class PaperEffectKind { JpegArtifact, DirtyScreen };
enum class LowInkVariant { Random, Periodic };

inline constexpr int kTextEffectCount = 4;
inline constexpr int kPaperEffectCount = 2;

const char* text_effect_name(TextEffectKind kind);
const char* paper_effect_name(PaperEffectKind kind);

struct Range {
    double lo = 0, hi = 0;
};
struct IntRange {
    int lo = 0, hi = 0;
};

struct InkBleedParams {
    int dilation_radius = 2;       // reach of the bleed fringe, Chebyshev
    double bleed_probability = 0.3;
    Range darken_alpha{0.1, 0.4};  // fraction a bled pixel darkens by
    int blur_radius = 1;           // softening pass inside the bleed region
};

struct LetterpressParams {
    double blob_density = 40.0;    // blobs per 10^4 ink pixels
    Range blob_sigma{1.0, 3.0};    // Gaussian falloff radius, pixels
    Range lighten{0.2, 0.6};       // blob strength toward paper white
};

struct LowInkParams {
    IntRange line_count{5, 15};    // rows affected by the random variant
    IntRange period{10, 30};       // row stride of the periodic variant
    IntRange lighten_add{60, 120}; // gray levels added per affected line
};

struct JpegParams {
    IntRange quality{25, 95};
    bool chroma_subsample = true;
};

struct DirtyScreenParams {
    IntRange cell_size{8, 16};     // dot grid pitch, pixels
    double dot_probability = 0.5;
    IntRange darken{10, 40};       // gray levels removed under a dot
};

struct EffectParams {
    InkBleedParams ink_bleed;
    LetterpressParams letterpress;
    LowInkParams low_ink;
    JpegParams jpeg;
    DirtyScreenParams dirty_screen;

    // Throws std::invalid_argument naming the offending field.
    void validate() const;
};

// All effects are pure: same (input, params, seed) gives byte-identical
// output. Per-effect draw orders are documented below and frozen; new
// parameters must append draws, never reorder them.

// Darkens a random fraction of the fringe around ink (pixels within
// dilation_radius of the mask but not ink themselves), then softens the
// bleed region with a box blur that is only allowed to darken.
// Draws: per fringe pixel in row-major order, one gate uniform, then one
// alpha uniform when the gate passes.
Raster apply_ink_bleed(const Raster& img, const InkBleedParams& params, RngStream& rng);

// Lightens ink toward paper white with Gaussian blobs centered on ink
// pixels; blob count = round(blob_density * |ink| / 10^4).
// Draws: per blob, center index, sigma, strength.
Raster apply_letterpress(const Raster& img, const LetterpressParams& params, RngStream& rng);

// Lightens every ink pixel on a set of affected rows. Random variant
// draws a count k then k distinct rows (partial Fisher-Yates); Periodic
// draws a period p then a start row in [0, min(p, height) - 1].
// Draws: the row selection above, then one lighten value per affected row
// in ascending row order.
Raster apply_low_ink_lines(const Raster& img, LowInkVariant variant,
                           const LowInkParams& params, RngStream& rng);

// In-memory lossy block-transform roundtrip: BT.601 YCbCr (gray images are
// a lone luma plane), optional 2x2 chroma averaging and replication,
// 8x8 DCT with edge-replicated padding, quantization at the sampled
// quality, dequantization, inverse DCT, conversion back. Entropy coding is
// omitted; the degradation comes from quantization alone.
// Draws: one uniform integer for the quality.
Raster apply_jpeg_artifact(const Raster& img, const JpegParams& params, RngStream& rng);

// Overlays a jittered grid of small dark dots across the whole page.
// Draws: one uniform integer for the cell size, then per cell in row-major
// order a gate uniform and, when it passes, jitter x, jitter y, dot size
// (1 or 2), and darken amount.
Raster apply_dirty_screen(const Raster& img, const DirtyScreenParams& params, RngStream& rng);

Raster apply_text_effect(const Raster& img, TextEffectKind kind,
                         const EffectParams& params, RngStream& rng);
Raster apply_paper_effect(const Raster& img, PaperEffectKind kind,
                          const EffectParams& params, RngStream& rng);

} // namespace docaug
