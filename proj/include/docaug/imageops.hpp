#pragma once

#include <utility>
#include <vector>

#include "docaug/raster.hpp"

namespace docaug {

// Pages are black-on-white; the midpoint separates ink from paper.
inline constexpr int kDefaultInkThreshold = 127;

// BT.601 gray conversion, half-up rounded. Gray input is returned as is.
Raster to_gray(const Raster& img);

// Marks every pixel whose (rounded) luma is strictly below the threshold.
InkMask ink_mask(const Raster& img, int threshold = kDefaultInkThreshold);

// Morphological dilation with a square structuring element of side
// 2*radius + 1 (Chebyshev distance <= radius).
InkMask dilate(const InkMask& mask, int radius);

// Mean over the (2r+1)^2 window with replicated borders; rounding happens
// once, on the final quotient.
Raster box_blur(const Raster& img, int radius);

// Forward rotation map about (cx, cy), y-down coordinates:
//   x' = cx + (x-cx)*cos - (y-cy)*sin
//   y' = cy + (x-cx)*sin + (y-cy)*cos
std::pair<double, double> rotate_point(double x, double y, double angle_degrees,
                                       double cx, double cy);

// Rotates about the canvas center ((w-1)/2, (h-1)/2) keeping the canvas
// size. Destination pixels are sampled from the source via the inverse of
// rotate_point with bilinear interpolation; sources falling outside the
// canvas take `fill` (one sample per channel, or one sample replicated).
Raster rotate_image(const Raster& img, double angle_degrees,
                    const std::vector<std::uint8_t>& fill);

} // namespace docaug
