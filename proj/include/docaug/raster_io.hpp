#pragma once

#include <filesystem>

#include "docaug/raster.hpp"

namespace docaug {

// Reads a binary PGM (P5), PPM (P6), or 8-bit PNG file. PGM loads as one
// channel, PPM as three. PNG gray/RGB load as stored; palette entries are
// expanded and any alpha is flattened onto white. Non-8-bit depths are
// rejected. Throws std::runtime_error with the path in the message.
Raster load_image(const std::filesystem::path& path);

// Writes P5 for 1-channel and P6 for 3-channel rasters. A load of the
// written file reproduces the raster byte for byte.
void save_image(const Raster& img, const std::filesystem::path& path);

} // namespace docaug
