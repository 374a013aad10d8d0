#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace docaug {

// Half-up rounding, the single rounding rule for every pixel write.
inline int round_half_up(double v) { return static_cast<int>(std::floor(v + 0.5)); }

inline std::uint8_t clamp_u8(int v) {
    return static_cast<std::uint8_t>(v < 0 ? 0 : (v > 255 ? 255 : v));
}

inline std::uint8_t to_u8(double v) { return clamp_u8(round_half_up(v)); }

// Owned 8-bit image buffer, row-major, interleaved channels.
// channels is 1 (gray) or 3 (RGB); data.size() == width * height * channels.
struct Raster {
    int width = 0;
    int height = 0;
    int channels = 0;
    std::vector<std::uint8_t> data;

    Raster() = default;
    Raster(int w, int h, int c, std::uint8_t value = 0)
        : width(w), height(h), channels(c),
          data(static_cast<std::size_t>(w) * h * c, value) {}

    bool empty() const { return data.empty(); }

    std::size_t index(int x, int y, int c = 0) const {
        return (static_cast<std::size_t>(y) * width + x) * channels + c;
    }
    std::uint8_t at(int x, int y, int c = 0) const { return data[index(x, y, c)]; }
    std::uint8_t& at(int x, int y, int c = 0) { return data[index(x, y, c)]; }
    const std::uint8_t* pixel(int x, int y) const { return &data[index(x, y)]; }
    std::uint8_t* pixel(int x, int y) { return &data[index(x, y)]; }

    bool same_shape(const Raster& o) const {
        return width == o.width && height == o.height && channels == o.channels;
    }
};

// BT.601 luma of one pixel, unrounded.
inline double luma(const std::uint8_t* px, int channels) {
    if (channels == 1) return px[0];
    return 0.299 * px[0] + 0.587 * px[1] + 0.114 * px[2];
}

// One boolean per pixel; true marks ink (dark) pixels.
struct InkMask {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> bits;

    InkMask() = default;
    InkMask(int w, int h)
        : width(w), height(h), bits(static_cast<std::size_t>(w) * h, 0) {}

    bool at(int x, int y) const {
        return bits[static_cast<std::size_t>(y) * width + x] != 0;
    }
    void set(int x, int y, bool v) {
        bits[static_cast<std::size_t>(y) * width + x] = v ? 1 : 0;
    }

    std::size_t count() const;
};

} // namespace docaug
