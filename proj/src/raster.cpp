#include "docaug/raster.hpp"

#include <algorithm>

namespace docaug {

std::size_t InkMask::count() const {
    return static_cast<std::size_t>(std::count(bits.begin(), bits.end(), std::uint8_t{1}));
}

} // namespace docaug
