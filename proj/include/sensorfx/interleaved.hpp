#pragma once

#include <cstdint>
#include <span>

#include "sensorfx/image.hpp"

namespace sensorfx {

/// Row-major height x width x 3 view over caller memory, as handed over by an
/// array library. Exactly one of u8 / f32 is non-empty.
struct InterleavedView {
    int height = 0;
    int width = 0;
    std::span<const std::uint8_t> u8;
    std::span<const float> f32;
};

/// Copies the view into a planar buffer; 8-bit samples become floats on [0, 255].
/// Throws InvalidArgument when the span length is not height * width * 3.
ImageBuffer from_interleaved(const InterleavedView& view);

/// Writes `image` back as interleaved samples. The 8-bit form applies the same
/// rounding as the PNG writer.
void to_interleaved(const ImageBuffer& image, std::span<std::uint8_t> out);
void to_interleaved(const ImageBuffer& image, std::span<float> out);

} // namespace sensorfx
