#include "sensorfx/image.hpp"

#include <cmath>
#include <string>

#include "sensorfx/error.hpp"

namespace sensorfx {

namespace {

void check_dimensions(int width, int height) {
    if (width <= 0 || height <= 0) {
        throw InvalidArgument("image dimensions must be positive, got " + std::to_string(width) +
                              "x" + std::to_string(height));
    }
}

} // namespace

ImageBuffer::ImageBuffer(int width, int height) : ImageBuffer(width, height, 0.0f) {}

ImageBuffer::ImageBuffer(int width, int height, float fill) : width_(width), height_(height) {
    check_dimensions(width, height);
    samples_.assign(pixel_count() * kChannels, fill);
}

Plane::Plane(int w, int h, float fill) : width(w), height(h) {
    check_dimensions(w, h);
    samples.assign(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), fill);
}

void require_processable(const ImageBuffer& image) {
    if (image.width() < 2 || image.height() < 2) {
        throw InvalidArgument("image must be at least 2x2, got " + std::to_string(image.width()) +
                              "x" + std::to_string(image.height()));
    }
    for (float v : image.samples()) {
        if (!std::isfinite(v)) {
            throw InvalidArgument("image contains non-finite samples");
        }
    }
}

bool in_range(const ImageBuffer& image) noexcept {
    for (float v : image.samples()) {
        if (!(v >= 0.0f && v <= 255.0f)) {
            return false;
        }
    }
    return true;
}

} // namespace sensorfx
