#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace sensorfx {

enum class Channel : int { Red = 0, Green = 1, Blue = 2 };

/// Planar RGB raster. Samples are floats on the [0, 255] intensity scale,
/// stored plane by plane (R, G, B), each plane row-major.
class ImageBuffer {
public:
    static constexpr int kChannels = 3;

    ImageBuffer() = default;
    /// Zero-filled image. Throws InvalidArgument for non-positive dimensions.
    ImageBuffer(int width, int height);
    ImageBuffer(int width, int height, float fill);

    int width() const noexcept { return width_; }
    int height() const noexcept { return height_; }
    std::size_t pixel_count() const noexcept {
        return static_cast<std::size_t>(width_) * static_cast<std::size_t>(height_);
    }
    bool empty() const noexcept { return samples_.empty(); }

    std::span<float> plane(Channel c) noexcept {
        return {samples_.data() + offset(c), pixel_count()};
    }
    std::span<const float> plane(Channel c) const noexcept {
        return {samples_.data() + offset(c), pixel_count()};
    }
    std::span<float> plane(int c) noexcept { return plane(static_cast<Channel>(c)); }
    std::span<const float> plane(int c) const noexcept { return plane(static_cast<Channel>(c)); }

    float& at(Channel c, int x, int y) noexcept { return samples_[index(c, x, y)]; }
    float at(Channel c, int x, int y) const noexcept { return samples_[index(c, x, y)]; }

    std::span<float> samples() noexcept { return samples_; }
    std::span<const float> samples() const noexcept { return samples_; }

    friend bool operator==(const ImageBuffer&, const ImageBuffer&) = default;

private:
    std::size_t offset(Channel c) const noexcept {
        return static_cast<std::size_t>(c) * pixel_count();
    }
    std::size_t index(Channel c, int x, int y) const noexcept {
        return offset(c) + static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
               static_cast<std::size_t>(x);
    }

    int width_ = 0;
    int height_ = 0;
    std::vector<float> samples_;
};

/// Single-channel raster, used for the Bayer mosaic.
struct Plane {
    int width = 0;
    int height = 0;
    std::vector<float> samples;

    Plane() = default;
    Plane(int w, int h, float fill = 0.0f);

    float& at(int x, int y) noexcept {
        return samples[static_cast<std::size_t>(y) * static_cast<std::size_t>(width) +
                       static_cast<std::size_t>(x)];
    }
    float at(int x, int y) const noexcept {
        return samples[static_cast<std::size_t>(y) * static_cast<std::size_t>(width) +
                       static_cast<std::size_t>(x)];
    }

    friend bool operator==(const Plane&, const Plane&) = default;
};

/// Throws InvalidArgument unless the image is at least 2x2 with finite samples.
void require_processable(const ImageBuffer& image);

/// True when every sample is finite and inside [0, 255].
bool in_range(const ImageBuffer& image) noexcept;

} // namespace sensorfx
