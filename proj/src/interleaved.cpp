#include "sensorfx/interleaved.hpp"

#include "sensorfx/dataset_io.hpp"
#include "sensorfx/error.hpp"

namespace sensorfx {

namespace {

std::size_t expected_size(int height, int width) {
    if (height <= 0 || width <= 0) {
        throw InvalidArgument("interleaved image needs positive height and width");
    }
    return static_cast<std::size_t>(height) * static_cast<std::size_t>(width) * 3;
}

template <typename T>
ImageBuffer unpack(std::span<const T> in, int width, int height) {
    ImageBuffer img(width, height);
    const std::size_t n = img.pixel_count();
    for (int c = 0; c < 3; ++c) {
        auto plane = img.plane(c);
        for (std::size_t i = 0; i < n; ++i) {
            plane[i] = static_cast<float>(in[3 * i + c]);
        }
    }
    return img;
}

template <typename T, typename Convert>
void pack(const ImageBuffer& image, std::span<T> out, Convert convert) {
    if (out.size() != expected_size(image.height(), image.width())) {
        throw InvalidArgument("output array does not match image shape");
    }
    const std::size_t n = image.pixel_count();
    for (int c = 0; c < 3; ++c) {
        auto plane = image.plane(c);
        for (std::size_t i = 0; i < n; ++i) {
            out[3 * i + c] = convert(plane[i]);
        }
    }
}

} // namespace

ImageBuffer from_interleaved(const InterleavedView& view) {
    const std::size_t n = expected_size(view.height, view.width);
    if (view.u8.empty() == view.f32.empty()) {
        throw InvalidArgument("interleaved view needs exactly one of 8-bit or float samples");
    }
    if (!view.u8.empty()) {
        if (view.u8.size() != n) {
            throw InvalidArgument("8-bit array size does not match height x width x 3");
        }
        return unpack(view.u8, view.width, view.height);
    }
    if (view.f32.size() != n) {
        throw InvalidArgument("float array size does not match height x width x 3");
    }
    return unpack(view.f32, view.width, view.height);
}

void to_interleaved(const ImageBuffer& image, std::span<std::uint8_t> out) {
    pack(image, out, [](float v) { return quantize(v); });
}

void to_interleaved(const ImageBuffer& image, std::span<float> out) {
    pack(image, out, [](float v) { return v; });
}

} // namespace sensorfx
