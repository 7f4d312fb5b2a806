#include <array>

#include "kernel_util.hpp"
#include "sensorfx/effects.hpp"
#include "sensorfx/error.hpp"

namespace sensorfx {

namespace {

struct Offset {
    int dx;
    int dy;
};

// Offsets are listed in row-major order.
constexpr std::array<Offset, 2> kHorizontal{{{-1, 0}, {1, 0}}};
constexpr std::array<Offset, 2> kVertical{{{0, -1}, {0, 1}}};
constexpr std::array<Offset, 4> kCross{{{0, -1}, {-1, 0}, {1, 0}, {0, 1}}};
constexpr std::array<Offset, 4> kDiagonal{{{-1, -1}, {1, -1}, {-1, 1}, {1, 1}}};

template <std::size_t N>
float average_interior(const Plane& m, int x, int y, const std::array<Offset, N>& offsets) {
    double sum = 0.0;
    for (const Offset& o : offsets) {
        sum += m.at(x + o.dx, y + o.dy);
    }
    return static_cast<float>(sum / static_cast<double>(N));
}

template <std::size_t N>
float average_clipped(const Plane& m, int x, int y, const std::array<Offset, N>& offsets) {
    double sum = 0.0;
    int count = 0;
    for (const Offset& o : offsets) {
        const int sx = x + o.dx;
        const int sy = y + o.dy;
        if (sx >= 0 && sx < m.width && sy >= 0 && sy < m.height) {
            sum += m.at(sx, sy);
            ++count;
        }
    }
    return static_cast<float>(sum / static_cast<double>(count));
}

template <bool Interior>
void demosaic_site(const Plane& m, ImageBuffer& out, int x, int y) {
    const auto avg = [&](const auto& offsets) {
        if constexpr (Interior) {
            return average_interior(m, x, y, offsets);
        } else {
            return average_clipped(m, x, y, offsets);
        }
    };
    float& r = out.at(Channel::Red, x, y);
    float& g = out.at(Channel::Green, x, y);
    float& b = out.at(Channel::Blue, x, y);
    const float native = m.at(x, y);

    switch (bayer_channel(x, y)) {
    case Channel::Green:
        g = native;
        if ((y & 1) == 0) {
            // G B G B row: blue left/right, red above/below.
            b = avg(kHorizontal);
            r = avg(kVertical);
        } else {
            r = avg(kHorizontal);
            b = avg(kVertical);
        }
        break;
    case Channel::Blue:
        b = native;
        g = avg(kCross);
        r = avg(kDiagonal);
        break;
    case Channel::Red:
        r = native;
        g = avg(kCross);
        b = avg(kDiagonal);
        break;
    }
}

} // namespace

Plane mosaic_gbrg(const ImageBuffer& image) {
    require_processable(image);
    const int width = image.width();
    const int height = image.height();
    Plane out(width, height);

#pragma omp parallel for schedule(static)
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            out.at(x, y) = image.at(bayer_channel(x, y), x, y);
        }
    }
    return out;
}

ImageBuffer demosaic_bilinear(const Plane& mosaic) {
    const int width = mosaic.width;
    const int height = mosaic.height;
    if (width < 2 || height < 2) {
        throw InvalidArgument("mosaic must be at least 2x2");
    }
    if (mosaic.samples.size() != detail::row_offset(height, width)) {
        throw InvalidArgument("mosaic sample count does not match its dimensions");
    }
    ImageBuffer out(width, height);

#pragma omp parallel for schedule(static)
    for (int y = 0; y < height; ++y) {
        const bool interior_row = y > 0 && y < height - 1;
        for (int x = 0; x < width; ++x) {
            if (interior_row && x > 0 && x < width - 1) {
                demosaic_site<true>(mosaic, out, x, y);
            } else {
                demosaic_site<false>(mosaic, out, x, y);
            }
        }
    }
    return out;
}

} // namespace sensorfx
