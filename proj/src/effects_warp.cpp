#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "kernel_util.hpp"
#include "sensorfx/effects.hpp"
#include "sensorfx/error.hpp"

namespace sensorfx {

namespace {

bool finite(const Translation& t) { return std::isfinite(t.x) && std::isfinite(t.y); }

/// Source sample position along one axis: floor index, next index, weight.
struct Tap {
    int lo;
    int hi;
    double weight;
};

/// Inverse of out = scale * (src - center) + center + shift, edge-clamped.
std::vector<Tap> axis_taps(int size, double scale, double shift) {
    const double center = 0.5 * (size - 1);
    const double last = size - 1;
    std::vector<Tap> taps(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) {
        const double src = std::clamp((i - center - shift) / scale + center, 0.0, last);
        const int lo = static_cast<int>(std::floor(src));
        taps[i] = {lo, std::min(lo + 1, size - 1), src - lo};
    }
    return taps;
}

void warp_plane(std::span<const float> src, std::span<float> dst, int width, int height,
                double scale, const Translation& t) {
    const std::vector<Tap> cols = axis_taps(width, scale, t.x);
    const std::vector<Tap> rows = axis_taps(height, scale, t.y);

#pragma omp parallel for schedule(static)
    for (int y = 0; y < height; ++y) {
        const Tap& ry = rows[y];
        const float* top = src.data() + detail::row_offset(ry.lo, width);
        const float* bottom = src.data() + detail::row_offset(ry.hi, width);
        float* out = dst.data() + detail::row_offset(y, width);
        for (int x = 0; x < width; ++x) {
            const Tap& cx = cols[x];
            const double upper = (1.0 - cx.weight) * top[cx.lo] + cx.weight * top[cx.hi];
            const double lower = (1.0 - cx.weight) * bottom[cx.lo] + cx.weight * bottom[cx.hi];
            out[x] = static_cast<float>((1.0 - ry.weight) * upper + ry.weight * lower);
        }
    }
}

} // namespace

bool ChromAbParams::is_identity() const noexcept {
    const Translation zero{};
    return scale == 1.0 && red == zero && green == zero && blue == zero;
}

void validate(const ChromAbParams& p) {
    if (!std::isfinite(p.scale) || p.scale <= 0.0) {
        throw InvalidArgument("chromatic aberration scale must be finite and > 0");
    }
    if (!finite(p.red) || !finite(p.green) || !finite(p.blue)) {
        throw InvalidArgument("chromatic aberration translations must be finite");
    }
}

ImageBuffer chromatic_aberration(const ImageBuffer& image, const ChromAbParams& p) {
    require_processable(image);
    validate(p);
    const double bound = std::min(image.width(), image.height()) / 4.0;
    for (const Translation* t : {&p.red, &p.green, &p.blue}) {
        if (std::abs(t->x) > bound || std::abs(t->y) > bound) {
            throw InvalidArgument("chromatic aberration translation exceeds min(width, height)/4 = " +
                                  std::to_string(bound));
        }
    }

    ImageBuffer out(image.width(), image.height());
    const std::array<std::pair<double, Translation>, 3> per_channel{{
        {1.0, p.red},
        {p.scale, p.green},
        {1.0, p.blue},
    }};
    for (int c = 0; c < ImageBuffer::kChannels; ++c) {
        warp_plane(image.plane(c), out.plane(c), image.width(), image.height(),
                   per_channel[c].first, per_channel[c].second);
    }
    return out;
}

} // namespace sensorfx
