#include <algorithm>
#include <cmath>
#include <vector>

#include "kernel_util.hpp"
#include "sensorfx/effects.hpp"
#include "sensorfx/error.hpp"

namespace sensorfx {

namespace {

void blur_plane(std::span<const float> src, std::span<float> dst, int width, int height,
                const std::vector<double>& taps) {
    const int radius = static_cast<int>(taps.size() / 2);
    std::vector<float> horizontal(src.size());

#pragma omp parallel
    {
        std::vector<int> index(static_cast<std::size_t>(width + 2 * radius));
        for (int i = 0; i < width + 2 * radius; ++i) {
            index[i] = detail::reflect_index(i - radius, width);
        }

#pragma omp for schedule(static)
        for (int y = 0; y < height; ++y) {
            const float* in = src.data() + detail::row_offset(y, width);
            float* out = horizontal.data() + detail::row_offset(y, width);
            for (int x = 0; x < width; ++x) {
                double acc = 0.0;
                for (int k = 0; k <= 2 * radius; ++k) {
                    acc += taps[k] * in[index[x + k]];
                }
                out[x] = static_cast<float>(acc);
            }
        }

        std::vector<double> acc(static_cast<std::size_t>(width));
#pragma omp for schedule(static)
        for (int y = 0; y < height; ++y) {
            std::fill(acc.begin(), acc.end(), 0.0);
            for (int k = 0; k <= 2 * radius; ++k) {
                const float* in =
                    horizontal.data() +
                    detail::row_offset(detail::reflect_index(y + k - radius, height), width);
                const double w = taps[k];
                for (int x = 0; x < width; ++x) {
                    acc[x] += w * in[x];
                }
            }
            float* out = dst.data() + detail::row_offset(y, width);
            for (int x = 0; x < width; ++x) {
                out[x] = static_cast<float>(acc[x]);
            }
        }
    }
}

} // namespace

void validate(const BlurParams& p) {
    if (!std::isfinite(p.sigma) || p.sigma < 0.0) {
        throw InvalidArgument("blur sigma must be finite and >= 0");
    }
}

int gaussian_radius(double sigma) {
    validate(BlurParams{sigma});
    return static_cast<int>(std::ceil(3.0 * sigma));
}

std::vector<double> gaussian_kernel(double sigma) {
    const int radius = gaussian_radius(sigma);
    if (radius == 0) {
        return {1.0};
    }
    std::vector<double> taps(static_cast<std::size_t>(2 * radius + 1));
    const double denom = 2.0 * sigma * sigma;
    double sum = 0.0;
    for (int i = -radius; i <= radius; ++i) {
        const double v = std::exp(-static_cast<double>(i * i) / denom);
        taps[i + radius] = v;
        sum += v;
    }
    for (double& v : taps) {
        v /= sum;
    }
    return taps;
}

ImageBuffer gaussian_blur(const ImageBuffer& image, const BlurParams& p) {
    require_processable(image);
    validate(p);
    const std::vector<double> taps = gaussian_kernel(p.sigma);
    if (taps.size() == 1) {
        return image;
    }
    ImageBuffer out(image.width(), image.height());
    for (int c = 0; c < ImageBuffer::kChannels; ++c) {
        blur_plane(image.plane(c), out.plane(c), image.width(), image.height(), taps);
    }
    return out;
}

} // namespace sensorfx
