#include <algorithm>
#include <cmath>

#include "kernel_util.hpp"
#include "sensorfx/effects.hpp"
#include "sensorfx/error.hpp"
#include "sensorfx/rng.hpp"

namespace sensorfx {

void validate(const NoiseParams& p) {
    if (!std::isfinite(p.poisson_scale) || p.poisson_scale < 0.0) {
        throw InvalidArgument("noise Poisson scale a must be finite and >= 0");
    }
    if (!std::isfinite(p.gaussian_sigma) || p.gaussian_sigma < 0.0) {
        throw InvalidArgument("noise Gaussian sigma b must be finite and >= 0");
    }
}

Plane add_mosaic_noise(const Plane& mosaic, const NoiseParams& p, std::uint64_t seed) {
    validate(p);
    Plane out = mosaic;
    const auto n = static_cast<std::ptrdiff_t>(mosaic.samples.size());
    const double a = p.poisson_scale;
    const double b = p.gaussian_sigma;

#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        CounterRng rng(seed, static_cast<std::uint64_t>(i));
        const double v = mosaic.samples[i];
        double noisy = a > 0.0 ? a * sample_poisson(v / a, rng) : v;
        if (b > 0.0) {
            noisy += b * rng.normal();
        }
        out.samples[i] = static_cast<float>(std::clamp(noisy, 0.0, 255.0));
    }
    return out;
}

ImageBuffer sensor_noise(const ImageBuffer& image, const NoiseParams& p, std::uint64_t seed) {
    require_processable(image);
    validate(p);
    return demosaic_bilinear(add_mosaic_noise(mosaic_gbrg(image), p, seed));
}

} // namespace sensorfx
