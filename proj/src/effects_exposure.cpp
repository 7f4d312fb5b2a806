#include <algorithm>
#include <cmath>

#include "sensorfx/effects.hpp"
#include "sensorfx/error.hpp"

namespace sensorfx {

void validate(const ExposureParams& p) {
    if (!std::isfinite(p.contrast) || p.contrast <= 0.0) {
        throw InvalidArgument("exposure contrast A must be finite and > 0");
    }
    if (!std::isfinite(p.delta_s)) {
        throw InvalidArgument("exposure delta_S must be finite");
    }
}

double exposure_response(double exposure, double contrast) noexcept {
    return 255.0 / (1.0 + std::exp(-contrast * exposure));
}

double exposure_inverse(double intensity, double contrast) noexcept {
    return -std::log(255.0 / intensity - 1.0) / contrast;
}

ImageBuffer re_expose(const ImageBuffer& image, const ExposureParams& p) {
    require_processable(image);
    validate(p);

    ImageBuffer out(image.width(), image.height());
    const auto src = image.samples();
    auto dst = out.samples();
    const auto n = static_cast<std::ptrdiff_t>(src.size());
    const float lo = kExposureEpsilon;
    const float hi = 255.0f - kExposureEpsilon;

#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const double v = std::clamp(src[i], lo, hi);
        const double shifted = exposure_inverse(v, p.contrast) + p.delta_s;
        dst[i] = static_cast<float>(exposure_response(shifted, p.contrast));
    }
    return out;
}

} // namespace sensorfx
