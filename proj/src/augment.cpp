#include <algorithm>

#include "sensorfx/effects.hpp"

namespace sensorfx {

void validate(const AugmentationParams& p) {
    validate(p.chrom_ab);
    validate(p.blur);
    validate(p.exposure);
    validate(p.noise);
    validate(p.color);
}

ImageBuffer augment(const ImageBuffer& image, const AugmentationParams& p) {
    require_processable(image);
    validate(p);

    ImageBuffer current = image;
    if (!p.chrom_ab.is_identity()) {
        current = chromatic_aberration(current, p.chrom_ab);
    }
    if (!p.blur.is_identity()) {
        current = gaussian_blur(current, p.blur);
    }
    if (!p.exposure.is_identity()) {
        current = re_expose(current, p.exposure);
    }
    if (!p.noise.is_identity()) {
        current = sensor_noise(current, p.noise, p.noise_seed);
    }
    if (!p.color.is_identity()) {
        current = color_shift(current, p.color);
    }
    for (float& v : current.samples()) {
        v = std::clamp(v, 0.0f, 255.0f);
    }
    return current;
}

} // namespace sensorfx
