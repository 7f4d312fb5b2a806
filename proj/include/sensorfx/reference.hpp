#pragma once

#include <cstdint>

#include "sensorfx/effects.hpp"

/// Straightforward versions of the effect kernels, serial apart from the
/// color_space image conversions used by color_shift. They are
/// written per pixel without precomputed tables or row buffers and serve as
/// the comparison baseline for tests and benchmarks. Parameter validation is
/// left to the caller.
namespace sensorfx::reference {

ImageBuffer chromatic_aberration(const ImageBuffer& image, const ChromAbParams& p);
ImageBuffer gaussian_blur(const ImageBuffer& image, const BlurParams& p);
ImageBuffer re_expose(const ImageBuffer& image, const ExposureParams& p);
Plane mosaic_gbrg(const ImageBuffer& image);
ImageBuffer demosaic_bilinear(const Plane& mosaic);
Plane add_mosaic_noise(const Plane& mosaic, const NoiseParams& p, std::uint64_t seed);
ImageBuffer sensor_noise(const ImageBuffer& image, const NoiseParams& p, std::uint64_t seed);
ImageBuffer color_shift(const ImageBuffer& image, const ColorShiftParams& p);
ImageBuffer augment(const ImageBuffer& image, const AugmentationParams& p);

} // namespace sensorfx::reference
