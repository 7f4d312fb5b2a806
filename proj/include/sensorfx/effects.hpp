#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "sensorfx/image.hpp"

namespace sensorfx {

/// Channel translation in pixels; positive x moves content right, positive y down.
struct Translation {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Translation&, const Translation&) = default;
};

/// Lens chromatic aberration: the green plane is magnified by `scale` about
/// the image center, every plane is translated by its own offset.
struct ChromAbParams {
    double scale = 1.0;
    Translation red;
    Translation green;
    Translation blue;

    bool is_identity() const noexcept;
    friend bool operator==(const ChromAbParams&, const ChromAbParams&) = default;
};

struct BlurParams {
    double sigma = 0.0;

    bool is_identity() const noexcept { return sigma == 0.0; }
    friend bool operator==(const BlurParams&, const BlurParams&) = default;
};

inline constexpr double kDefaultContrast = 0.85;

struct ExposureParams {
    double delta_s = 0.0;
    double contrast = kDefaultContrast;

    bool is_identity() const noexcept { return delta_s == 0.0; }
    friend bool operator==(const ExposureParams&, const ExposureParams&) = default;
};

/// Poisson-Gaussian sensor noise. Shot-noise variance at intensity v is
/// `poisson_scale * v`; read noise has standard deviation `gaussian_sigma`.
struct NoiseParams {
    double poisson_scale = 0.0;
    double gaussian_sigma = 0.0;

    bool is_identity() const noexcept { return poisson_scale == 0.0 && gaussian_sigma == 0.0; }
    friend bool operator==(const NoiseParams&, const NoiseParams&) = default;
};

/// Additive CIELAB offsets.
struct ColorShiftParams {
    double dL = 0.0;
    double da = 0.0;
    double db = 0.0;

    bool is_identity() const noexcept { return dL == 0.0 && da == 0.0 && db == 0.0; }
    friend bool operator==(const ColorShiftParams&, const ColorShiftParams&) = default;
};

struct AugmentationParams {
    ChromAbParams chrom_ab;
    BlurParams blur;
    ExposureParams exposure;
    NoiseParams noise;
    ColorShiftParams color;
    std::uint64_t noise_seed = 0;

    friend bool operator==(const AugmentationParams&, const AugmentationParams&) = default;
};

// Parameter validation. Each throws InvalidArgument naming the offending field.
void validate(const ChromAbParams& p);
void validate(const BlurParams& p);
void validate(const ExposureParams& p);
void validate(const NoiseParams& p);
void validate(const ColorShiftParams& p);
void validate(const AugmentationParams& p);

// --- Lens effects ---------------------------------------------------------

/// Per-channel affine warp with inverse-mapped bilinear sampling and
/// edge-clamped source coordinates.
ImageBuffer chromatic_aberration(const ImageBuffer& image, const ChromAbParams& p);

/// Truncation radius of the discrete Gaussian: ceil(3 sigma).
int gaussian_radius(double sigma);

/// Normalized 1-D Gaussian taps, index 0 is offset -radius.
std::vector<double> gaussian_kernel(double sigma);

/// Separable Gaussian convolution with half-sample symmetric (reflect)
/// boundaries. sigma == 0 returns the input unchanged.
ImageBuffer gaussian_blur(const ImageBuffer& image, const BlurParams& p);

// --- Sensor effects -------------------------------------------------------

inline constexpr float kExposureEpsilon = 0.1f;

/// Sigmoid exposure model I = 255 / (1 + exp(-A S)) and its inverse.
double exposure_response(double exposure, double contrast) noexcept;
double exposure_inverse(double intensity, double contrast) noexcept;

/// Shifts every sample by delta_s in the exposure domain.
ImageBuffer re_expose(const ImageBuffer& image, const ExposureParams& p);

/// Which color a photosite records in the GBRG layout anchored at (0, 0) = G.
constexpr Channel bayer_channel(int x, int y) noexcept {
    if ((y & 1) == 0) {
        return (x & 1) == 0 ? Channel::Green : Channel::Blue;
    }
    return (x & 1) == 0 ? Channel::Red : Channel::Green;
}

Plane mosaic_gbrg(const ImageBuffer& image);
ImageBuffer demosaic_bilinear(const Plane& mosaic);

/// Adds Poisson-Gaussian noise to every photosite of a mosaic and clamps the
/// result to [0, 255]. The draw at site i depends only on (seed, i).
Plane add_mosaic_noise(const Plane& mosaic, const NoiseParams& p, std::uint64_t seed);

/// mosaic -> per-site noise -> bilinear demosaic.
ImageBuffer sensor_noise(const ImageBuffer& image, const NoiseParams& p, std::uint64_t seed);

// --- Post-processing ------------------------------------------------------

ImageBuffer color_shift(const ImageBuffer& image, const ColorShiftParams& p);

/// Full pipeline: chromatic aberration, blur, exposure, noise, color shift.
/// Stages whose parameters are identity are skipped.
ImageBuffer augment(const ImageBuffer& image, const AugmentationParams& p);

} // namespace sensorfx
