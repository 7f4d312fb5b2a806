#pragma once

#include <cstdint>
#include <string>

#include "sensorfx/effects.hpp"

namespace sensorfx {

/// Closed interval [lo, hi].
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    bool contains(double v) const noexcept { return v >= lo && v <= hi; }
    friend bool operator==(const Interval&, const Interval&) = default;
};

struct ChromAbRanges {
    bool enabled = true;
    Interval scale{0.998, 1.006};
    /// Applies to both axes of all three channel translations.
    Interval translation{-2.0, 2.0};
    friend bool operator==(const ChromAbRanges&, const ChromAbRanges&) = default;
};

struct BlurRanges {
    bool enabled = true;
    Interval sigma{0.0, 3.0};
    friend bool operator==(const BlurRanges&, const BlurRanges&) = default;
};

struct ExposureRanges {
    bool enabled = true;
    Interval delta_s{-0.3, 0.3};
    /// A fixed contrast is the degenerate interval [A, A].
    Interval contrast{kDefaultContrast, kDefaultContrast};
    friend bool operator==(const ExposureRanges&, const ExposureRanges&) = default;
};

struct NoiseRanges {
    bool enabled = true;
    Interval poisson_scale{0.0, 4.0};
    Interval gaussian_sigma{0.0, 8.0};
    friend bool operator==(const NoiseRanges&, const NoiseRanges&) = default;
};

struct ColorShiftRanges {
    bool enabled = true;
    Interval dL{-4.0, 4.0};
    Interval da{-4.0, 4.0};
    Interval db{-4.0, 4.0};
    friend bool operator==(const ColorShiftRanges&, const ColorShiftRanges&) = default;
};

/// Sampling domain for AugmentationParams. Default-constructed ranges are the
/// built-in defaults; they are tuned so draws stay visually subtle and are
/// meant to be overridden from a config file.
struct ParamRanges {
    ChromAbRanges chrom_ab;
    BlurRanges blur;
    ExposureRanges exposure;
    NoiseRanges noise;
    ColorShiftRanges color;

    /// Every effect disabled.
    static ParamRanges none();

    friend bool operator==(const ParamRanges&, const ParamRanges&) = default;
};

/// Throws InvalidArgument for lo > hi, non-finite endpoints or intervals that
/// leave an effect's valid domain (scale > 0, sigma >= 0, A > 0, a >= 0, b >= 0).
void validate(const ParamRanges& ranges);

/// Draws one parameter set. Every scalar is drawn uniformly from its interval
/// in this fixed order, whether or not its effect is enabled:
///   scale, t_r.x, t_r.y, t_g.x, t_g.y, t_b.x, t_b.y, sigma, delta_S, A,
///   a, b, dL, da, db, noise_seed (raw 64-bit draw).
/// Disabled effects then receive identity parameters. The generator is
/// std::mt19937_64 seeded with `seed`; uniforms use the top 53 bits.
AugmentationParams sample_params(const ParamRanges& ranges, std::uint64_t seed);

struct SeedDerivation {
    std::uint64_t global_seed = 0;
    std::string item_key;
};

/// SipHash-2-4 of the UTF-8 item key under the key (global_seed, 0).
std::uint64_t derive_seed(const SeedDerivation& d);

/// Canonical item key: "<stable_key>#<aug_index>".
std::string item_key(const std::string& stable_key, int aug_index);

} // namespace sensorfx
