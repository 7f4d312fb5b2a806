#include "sensorfx/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "sensorfx/error.hpp"
#include "sensorfx/rng.hpp"

namespace sensorfx {

namespace {

void check_interval(const Interval& iv, const char* name) {
    if (!std::isfinite(iv.lo) || !std::isfinite(iv.hi)) {
        throw InvalidArgument(std::string("range ") + name + " has non-finite endpoints");
    }
    if (iv.lo > iv.hi) {
        throw InvalidArgument(std::string("range ") + name + " has lo > hi");
    }
}

class UniformSource {
public:
    explicit UniformSource(std::uint64_t seed) : engine_(seed) {}

    double draw(const Interval& iv) {
        const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
        return std::min(iv.hi, iv.lo + (iv.hi - iv.lo) * u);
    }

    std::uint64_t raw() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

} // namespace

ParamRanges ParamRanges::none() {
    ParamRanges r;
    r.chrom_ab.enabled = false;
    r.blur.enabled = false;
    r.exposure.enabled = false;
    r.noise.enabled = false;
    r.color.enabled = false;
    return r;
}

void validate(const ParamRanges& r) {
    check_interval(r.chrom_ab.scale, "chromatic_aberration.S");
    check_interval(r.chrom_ab.translation, "chromatic_aberration.t");
    check_interval(r.blur.sigma, "blur.sigma");
    check_interval(r.exposure.delta_s, "exposure.delta_S");
    check_interval(r.exposure.contrast, "exposure.A");
    check_interval(r.noise.poisson_scale, "noise.a");
    check_interval(r.noise.gaussian_sigma, "noise.b");
    check_interval(r.color.dL, "color_shift.dL");
    check_interval(r.color.da, "color_shift.da");
    check_interval(r.color.db, "color_shift.db");

    if (r.chrom_ab.scale.lo <= 0.0) {
        throw InvalidArgument("range chromatic_aberration.S must be > 0");
    }
    if (r.blur.sigma.lo < 0.0) {
        throw InvalidArgument("range blur.sigma must be >= 0");
    }
    if (r.exposure.contrast.lo <= 0.0) {
        throw InvalidArgument("exposure.A must be > 0");
    }
    if (r.noise.poisson_scale.lo < 0.0) {
        throw InvalidArgument("range noise.a must be >= 0");
    }
    if (r.noise.gaussian_sigma.lo < 0.0) {
        throw InvalidArgument("range noise.b must be >= 0");
    }
}

AugmentationParams sample_params(const ParamRanges& r, std::uint64_t seed) {
    validate(r);
    UniformSource src(seed);

    AugmentationParams p;
    p.chrom_ab.scale = src.draw(r.chrom_ab.scale);
    for (Translation* t : {&p.chrom_ab.red, &p.chrom_ab.green, &p.chrom_ab.blue}) {
        t->x = src.draw(r.chrom_ab.translation);
        t->y = src.draw(r.chrom_ab.translation);
    }
    p.blur.sigma = src.draw(r.blur.sigma);
    p.exposure.delta_s = src.draw(r.exposure.delta_s);
    p.exposure.contrast = src.draw(r.exposure.contrast);
    p.noise.poisson_scale = src.draw(r.noise.poisson_scale);
    p.noise.gaussian_sigma = src.draw(r.noise.gaussian_sigma);
    p.color.dL = src.draw(r.color.dL);
    p.color.da = src.draw(r.color.da);
    p.color.db = src.draw(r.color.db);
    p.noise_seed = src.raw();

    if (!r.chrom_ab.enabled) {
        p.chrom_ab = ChromAbParams{};
    }
    if (!r.blur.enabled) {
        p.blur = BlurParams{};
    }
    if (!r.exposure.enabled) {
        p.exposure = ExposureParams{};
    }
    if (!r.noise.enabled) {
        p.noise = NoiseParams{};
    }
    if (!r.color.enabled) {
        p.color = ColorShiftParams{};
    }
    return p;
}

std::uint64_t derive_seed(const SeedDerivation& d) {
    return siphash24(d.global_seed, 0, d.item_key);
}

std::string item_key(const std::string& stable_key, int aug_index) {
    return stable_key + "#" + std::to_string(aug_index);
}

} // namespace sensorfx
