#include "sensorfx/reference.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "sensorfx/color_space.hpp"
#include "sensorfx/rng.hpp"

namespace sensorfx::reference {

namespace {

int reflect(int i, int n) {
    while (i < 0 || i >= n) {
        i = i < 0 ? -i - 1 : 2 * n - 1 - i;
    }
    return i;
}

float bilinear(std::span<const float> plane, int width, int height, double sx, double sy) {
    sx = std::clamp(sx, 0.0, static_cast<double>(width - 1));
    sy = std::clamp(sy, 0.0, static_cast<double>(height - 1));
    const int x0 = static_cast<int>(std::floor(sx));
    const int y0 = static_cast<int>(std::floor(sy));
    const int x1 = std::min(x0 + 1, width - 1);
    const int y1 = std::min(y0 + 1, height - 1);
    const double wx = sx - x0;
    const double wy = sy - y0;
    const auto px = [&](int x, int y) { return plane[static_cast<std::size_t>(y) * width + x]; };
    const double upper = (1.0 - wx) * px(x0, y0) + wx * px(x1, y0);
    const double lower = (1.0 - wx) * px(x0, y1) + wx * px(x1, y1);
    return static_cast<float>((1.0 - wy) * upper + wy * lower);
}

} // namespace

ImageBuffer chromatic_aberration(const ImageBuffer& image, const ChromAbParams& p) {
    const int w = image.width();
    const int h = image.height();
    const double cx = 0.5 * (w - 1);
    const double cy = 0.5 * (h - 1);
    const double scales[3] = {1.0, p.scale, 1.0};
    const Translation shifts[3] = {p.red, p.green, p.blue};

    ImageBuffer out(w, h);
    for (int c = 0; c < 3; ++c) {
        for (int y = 0; y < h; ++y) {
            for (int x = 0; x < w; ++x) {
                const double sx = (x - cx - shifts[c].x) / scales[c] + cx;
                const double sy = (y - cy - shifts[c].y) / scales[c] + cy;
                out.at(static_cast<Channel>(c), x, y) = bilinear(image.plane(c), w, h, sx, sy);
            }
        }
    }
    return out;
}

ImageBuffer gaussian_blur(const ImageBuffer& image, const BlurParams& p) {
    const std::vector<double> taps = sensorfx::gaussian_kernel(p.sigma);
    if (taps.size() == 1) {
        return image;
    }
    const int r = static_cast<int>(taps.size() / 2);
    const int w = image.width();
    const int h = image.height();

    ImageBuffer horizontal(w, h);
    ImageBuffer out(w, h);
    for (int c = 0; c < 3; ++c) {
        const auto ch = static_cast<Channel>(c);
        for (int y = 0; y < h; ++y) {
            for (int x = 0; x < w; ++x) {
                double acc = 0.0;
                for (int k = -r; k <= r; ++k) {
                    acc += taps[k + r] * image.at(ch, reflect(x + k, w), y);
                }
                horizontal.at(ch, x, y) = static_cast<float>(acc);
            }
        }
        for (int y = 0; y < h; ++y) {
            for (int x = 0; x < w; ++x) {
                double acc = 0.0;
                for (int k = -r; k <= r; ++k) {
                    acc += taps[k + r] * horizontal.at(ch, x, reflect(y + k, h));
                }
                out.at(ch, x, y) = static_cast<float>(acc);
            }
        }
    }
    return out;
}

ImageBuffer re_expose(const ImageBuffer& image, const ExposureParams& p) {
    ImageBuffer out(image.width(), image.height());
    const auto src = image.samples();
    auto dst = out.samples();
    for (std::size_t i = 0; i < src.size(); ++i) {
        const double v = std::clamp(src[i], kExposureEpsilon, 255.0f - kExposureEpsilon);
        const double s = -std::log(255.0 / v - 1.0) / p.contrast + p.delta_s;
        dst[i] = static_cast<float>(255.0 / (1.0 + std::exp(-p.contrast * s)));
    }
    return out;
}

Plane mosaic_gbrg(const ImageBuffer& image) {
    Plane out(image.width(), image.height());
    for (int y = 0; y < image.height(); ++y) {
        for (int x = 0; x < image.width(); ++x) {
            // G B / R G tile.
            const bool even_row = y % 2 == 0;
            const bool even_col = x % 2 == 0;
            Channel c = Channel::Green;
            if (even_row && !even_col) {
                c = Channel::Blue;
            } else if (!even_row && even_col) {
                c = Channel::Red;
            }
            out.at(x, y) = image.at(c, x, y);
        }
    }
    return out;
}

ImageBuffer demosaic_bilinear(const Plane& mosaic) {
    // Every missing channel is the mean of the same-colored sites in the 3x3
    // neighbourhood; for GBRG these are exactly the nearest such sites.
    const int w = mosaic.width;
    const int h = mosaic.height;
    ImageBuffer out(w, h);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const Channel native = bayer_channel(x, y);
            for (int c = 0; c < 3; ++c) {
                const auto ch = static_cast<Channel>(c);
                if (ch == native) {
                    out.at(ch, x, y) = mosaic.at(x, y);
                    continue;
                }
                double sum = 0.0;
                int count = 0;
                for (int dy = -1; dy <= 1; ++dy) {
                    for (int dx = -1; dx <= 1; ++dx) {
                        const int sx = x + dx;
                        const int sy = y + dy;
                        if (sx < 0 || sy < 0 || sx >= w || sy >= h) {
                            continue;
                        }
                        if (bayer_channel(sx, sy) == ch) {
                            sum += mosaic.at(sx, sy);
                            ++count;
                        }
                    }
                }
                out.at(ch, x, y) = static_cast<float>(sum / count);
            }
        }
    }
    return out;
}

Plane add_mosaic_noise(const Plane& mosaic, const NoiseParams& p, std::uint64_t seed) {
    Plane out = mosaic;
    for (std::size_t i = 0; i < mosaic.samples.size(); ++i) {
        CounterRng rng(seed, i);
        const double v = mosaic.samples[i];
        double noisy = v;
        if (p.poisson_scale > 0.0) {
            noisy = p.poisson_scale * sample_poisson(v / p.poisson_scale, rng);
        }
        if (p.gaussian_sigma > 0.0) {
            noisy += p.gaussian_sigma * rng.normal();
        }
        out.samples[i] = static_cast<float>(std::clamp(noisy, 0.0, 255.0));
    }
    return out;
}

ImageBuffer sensor_noise(const ImageBuffer& image, const NoiseParams& p, std::uint64_t seed) {
    return reference::demosaic_bilinear(reference::add_mosaic_noise(reference::mosaic_gbrg(image), p, seed));
}

ImageBuffer color_shift(const ImageBuffer& image, const ColorShiftParams& p) {
    color::LabImage lab = color::srgb_to_lab(image);
    for (color::LabPixel& px : lab.pixels) {
        px.L += p.dL;
        px.a += p.da;
        px.b += p.db;
    }
    return color::lab_to_srgb(lab);
}

ImageBuffer augment(const ImageBuffer& image, const AugmentationParams& p) {
    ImageBuffer out = image;
    if (!p.chrom_ab.is_identity()) {
        out = reference::chromatic_aberration(out, p.chrom_ab);
    }
    if (!p.blur.is_identity()) {
        out = reference::gaussian_blur(out, p.blur);
    }
    if (!p.exposure.is_identity()) {
        out = reference::re_expose(out, p.exposure);
    }
    if (!p.noise.is_identity()) {
        out = reference::sensor_noise(out, p.noise, p.noise_seed);
    }
    if (!p.color.is_identity()) {
        out = reference::color_shift(out, p.color);
    }
    for (float& v : out.samples()) {
        v = std::clamp(v, 0.0f, 255.0f);
    }
    return out;
}

} // namespace sensorfx::reference
