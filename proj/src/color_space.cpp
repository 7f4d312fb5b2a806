#include "sensorfx/color_space.hpp"

#include <algorithm>
#include <cmath>

#include "sensorfx/error.hpp"

namespace sensorfx::color {

namespace {

using Matrix3 = std::array<std::array<double, 3>, 3>;

constexpr Matrix3 kLinearToXyz{{
    {0.4124564, 0.3575761, 0.1804375},
    {0.2126729, 0.7151522, 0.0721750},
    {0.0193339, 0.1191920, 0.9503041},
}};

constexpr Matrix3 invert(const Matrix3& m) {
    const double c00 = m[1][1] * m[2][2] - m[1][2] * m[2][1];
    const double c01 = m[1][2] * m[2][0] - m[1][0] * m[2][2];
    const double c02 = m[1][0] * m[2][1] - m[1][1] * m[2][0];
    const double det = m[0][0] * c00 + m[0][1] * c01 + m[0][2] * c02;
    return {{
        {c00 / det, (m[0][2] * m[2][1] - m[0][1] * m[2][2]) / det,
         (m[0][1] * m[1][2] - m[0][2] * m[1][1]) / det},
        {c01 / det, (m[0][0] * m[2][2] - m[0][2] * m[2][0]) / det,
         (m[0][2] * m[1][0] - m[0][0] * m[1][2]) / det},
        {c02 / det, (m[0][1] * m[2][0] - m[0][0] * m[2][1]) / det,
         (m[0][0] * m[1][1] - m[0][1] * m[1][0]) / det},
    }};
}

constexpr Matrix3 kXyzToLinear = invert(kLinearToXyz);

constexpr double kDelta = 6.0 / 29.0;
constexpr double kDeltaCubed = kDelta * kDelta * kDelta;
constexpr double kLinearSlope = 1.0 / (3.0 * kDelta * kDelta);
constexpr double kLinearOffset = 4.0 / 29.0;

Triple multiply(const Matrix3& m, const Triple& v) noexcept {
    return {
        m[0][0] * v[0] + m[0][1] * v[1] + m[0][2] * v[2],
        m[1][0] * v[0] + m[1][1] * v[1] + m[1][2] * v[2],
        m[2][0] * v[0] + m[2][1] * v[1] + m[2][2] * v[2],
    };
}

double lab_f(double t) noexcept {
    return t > kDeltaCubed ? std::cbrt(t) : t * kLinearSlope + kLinearOffset;
}

double lab_f_inverse(double u) noexcept {
    return u > kDelta ? u * u * u : (u - kLinearOffset) / kLinearSlope;
}

} // namespace

double srgb_decode(double encoded) {
    const double c = encoded / 255.0;
    return c <= 0.04045 ? c / 12.92 : std::pow((c + 0.055) / 1.055, 2.4);
}

double srgb_encode(double linear) {
    const double c = linear <= 0.0031308 ? 12.92 * linear
                                          : 1.055 * std::pow(linear, 1.0 / 2.4) - 0.055;
    return c * 255.0;
}

Triple linear_to_xyz(const Triple& rgb) noexcept {
    Triple xyz = multiply(kLinearToXyz, rgb);
    for (double& v : xyz) {
        v *= 100.0;
    }
    return xyz;
}

Triple xyz_to_linear(const Triple& xyz) noexcept {
    return multiply(kXyzToLinear, {xyz[0] / 100.0, xyz[1] / 100.0, xyz[2] / 100.0});
}

LabPixel xyz_to_lab(const Triple& xyz, const WhitePoint& white) noexcept {
    const double fx = lab_f(xyz[0] / white.x);
    const double fy = lab_f(xyz[1] / white.y);
    const double fz = lab_f(xyz[2] / white.z);
    return {116.0 * fy - 16.0, 500.0 * (fx - fy), 200.0 * (fy - fz)};
}

Triple lab_to_xyz(const LabPixel& lab, const WhitePoint& white) noexcept {
    const double fy = (lab.L + 16.0) / 116.0;
    const double fx = fy + lab.a / 500.0;
    const double fz = fy - lab.b / 200.0;
    return {white.x * lab_f_inverse(fx), white.y * lab_f_inverse(fy),
            white.z * lab_f_inverse(fz)};
}

LabPixel srgb_to_lab(const Triple& srgb) noexcept {
    const Triple linear{srgb_decode(srgb[0]), srgb_decode(srgb[1]), srgb_decode(srgb[2])};
    return xyz_to_lab(linear_to_xyz(linear));
}

Triple lab_to_srgb(const LabPixel& lab) noexcept {
    const Triple linear = xyz_to_linear(lab_to_xyz(lab));
    Triple out{};
    for (int c = 0; c < 3; ++c) {
        const double clipped = std::clamp(linear[c], 0.0, 1.0);
        out[c] = std::clamp(srgb_encode(clipped), 0.0, 255.0);
    }
    return out;
}

LabImage srgb_to_lab(const ImageBuffer& image) {
    LabImage lab;
    lab.width = image.width();
    lab.height = image.height();
    lab.pixels.resize(image.pixel_count());

    const auto r = image.plane(Channel::Red);
    const auto g = image.plane(Channel::Green);
    const auto b = image.plane(Channel::Blue);
    const auto n = static_cast<std::ptrdiff_t>(image.pixel_count());

#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        lab.pixels[i] = srgb_to_lab(Triple{r[i], g[i], b[i]});
    }
    return lab;
}

ImageBuffer lab_to_srgb(const LabImage& image) {
    if (image.pixels.size() !=
        static_cast<std::size_t>(image.width) * static_cast<std::size_t>(image.height)) {
        throw InvalidArgument("Lab image size does not match its dimensions");
    }
    ImageBuffer out(image.width, image.height);
    auto r = out.plane(Channel::Red);
    auto g = out.plane(Channel::Green);
    auto b = out.plane(Channel::Blue);
    const auto n = static_cast<std::ptrdiff_t>(out.pixel_count());

#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const Triple rgb = lab_to_srgb(image.pixels[i]);
        r[i] = static_cast<float>(rgb[0]);
        g[i] = static_cast<float>(rgb[1]);
        b[i] = static_cast<float>(rgb[2]);
    }
    return out;
}

} // namespace sensorfx::color
