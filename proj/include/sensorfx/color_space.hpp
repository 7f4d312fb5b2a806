#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "sensorfx/image.hpp"

/// Conversions between 8-bit-scale sRGB, linear RGB, CIE XYZ and CIELAB.
///
/// All constants are the standard published ones:
///
///  * sRGB transfer (IEC 61966-2-1), on c in [0, 1]:
///      decode: c <= 0.04045   ? c / 12.92 : ((c + 0.055) / 1.055)^2.4
///      encode: l <= 0.0031308 ? 12.92 l   : 1.055 l^(1/2.4) - 0.055
///  * linear sRGB -> XYZ (D65, 2 degree observer), XYZ scaled so Y(white) = 100:
///      | 0.4124564  0.3575761  0.1804375 |
///      | 0.2126729  0.7151522  0.0721750 |
///      | 0.0193339  0.1191920  0.9503041 |
///    The inverse is the exact double-precision inverse of this matrix, so the
///    round trip is algebraically closed.
///  * D65 reference white (Xn, Yn, Zn) = (95.047, 100.0, 108.883).
///  * CIE lightness function with delta = 6/29:
///      f(t) = t^(1/3)                      if t > delta^3
///             t / (3 delta^2) + 4/29       otherwise
///      L = 116 f(Y/Yn) - 16,  a = 500 (f(X/Xn) - f(Y/Yn)),  b = 200 (f(Y/Yn) - f(Z/Zn))
///
/// Per-pixel math is carried out in double precision. The inverse path clamps
/// each linear RGB channel to [0, 1] before transfer encoding, which makes
/// large Lab translations lossy for saturated colors.
namespace sensorfx::color {

struct LabPixel {
    double L = 0.0;
    double a = 0.0;
    double b = 0.0;
};

struct WhitePoint {
    double x;
    double y;
    double z;
};

inline constexpr WhitePoint kD65{95.047, 100.0, 108.883};

/// Row-major Lab raster with the same geometry as the ImageBuffer it came from.
struct LabImage {
    int width = 0;
    int height = 0;
    std::vector<LabPixel> pixels;

    LabPixel& at(int x, int y) noexcept {
        return pixels[static_cast<std::size_t>(y) * static_cast<std::size_t>(width) +
                      static_cast<std::size_t>(x)];
    }
    const LabPixel& at(int x, int y) const noexcept {
        return pixels[static_cast<std::size_t>(y) * static_cast<std::size_t>(width) +
                      static_cast<std::size_t>(x)];
    }
};

using Triple = std::array<double, 3>;

// Scalar building blocks. sRGB values are on the [0, 255] scale; linear RGB on
// [0, 1]; XYZ with Yn = 100.
double srgb_decode(double encoded);
double srgb_encode(double linear);
Triple linear_to_xyz(const Triple& rgb) noexcept;
Triple xyz_to_linear(const Triple& xyz) noexcept;
LabPixel xyz_to_lab(const Triple& xyz, const WhitePoint& white = kD65) noexcept;
Triple lab_to_xyz(const LabPixel& lab, const WhitePoint& white = kD65) noexcept;

LabPixel srgb_to_lab(const Triple& srgb) noexcept;
/// Inverse of srgb_to_lab, gamut-clipped in linear RGB. Result on [0, 255].
Triple lab_to_srgb(const LabPixel& lab) noexcept;

LabImage srgb_to_lab(const ImageBuffer& image);
ImageBuffer lab_to_srgb(const LabImage& image);

} // namespace sensorfx::color
