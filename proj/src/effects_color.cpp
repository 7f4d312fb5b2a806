#include <cmath>

#include "sensorfx/color_space.hpp"
#include "sensorfx/effects.hpp"
#include "sensorfx/error.hpp"

namespace sensorfx {

void validate(const ColorShiftParams& p) {
    if (!std::isfinite(p.dL) || !std::isfinite(p.da) || !std::isfinite(p.db)) {
        throw InvalidArgument("color shift offsets must be finite");
    }
}

ImageBuffer color_shift(const ImageBuffer& image, const ColorShiftParams& p) {
    require_processable(image);
    validate(p);

    ImageBuffer out(image.width(), image.height());
    const auto r = image.plane(Channel::Red);
    const auto g = image.plane(Channel::Green);
    const auto b = image.plane(Channel::Blue);
    auto ro = out.plane(Channel::Red);
    auto go = out.plane(Channel::Green);
    auto bo = out.plane(Channel::Blue);
    const auto n = static_cast<std::ptrdiff_t>(image.pixel_count());

#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        color::LabPixel lab = color::srgb_to_lab(color::Triple{r[i], g[i], b[i]});
        lab.L += p.dL;
        lab.a += p.da;
        lab.b += p.db;
        const color::Triple rgb = color::lab_to_srgb(lab);
        ro[i] = static_cast<float>(rgb[0]);
        go[i] = static_cast<float>(rgb[1]);
        bo[i] = static_cast<float>(rgb[2]);
    }
    return out;
}

} // namespace sensorfx
