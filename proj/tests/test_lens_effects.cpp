#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "sensorfx/effects.hpp"
#include "sensorfx/error.hpp"
#include "sensorfx/reference.hpp"
#include "test_support.hpp"

using namespace sensorfx;

// --- chromatic aberration --------------------------------------------------

TEST(ChromaticAberration, IdentityIsBitExact) {
    const ImageBuffer img = fixtures::random_image(31, 17, 1);
    EXPECT_EQ(chromatic_aberration(img, ChromAbParams{}), img);
}

TEST(ChromaticAberration, RedShiftByOneColumnDuplicatesEdge) {
    const ImageBuffer img = fixtures::random_image(12, 9, 2);
    ChromAbParams p;
    p.red = {1.0, 0.0};
    const ImageBuffer out = chromatic_aberration(img, p);
    for (int y = 0; y < img.height(); ++y) {
        for (int x = 0; x < img.width(); ++x) {
            EXPECT_EQ(out.at(Channel::Red, x, y), img.at(Channel::Red, std::max(x - 1, 0), y));
            EXPECT_EQ(out.at(Channel::Green, x, y), img.at(Channel::Green, x, y));
            EXPECT_EQ(out.at(Channel::Blue, x, y), img.at(Channel::Blue, x, y));
        }
    }
}

TEST(ChromaticAberration, IntegerTranslationsMatchIndexShiftOracle) {
    const ImageBuffer img = fixtures::random_image(16, 12, 3);
    ChromAbParams p;
    p.red = {-2.0, 1.0};
    p.green = {0.0, -3.0};
    p.blue = {3.0, 2.0};
    const ImageBuffer out = chromatic_aberration(img, p);
    const Translation shifts[3] = {p.red, p.green, p.blue};
    for (int c = 0; c < 3; ++c) {
        const auto ch = static_cast<Channel>(c);
        const int dx = static_cast<int>(shifts[c].x);
        const int dy = static_cast<int>(shifts[c].y);
        for (int y = 0; y < img.height(); ++y) {
            for (int x = 0; x < img.width(); ++x) {
                const int sx = std::clamp(x - dx, 0, img.width() - 1);
                const int sy = std::clamp(y - dy, 0, img.height() - 1);
                ASSERT_EQ(out.at(ch, x, y), img.at(ch, sx, sy)) << c << " " << x << "," << y;
            }
        }
    }
}

TEST(ChromaticAberration, GreenScaleKeepsCenterFixed) {
    const ImageBuffer img = fixtures::random_image(15, 11, 4);
    ChromAbParams p;
    p.scale = 1.5;
    const ImageBuffer out = chromatic_aberration(img, p);
    EXPECT_EQ(out.at(Channel::Green, 7, 5), img.at(Channel::Green, 7, 5));
    // Red and blue are not scaled.
    EXPECT_EQ(out.plane(Channel::Red)[0], img.plane(Channel::Red)[0]);
}

TEST(ChromaticAberration, MagnificationSpreadsAwayFromCenter) {
    // A vertical line one column right of center moves further right.
    ImageBuffer img(21, 5, 0.0f);
    for (int y = 0; y < 5; ++y) {
        img.at(Channel::Green, 12, y) = 255.0f;
    }
    ChromAbParams p;
    p.scale = 2.0;
    const ImageBuffer out = chromatic_aberration(img, p);
    EXPECT_EQ(out.at(Channel::Green, 14, 2), 255.0f);
    EXPECT_EQ(out.at(Channel::Green, 12, 2), 0.0f);
    EXPECT_FLOAT_EQ(out.at(Channel::Green, 13, 2), 127.5f);
}

TEST(ChromaticAberration, RejectsInvalidParameters) {
    const ImageBuffer img(16, 16, 10.0f);
    ChromAbParams p;
    p.scale = 0.0;
    EXPECT_THROW(chromatic_aberration(img, p), InvalidArgument);
    p.scale = -1.0;
    EXPECT_THROW(chromatic_aberration(img, p), InvalidArgument);
    p.scale = std::nan("");
    EXPECT_THROW(chromatic_aberration(img, p), InvalidArgument);
    p = {};
    p.blue = {4.5, 0.0};  // bound is 16 / 4 = 4
    EXPECT_THROW(chromatic_aberration(img, p), InvalidArgument);
    p.blue = {4.0, std::numeric_limits<double>::infinity()};
    EXPECT_THROW(chromatic_aberration(img, p), InvalidArgument);
}

TEST(ChromaticAberration, RejectsDegenerateImage) {
    EXPECT_THROW(chromatic_aberration(ImageBuffer(1, 5), ChromAbParams{}), InvalidArgument);
}

TEST(ChromaticAberration, MatchesSerialReference) {
    const ImageBuffer img = fixtures::random_image(67, 41, 5);
    ChromAbParams p;
    p.scale = 1.0043;
    p.red = {0.7, -1.3};
    p.green = {-0.25, 0.4};
    p.blue = {1.9, 1.1};
    EXPECT_EQ(chromatic_aberration(img, p), reference::chromatic_aberration(img, p));
}

// --- Gaussian blur ---------------------------------------------------------

namespace {

/// Direct evaluation of the 2-D Gaussian over the truncated window,
/// normalized to unit sum.
double gaussian_2d_weight(int dx, int dy, double sigma) {
    const int r = static_cast<int>(std::ceil(3.0 * sigma));
    const auto g = [sigma](int x, int y) {
        return std::exp(-(x * x + y * y) / (2.0 * sigma * sigma)) /
               (2.0 * std::numbers::pi * sigma * sigma);
    };
    double total = 0.0;
    for (int y = -r; y <= r; ++y) {
        for (int x = -r; x <= r; ++x) {
            total += g(x, y);
        }
    }
    return g(dx, dy) / total;
}

double mean(std::span<const float> s) {
    double acc = 0.0;
    for (float v : s) {
        acc += v;
    }
    return acc / static_cast<double>(s.size());
}

} // namespace

TEST(GaussianBlur, ZeroSigmaIsIdentity) {
    const ImageBuffer img = fixtures::random_image(13, 7, 6);
    EXPECT_EQ(gaussian_blur(img, BlurParams{0.0}), img);
}

TEST(GaussianBlur, KernelRadiusAndNormalization) {
    for (double sigma : {0.1, 0.5, 1.0, 1.7, 3.0, 7.25}) {
        const auto taps = gaussian_kernel(sigma);
        EXPECT_EQ(static_cast<int>(taps.size()), 2 * static_cast<int>(std::ceil(3 * sigma)) + 1);
        double sum = 0.0;
        for (double t : taps) {
            sum += t;
        }
        EXPECT_NEAR(sum, 1.0, 1e-12) << sigma;
        for (std::size_t i = 0; i < taps.size() / 2; ++i) {
            EXPECT_EQ(taps[i], taps[taps.size() - 1 - i]);
        }
    }
}

TEST(GaussianBlur, ImpulseResponseMatchesGaussianFormula) {
    ImageBuffer img(21, 21, 0.0f);
    for (int c = 0; c < 3; ++c) {
        img.at(static_cast<Channel>(c), 10, 10) = 1.0f;
    }
    const ImageBuffer out = gaussian_blur(img, BlurParams{1.0});
    for (int c = 0; c < 3; ++c) {
        for (int y = 0; y < 21; ++y) {
            for (int x = 0; x < 21; ++x) {
                const int dx = x - 10;
                const int dy = y - 10;
                const double expected =
                    (std::abs(dx) <= 3 && std::abs(dy) <= 3) ? gaussian_2d_weight(dx, dy, 1.0) : 0.0;
                EXPECT_NEAR(out.at(static_cast<Channel>(c), x, y), expected, 1e-6);
            }
        }
    }
}

TEST(GaussianBlur, ConstantImageIsPreserved) {
    const ImageBuffer img(40, 23, 173.25f);
    for (double sigma : {0.4, 1.0, 2.5, 3.0}) {
        EXPECT_LE(fixtures::max_abs_diff(gaussian_blur(img, BlurParams{sigma}), img), 1e-3);
    }
}

TEST(GaussianBlur, ReflectBoundaryPreservesMean) {
    const ImageBuffer img = fixtures::random_image(37, 29, 7);
    for (double sigma : {0.8, 2.0, 3.0, 20.0}) {
        const ImageBuffer out = gaussian_blur(img, BlurParams{sigma});
        for (int c = 0; c < 3; ++c) {
            EXPECT_NEAR(mean(out.plane(c)), mean(img.plane(c)), 1e-3) << sigma;
        }
    }
}

TEST(GaussianBlur, KernelWiderThanImage) {
    const ImageBuffer img = fixtures::random_image(3, 2, 8);
    const ImageBuffer out = gaussian_blur(img, BlurParams{5.0});
    EXPECT_TRUE(in_range(out));
    for (int c = 0; c < 3; ++c) {
        EXPECT_NEAR(mean(out.plane(c)), mean(img.plane(c)), 1e-3);
    }
}

TEST(GaussianBlur, RejectsBadSigma) {
    const ImageBuffer img(8, 8, 1.0f);
    EXPECT_THROW(gaussian_blur(img, BlurParams{-0.5}), InvalidArgument);
    EXPECT_THROW(gaussian_blur(img, BlurParams{std::nan("")}), InvalidArgument);
    EXPECT_THROW(gaussian_blur(img, BlurParams{std::numeric_limits<double>::infinity()}),
                 InvalidArgument);
}

TEST(GaussianBlur, MatchesSerialReference) {
    const ImageBuffer img = fixtures::random_image(53, 38, 9);
    for (double sigma : {0.3, 1.4, 3.0}) {
        EXPECT_EQ(gaussian_blur(img, BlurParams{sigma}),
                  reference::gaussian_blur(img, BlurParams{sigma}));
    }
}
