// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <omp.h>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "sensorfx/color_space.hpp"
#include "sensorfx/dataset_io.hpp"
#include "sensorfx/effects.hpp"
#include "sensorfx/sampling.hpp"
#include "test_support.hpp"

using namespace sensorfx;
namespace ts = sensorfx::fixtures;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* format, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof(buf), format, args...);
    return buf;
}

// Exposure: dS = 0 reproduces the clamped input within 1e-3 on 1000 cards,
// output is monotone in dS at every pixel, total runtime under a minute.
Outcome exposure_round_trip() {
    const auto start = Clock::now();
    constexpr double kTol = 1e-3;
    const std::vector<double> shifts{-3.0, -1.5, -0.5, 0.0, 0.25, 1.0, 2.0, 4.0};
    double worst = 0.0;
    std::size_t monotone_violations = 0;
    std::size_t pixels = 0;
    for (int card = 0; card < 1000; ++card) {
        const ImageBuffer img = card % 2 == 0 ? ts::random_image(32, 24, 5000 + card)
                                              : ts::scene_card(32, 24, 5000 + card);
        const double contrast = 0.25 + 0.25 * (card % 10);
        const ImageBuffer same = re_expose(img, ExposureParams{0.0, contrast});
        for (std::size_t i = 0; i < img.samples().size(); ++i) {
            const double expected = std::clamp(img.samples()[i], 0.1f, 254.9f);
            worst = std::max(worst, std::abs(same.samples()[i] - expected));
        }
        ImageBuffer previous;
        for (double ds : shifts) {
            ImageBuffer out = re_expose(img, ExposureParams{ds, contrast});
            if (!previous.empty()) {
                for (std::size_t i = 0; i < out.samples().size(); ++i) {
                    monotone_violations += out.samples()[i] < previous.samples()[i];
                }
            }
            previous = std::move(out);
        }
        pixels += img.samples().size();
    }
    const double elapsed = seconds_since(start);
    return {worst <= kTol && monotone_violations == 0 && elapsed < 60.0,
            fmt("max |f(f^-1(I)) - clamp(I)| = %.2e (tol 1e-3), monotonicity violations %zu over "
                "%zu samples x %zu shifts, %.1f s (limit 60 s)",
                worst, monotone_violations, pixels, shifts.size(), elapsed)};
}

// Color: 100k random triples round-trip within 0.51; grays have |a|,|b| <= 1e-4.
Outcome color_round_trip() {
    std::mt19937_64 rng(2018);
    double worst = 0.0;
    for (int i = 0; i < 100000; ++i) {
        const color::Triple p{double(rng() % 256), double(rng() % 256), double(rng() % 256)};
        const color::Triple q = color::lab_to_srgb(color::srgb_to_lab(p));
        for (int c = 0; c < 3; ++c) {
            worst = std::max(worst, std::abs(p[c] - q[c]));
        }
    }
    double worst_ab = 0.0;
    for (int v = 0; v <= 255; ++v) {
        const color::LabPixel lab = color::srgb_to_lab(color::Triple{double(v), double(v), double(v)});
        worst_ab = std::max({worst_ab, std::abs(lab.a), std::abs(lab.b)});
    }
    return {worst <= 0.51 && worst_ab <= 1e-4,
            fmt("max round-trip error %.3e (tol 0.51), max gray |a|,|b| %.2e (tol 1e-4)", worst,
                worst_ab)};
}

struct LineFit {
    double slope;
    double intercept;
};

// Least squares line through (x, y) with per-point weights w.
LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y,
                 const std::vector<double>& w) {
    double sw = 0, sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sw += w[i];
        sx += w[i] * x[i];
        sy += w[i] * y[i];
        sxx += w[i] * x[i] * x[i];
        sxy += w[i] * x[i] * y[i];
    }
    const double slope = (sw * sxy - sx * sy) / (sw * sxx - sx * sx);
    return {slope, (sy - slope * sx) / sw};
}

// Noise: regression of site variance on intensity recovers slope a and
// intercept b^2 within 10% for (a, b) in {(2, 4), (4, 8)}. The standard error
// of a sample variance is proportional to the variance, so points are
// weighted by 1/var^2. The unweighted fit is printed alongside.
Outcome noise_statistics() {
    const auto start = Clock::now();
    const std::vector<double> levels{32, 64, 128, 192};
    bool ok = true;
    std::string detail;
    for (auto [a, b] : {std::pair{2.0, 4.0}, std::pair{4.0, 8.0}}) {
        std::vector<double> variances, weights;
        for (double v : levels) {
            const Plane flat(256, 256, static_cast<float>(v));
            const Plane noisy = add_mosaic_noise(flat, NoiseParams{a, b}, 0xC0FFEE + std::uint64_t(v));
            double mean = 0;
            for (float s : noisy.samples) {
                mean += s;
            }
            mean /= noisy.samples.size();
            double var = 0;
            for (float s : noisy.samples) {
                var += (s - mean) * (s - mean);
            }
            var /= noisy.samples.size() - 1;
            variances.push_back(var);
            weights.push_back(1.0 / (var * var));
        }
        const LineFit wls = fit_line(levels, variances, weights);
        const LineFit ols = fit_line(levels, variances, std::vector<double>(levels.size(), 1.0));
        const bool pass = std::abs(wls.slope - a) <= 0.1 * a &&
                          std::abs(wls.intercept - b * b) <= 0.1 * b * b;
        ok = ok && pass;
        detail += fmt("(a=%g,b=%g): slope %.3f, intercept %.2f (b^2=%g) [unweighted %.3f, %.2f]; ",
                      a, b, wls.slope, wls.intercept, b * b, ols.slope, ols.intercept);
    }
    const double elapsed = seconds_since(start);
    ok = ok && elapsed < 60.0;
    return {ok, detail + fmt("%.1f s (limit 60 s)", elapsed)};
}

// Warp: integer translations equal the index-shift oracle; identity is a no-op.
Outcome warp_correctness() {
    std::mt19937_64 rng(77);
    std::size_t mismatches = 0;
    std::size_t cases = 0;
    for (int trial = 0; trial < 50; ++trial) {
        const int w = 16 + static_cast<int>(rng() % 48);
        const int h = 16 + static_cast<int>(rng() % 48);
        const ImageBuffer img = ts::random_image(w, h, rng());
        ChromAbParams p;
        const int bound = std::min(w, h) / 4;
        Translation* ts_[3] = {&p.red, &p.green, &p.blue};
        for (Translation* t : ts_) {
            t->x = static_cast<int>(rng() % (2 * bound + 1)) - bound;
            t->y = static_cast<int>(rng() % (2 * bound + 1)) - bound;
        }
        const ImageBuffer out = chromatic_aberration(img, p);
        for (int c = 0; c < 3; ++c) {
            for (int y = 0; y < h; ++y) {
                for (int x = 0; x < w; ++x) {
                    const int sx = std::clamp(x - static_cast<int>(ts_[c]->x), 0, w - 1);
                    const int sy = std::clamp(y - static_cast<int>(ts_[c]->y), 0, h - 1);
                    mismatches += out.at(static_cast<Channel>(c), x, y) !=
                                  img.at(static_cast<Channel>(c), sx, sy);
                }
            }
        }
        mismatches += !(chromatic_aberration(img, ChromAbParams{}) == img);
        ++cases;
    }
    return {mismatches == 0,
            fmt("%zu random integer-translation cases, %zu mismatching samples (tol 0)", cases,
                mismatches)};
}

// Blur: impulse response vs the 2-D Gaussian formula, constants, kernel sum.
Outcome blur_correctness() {
    double impulse_err = 0.0;
    for (double sigma : {0.5, 1.0, 2.0, 3.0}) {
        const int r = static_cast<int>(std::ceil(3 * sigma));
        const int size = 2 * r + 15;
        const int mid = size / 2;
        ImageBuffer img(size, size, 0.0f);
        img.at(Channel::Green, mid, mid) = 1.0f;
        const ImageBuffer out = gaussian_blur(img, BlurParams{sigma});
        double total = 0.0;
        for (int y = -r; y <= r; ++y) {
            for (int x = -r; x <= r; ++x) {
                total += std::exp(-(x * x + y * y) / (2 * sigma * sigma)) /
                         (2 * M_PI * sigma * sigma);
            }
        }
        for (int y = 0; y < size; ++y) {
            for (int x = 0; x < size; ++x) {
                const int dx = x - mid, dy = y - mid;
                const double expected =
                    std::abs(dx) <= r && std::abs(dy) <= r
                        ? std::exp(-(dx * dx + dy * dy) / (2 * sigma * sigma)) /
                              (2 * M_PI * sigma * sigma) / total
                        : 0.0;
                impulse_err = std::max(impulse_err, std::abs(out.at(Channel::Green, x, y) - expected));
            }
        }
    }
    double constant_err = 0.0;
    for (float v : {0.0f, 17.5f, 128.0f, 255.0f}) {
        const ImageBuffer img(61, 37, v);
        for (double sigma : {0.7, 1.5, 3.0}) {
            constant_err = std::max(constant_err, ts::max_abs_diff(gaussian_blur(img, BlurParams{sigma}), img));
        }
    }
    double sum_err = 0.0;
    for (double sigma = 0.05; sigma <= 10.0; sigma += 0.05) {
        double sum = 0.0;
        for (double t : gaussian_kernel(sigma)) {
            sum += t;
        }
        sum_err = std::max(sum_err, std::abs(sum - 1.0));
    }
    return {impulse_err <= 1e-6 && constant_err <= 1e-3 && sum_err <= 1e-12,
            fmt("impulse max err %.2e (tol 1e-6), constant max err %.2e (tol 1e-3), kernel sum "
                "err %.2e (tol 1e-12)",
                impulse_err, constant_err, sum_err)};
}

// Mosaic/demosaic on 50 random 8x8 images: native sites exact, all sites
// equal to the brute-force neighbour average.
Outcome mosaic_demosaic() {
    std::size_t native_mismatch = 0, oracle_mismatch = 0;
    for (int trial = 0; trial < 50; ++trial) {
        const ImageBuffer img = ts::random_image(8, 8, 900 + trial);
        const Plane m = mosaic_gbrg(img);
        const ImageBuffer out = demosaic_bilinear(m);
        for (int y = 0; y < 8; ++y) {
            for (int x = 0; x < 8; ++x) {
                const Channel native = bayer_channel(x, y);
                native_mismatch += out.at(native, x, y) != img.at(native, x, y);
                for (int c = 0; c < 3; ++c) {
                    const auto ch = static_cast<Channel>(c);
                    if (ch == native) {
                        continue;
                    }
                    double sum = 0;
                    int n = 0;
                    for (int dy = -1; dy <= 1; ++dy) {
                        for (int dx = -1; dx <= 1; ++dx) {
                            const int sx = x + dx, sy = y + dy;
                            if ((dx || dy) && sx >= 0 && sy >= 0 && sx < 8 && sy < 8 &&
                                bayer_channel(sx, sy) == ch) {
                                sum += m.at(sx, sy);
                                ++n;
                            }
                        }
                    }
                    oracle_mismatch += out.at(ch, x, y) != static_cast<float>(sum / n);
                }
            }
        }
    }
    return {native_mismatch == 0 && oracle_mismatch == 0,
            fmt("50 random 8x8 images: native-site mismatches %zu, oracle mismatches %zu (tol 0)",
                native_mismatch, oracle_mismatch)};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::map<std::string, std::string> tree(const fs::path& root) {
    std::map<std::string, std::string> files;
    for (const auto& e : fs::recursive_directory_iterator(root)) {
        if (e.is_regular_file()) {
            files[fs::relative(e.path(), root).generic_string()] = slurp(e.path());
        }
    }
    return files;
}

// Batch on a 20-image fixture with jobs 1, 4, 8: byte-identical trees and
// manifests; every manifest line replays to its output bit-for-bit.
Outcome end_to_end_determinism() {
    const fs::path root = ts::scratch_dir("acceptance_batch");
    const fs::path input = root / "images";
    const fs::path labels = root / "labels";
    for (int i = 0; i < 20; ++i) {
        const std::string sub = i < 10 ? "0001" : "0002";
        fs::create_directories(input / sub);
        fs::create_directories(labels / sub);
        char name[32];
        std::snprintf(name, sizeof(name), "%06d", i);
        save_image(ts::scene_card(96, 40, 100 + i), input / sub / (std::string(name) + ".png"));
        std::ofstream(labels / sub / (std::string(name) + ".txt"), std::ios::binary)
            << "Car 0.00 0 1.5 " << i << " 10 40 30 1.5 1.6 3.9 1 1 20 1.5\n";
    }

    std::vector<std::map<std::string, std::string>> trees;
    std::vector<std::string> manifests;
    bool all_ok = true;
    for (int jobs : {1, 4, 8}) {
        JobSpec spec;
        spec.input_dir = input;
        spec.output_dir = root / ("out_j" + std::to_string(jobs));
        spec.labels_dir = labels;
        spec.global_seed = 20180921;
        spec.augs_per_image = 2;
        spec.jobs = jobs;
        spec.manifest_path = root / ("manifest_j" + std::to_string(jobs) + ".jsonl");
        std::ostringstream out, err;
        all_ok = all_ok && cli::cmd_batch(spec, out, err) == cli::kOk;
        trees.push_back(tree(spec.output_dir));
        manifests.push_back(slurp(*spec.manifest_path));
    }
    const bool identical = trees[0] == trees[1] && trees[0] == trees[2] &&
                           manifests[0] == manifests[1] && manifests[0] == manifests[2];

    std::size_t replayed = 0, replay_mismatch = 0;
    for (const auto& r : read_manifest(root / "manifest_j1.jsonl")) {
        const ImageBuffer replay = quantized(augment(load_image(input / r.source), r.params));
        replay_mismatch += !(replay == load_image(root / "out_j1" / r.output));
        ++replayed;
    }
    std::size_t label_mismatch = 0;
    for (const auto& [name, bytes] : trees[0]) {
        if (name.ends_with(".txt")) {
            const std::string src = name.substr(0, name.find("_aug")) + ".txt";
            label_mismatch += bytes != slurp(labels / src);
        }
    }
    fs::remove_all(root);
    return {all_ok && identical && replayed == 40 && replay_mismatch == 0 && label_mismatch == 0,
            fmt("jobs {1,4,8}: trees %s (%zu files), manifests %s; replayed %zu records, %zu "
                "mismatches; label copy mismatches %zu",
                identical ? "identical" : "DIFFER", trees[0].size(),
                manifests[0] == manifests[2] ? "identical" : "DIFFER", replayed, replay_mismatch,
                label_mismatch)};
}

// Soft target: full-pipeline augmentations per second at 1242x375 on 8
// workers. Reported, never failed.
Outcome throughput() {
    const int images = 16;
    std::vector<ImageBuffer> inputs;
    std::vector<AugmentationParams> params;
    ParamRanges always_on;
    always_on.blur.sigma = {3.0, 3.0};
    always_on.noise.poisson_scale = {2.0, 4.0};
    always_on.noise.gaussian_sigma = {2.0, 8.0};
    for (int i = 0; i < images; ++i) {
        inputs.push_back(ts::scene_card(1242, 375, i));
        params.push_back(sample_params(always_on, 1000 + i));
    }
    std::vector<ImageBuffer> outputs(images);
    const auto start = Clock::now();
#pragma omp parallel for num_threads(8) schedule(dynamic, 1)
    for (int i = 0; i < images; ++i) {
        outputs[i] = augment(inputs[i], params[i]);
    }
    const double elapsed = seconds_since(start);
    const double rate = images / elapsed;
    return {true, fmt("%.1f augmentations/s at 1242x375, 8 workers on %d hardware threads "
                      "(soft target 30/s%s)",
                      rate, omp_get_num_procs(), rate >= 30.0 ? ", met" : ", not met; reported only")};
}

// Default-config draws keep per-channel means within 40 levels of the source
// and never saturate more than 30% of pixels.
Outcome visual_plausibility() {
    const ParamRanges defaults;
    double worst_shift = 0.0;
    double worst_saturation = 0.0;
    const int draws = 100;
    for (int i = 0; i < draws; ++i) {
        const ImageBuffer src = ts::scene_card(621, 188, 3000 + i);
        const AugmentationParams p = sample_params(defaults, derive_seed({0, item_key("card", i)}));
        const ImageBuffer out = quantized(augment(src, p));
        for (int c = 0; c < 3; ++c) {
            double in_mean = 0, out_mean = 0;
            for (float v : src.plane(c)) {
                in_mean += v;
            }
            for (float v : out.plane(c)) {
                out_mean += v;
            }
            worst_shift = std::max(worst_shift, std::abs(out_mean - in_mean) / src.pixel_count());
        }
        std::size_t saturated = 0;
        for (std::size_t k = 0; k < out.pixel_count(); ++k) {
            bool any = false;
            for (int c = 0; c < 3; ++c) {
                const float v = out.plane(c)[k];
                any = any || v == 0.0f || v == 255.0f;
            }
            saturated += any;
        }
        worst_saturation = std::max(worst_saturation, double(saturated) / out.pixel_count());
    }
    return {worst_shift <= 40.0 && worst_saturation <= 0.30,
            fmt("%d default draws: max per-channel mean shift %.2f (limit 40), max saturated "
                "pixel fraction %.4f (limit 0.30)",
                draws, worst_shift, worst_saturation)};
}

} // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"exposure round trip", exposure_round_trip},
        {"color round trip", color_round_trip},
        {"noise statistics", noise_statistics},
        {"warp correctness", warp_correctness},
        {"blur correctness", blur_correctness},
        {"mosaic/demosaic", mosaic_demosaic},
        {"end-to-end determinism", end_to_end_determinism},
        {"throughput (soft)", throughput},
        {"visual plausibility", visual_plausibility},
    };
    int failures = 0;
    for (const auto& [name, run] : criteria) {
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failures += !o.pass;
        std::printf("[%s] %s: %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
                criteria.size());
    return failures == 0 ? 0 : 1;
}
