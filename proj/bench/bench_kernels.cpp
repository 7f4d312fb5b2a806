// Serial reference kernels against the OpenMP kernels on a 1242x375 frame.
// Thread count follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include <random>

#include "sensorfx/effects.hpp"
#include "sensorfx/reference.hpp"

namespace {

using namespace sensorfx;

const ImageBuffer& frame() {
    static const ImageBuffer img = [] {
        ImageBuffer out(1242, 375);
        std::mt19937_64 rng(1);
        std::uniform_real_distribution<float> u(0.0f, 255.0f);
        for (float& v : out.samples()) {
            v = u(rng);
        }
        return out;
    }();
    return img;
}

AugmentationParams busy() {
    AugmentationParams p;
    p.chrom_ab = {1.004, {0.7, -0.4}, {0.2, 0.1}, {-1.1, 0.6}};
    p.blur = {2.0};
    p.exposure = {0.2, 0.85};
    p.noise = {3.0, 5.0};
    p.color = {2.0, -1.5, 3.0};
    p.noise_seed = 42;
    return p;
}

template <auto Fn, typename Params>
void run(benchmark::State& state, Params p) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(Fn(frame(), p));
    }
    state.SetItemsProcessed(state.iterations());
}

void BM_Warp(benchmark::State& s) { run<&chromatic_aberration>(s, busy().chrom_ab); }
void BM_WarpSerial(benchmark::State& s) { run<&reference::chromatic_aberration>(s, busy().chrom_ab); }
void BM_Blur(benchmark::State& s) { run<&gaussian_blur>(s, busy().blur); }
void BM_BlurSerial(benchmark::State& s) { run<&reference::gaussian_blur>(s, busy().blur); }
void BM_Exposure(benchmark::State& s) { run<&re_expose>(s, busy().exposure); }
void BM_ExposureSerial(benchmark::State& s) { run<&reference::re_expose>(s, busy().exposure); }
void BM_ColorShift(benchmark::State& s) { run<&color_shift>(s, busy().color); }
void BM_ColorShiftSerial(benchmark::State& s) { run<&reference::color_shift>(s, busy().color); }

void BM_Noise(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(sensor_noise(frame(), busy().noise, 42));
    }
}
void BM_NoiseSerial(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(reference::sensor_noise(frame(), busy().noise, 42));
    }
}

void BM_Augment(benchmark::State& s) { run<&augment>(s, busy()); }
void BM_AugmentSerial(benchmark::State& s) { run<&reference::augment>(s, busy()); }

} // namespace

BENCHMARK(BM_Warp)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WarpSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Blur)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BlurSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Exposure)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExposureSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Noise)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NoiseSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ColorShift)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ColorShiftSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Augment)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AugmentSerial)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
