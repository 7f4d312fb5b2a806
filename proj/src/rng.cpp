#include "sensorfx/rng.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

namespace sensorfx {

namespace {

struct SipState {
    std::uint64_t v0, v1, v2, v3;

    void round() noexcept {
        v0 += v1;
        v1 = std::rotl(v1, 13);
        v1 ^= v0;
        v0 = std::rotl(v0, 32);
        v2 += v3;
        v3 = std::rotl(v3, 16);
        v3 ^= v2;
        v0 += v3;
        v3 = std::rotl(v3, 21);
        v3 ^= v0;
        v2 += v1;
        v1 = std::rotl(v1, 17);
        v1 ^= v2;
        v2 = std::rotl(v2, 32);
    }

    void absorb(std::uint64_t m) noexcept {
        v3 ^= m;
        round();
        round();
        v0 ^= m;
    }
};

std::uint64_t load_le64(const std::uint8_t* p) noexcept {
    std::uint64_t v = 0;
    for (int i = 7; i >= 0; --i) {
        v = (v << 8) | p[i];
    }
    return v;
}

} // namespace

std::uint64_t siphash24(std::uint64_t k0, std::uint64_t k1,
                        std::span<const std::uint8_t> message) {
    SipState s{k0 ^ 0x736f6d6570736575ULL, k1 ^ 0x646f72616e646f6dULL,
               k0 ^ 0x6c7967656e657261ULL, k1 ^ 0x7465646279746573ULL};

    const std::size_t n = message.size();
    const std::size_t whole = n - n % 8;
    for (std::size_t i = 0; i < whole; i += 8) {
        s.absorb(load_le64(message.data() + i));
    }

    std::uint64_t last = static_cast<std::uint64_t>(n & 0xff) << 56;
    for (std::size_t i = whole; i < n; ++i) {
        last |= static_cast<std::uint64_t>(message[i]) << (8 * (i - whole));
    }
    s.absorb(last);

    s.v2 ^= 0xff;
    for (int i = 0; i < 4; ++i) {
        s.round();
    }
    return s.v0 ^ s.v1 ^ s.v2 ^ s.v3;
}

std::uint64_t siphash24(std::uint64_t k0, std::uint64_t k1, std::string_view message) {
    return siphash24(k0, k1,
                     std::span<const std::uint8_t>(
                         reinterpret_cast<const std::uint8_t*>(message.data()), message.size()));
}

double CounterRng::normal() noexcept {
    const double u1 = uniform_open_low();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

double sample_poisson(double mean, CounterRng& rng) noexcept {
    if (mean <= 0.0) {
        return 0.0;
    }
    if (mean >= kPoissonNormalThreshold) {
        return std::max(0.0, mean + std::sqrt(mean) * rng.normal());
    }

    // Sequential search of the CDF.
    const double u = rng.uniform();
    double p = std::exp(-mean);
    double cdf = p;
    int k = 0;
    while (u > cdf && k < 1000) {
        ++k;
        p *= mean / k;
        cdf += p;
    }
    return static_cast<double>(k);
}

} // namespace sensorfx
