#pragma once

#include <complex>
#include <cstdint>
#include <numbers>
#include <utility>

namespace trineq {

// Counter-based generator: SplitMix64 run in counter mode.
//
//   output(i) = mix64(key + i·0x9E3779B97F4A7C15)
//
// where mix64 is the SplitMix64 finalizer and key is derived from
// (seed, stream). Every draw is a pure function of (seed, stream, counter),
// which is what makes parallel hunts reproducible: each worker owns a
// substream and no state is shared.
//
// Normal variates use Box–Muller, pinned exactly as:
//   u ∈ (0,1]:  u = ((bits >> 11) + 1) · 2⁻⁵³
//   z₀ = √(−2 ln u₁)·cos(2π u₂),  z₁ = √(−2 ln u₁)·sin(2π u₂)
// A complex standard Gaussian is (z₀ + i z₁)/√2, so it has unit variance.
class CounterRng {
  public:
    static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

    explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
        : key_(derive_key(seed, stream)) {}

    static std::uint64_t mix64(std::uint64_t x) {
        x ^= x >> 30;
        x *= 0xBF58476D1CE4E5B9ull;
        x ^= x >> 27;
        x *= 0x94D049BB133111EBull;
        x ^= x >> 31;
        return x;
    }

    std::uint64_t next_u64() { return mix64(key_ + (++counter_) * kGolden); }

    // Uniform on (0, 1]; never returns 0, so log(u) is safe.
    double uniform01() {
        return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    }

    std::pair<double, double> normal_pair() {
        const double u1 = uniform01();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * std::numbers::pi * u2;
        return {r * std::cos(a), r * std::sin(a)};
    }

    // One standard normal. Consumes a full Box–Muller pair and discards the
    // second variate; the draw count stays input-independent.
    double normal() { return normal_pair().first; }

    // Standard complex Gaussian, E|z|² = 1.
    std::complex<double> complex_normal() {
        const auto [x, y] = normal_pair();
        return {x * std::numbers::sqrt2 * 0.5, y * std::numbers::sqrt2 * 0.5};
    }

  private:
    static std::uint64_t derive_key(std::uint64_t seed, std::uint64_t stream) {
        return mix64(mix64(seed + kGolden) ^ mix64(stream * kGolden + 0x632BE59BD9B4E019ull));
    }

    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

} // namespace trineq
