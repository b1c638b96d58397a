#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

namespace echoview {

// Counter-derived splitmix64 streams. Every randomized operation in the
// pipeline owns a stream derived from (seed, a, b, c) so results do not
// depend on execution order or thread count. std:: distributions are
// deliberately avoided: their output is implementation-defined.
class Rng {
  public:
    explicit Rng(std::uint64_t state) : state_(state) {}

    static std::uint64_t mix(std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // [0,1) with 53 random bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // a + u*(b-a); returns exactly a when the range is empty.
    double uniform(double a, double b) { return a + uniform() * (b - a); }

    float uniformf(float a, float b) { return static_cast<float>(uniform(a, b)); }

    // Inclusive bounds, Lemire reduction (no modulo bias worth caring about,
    // and bit-for-bit reproducible).
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        const auto wide = static_cast<unsigned __int128>(next()) * span;
        return lo + static_cast<std::int64_t>(wide >> 64);
    }

    // Box-Muller without caching so the draw count per call is fixed.
    double normal() {
        double u1 = uniform();
        double u2 = uniform();
        if (u1 <= 0.0) u1 = 0x1.0p-53;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
    }

  private:
    std::uint64_t state_;
};

inline Rng derive_rng(std::uint64_t seed, std::uint64_t a = 0, std::uint64_t b = 0,
                      std::uint64_t c = 0) {
    std::uint64_t s = Rng::mix(seed);
    s = Rng::mix(s ^ Rng::mix(a));
    s = Rng::mix(s ^ Rng::mix(b));
    s = Rng::mix(s ^ Rng::mix(c));
    return Rng(s);
}

// Fisher-Yates with our own stream (std::shuffle is not reproducible
// across standard libraries).
template <typename V>
void shuffle(V& values, Rng& rng) {
    for (std::size_t i = values.size(); i > 1; --i) {
        const auto j = static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(i) - 1));
        std::swap(values[i - 1], values[j]);
    }
}

}  // namespace echoview
