#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <random>

namespace nmrq {

// Deterministic seeded generator with splittable sub-streams.
//
// Uniform doubles are built from raw 64-bit draws ((x >> 11) * 2^-53) instead
// of std::uniform_real_distribution, whose output is implementation-defined;
// same seed therefore means bit-identical output everywhere.
class SeededRng {
  public:
    explicit SeededRng(std::uint64_t seed)
        : seed_(seed), engine_(mix_u64(seed)) {}

    /// Independent child stream for (seed, stream id) -- the splittable
    /// counter scheme used to fan one config seed out to experiment parts.
    SeededRng child(std::uint64_t stream) const {
        return SeededRng(mix_u64(seed_ ^ (0x9e3779b97f4a7c15ull * (stream + 1))));
    }

    std::uint64_t next_u64() { return engine_(); }

    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Standard normal via Box-Muller on two fresh uniforms.
    double normal() {
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) *
               std::cos(2.0 * 3.14159265358979323846 * u2);
    }

    /// Uniform point on the unit 2-sphere.
    Eigen::Vector3d unit_vector3() {
        const double z = uniform(-1.0, 1.0);
        const double phi = uniform(0.0, 2.0 * 3.14159265358979323846);
        const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        Eigen::Vector3d v(r * std::cos(phi), r * std::sin(phi), z);
        return v / v.norm();
    }

  private:
    // splitmix64 finalizer; decorrelates nearby seeds before seeding mt19937_64
    static std::uint64_t mix_u64(std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ull;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
        return x ^ (x >> 31);
    }

    std::uint64_t seed_ = 0;
    std::mt19937_64 engine_;
};

}  // namespace nmrq
