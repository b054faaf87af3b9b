#pragma once

#include <cstdint>

#include "kleinian/base.hpp"

namespace kleinian {

// splitmix64: tiny, platform-independent generator so that seeded runs are
// byte-identical everywhere (std:: distributions are not).
class Rng {
  public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next_u64() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    double uniform() {  // [0, 1)
        return double(next_u64() >> 11) * 0x1.0p-53;
    }
    double uniform(double a, double b) { return a + (b - a) * uniform(); }
    Cpx unit_disk() {
        while (true) {
            double x = uniform(-1.0, 1.0), y = uniform(-1.0, 1.0);
            if (x * x + y * y <= 1.0) return {x, y};
        }
    }
    Cpx unit_circle() {
        double t = uniform(0.0, 2.0 * M_PI);
        return {std::cos(t), std::sin(t)};
    }

  private:
    uint64_t state_;
};

}  // namespace kleinian
