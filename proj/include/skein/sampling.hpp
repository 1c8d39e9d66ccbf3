#pragma once

#include <cstdint>
#include <random>

#include "skein/lattice.hpp"

namespace skein {

// Seeded generator for the randomized suites. Avoids std::uniform_int_distribution
// so that a seed reproduces the same stream on every standard library.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    std::uint64_t raw() { return rng_(); }

    // uniform in [lo, hi]
    int range(int lo, int hi) {
        return lo + static_cast<int>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    Vec2 nonzero_vec(int bound) {
        while (true) {
            Vec2 v{range(-bound, bound), range(-bound, bound)};
            if (!is_zero(v)) return v;
        }
    }

    Vec2 first_quadrant_vec(int bound) {
        while (true) {
            Vec2 v{range(0, bound), range(0, bound)};
            if (!is_zero(v)) return v;
        }
    }

    Vec2 primitive_first_quadrant_vec(int bound) {
        while (true) {
            Vec2 v = first_quadrant_vec(bound);
            if (primitive_decompose(v).multiple == 1) return v;
        }
    }

private:
    std::mt19937_64 rng_;
};

// A first-quadrant partner y of the primitive vector x with det2(x,y) = target,
// target in {+1,-1}. Solvable in the quadrant iff x.i >= 1 (for +1) resp.
// x.j >= 1 (for -1); found via the extended gcd, shifted along x into the cone.
Vec2 unimodular_partner(Vec2 x, int target);

}  // namespace skein
