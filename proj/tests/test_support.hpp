#ifndef HTA_TEST_SUPPORT_HPP
#define HTA_TEST_SUPPORT_HPP

#include <cstdint>

#include "hta/algebra.hpp"

namespace hta::testing {

// Deterministic splitmix64; keeps test inputs reproducible across runs
// and platforms.
struct Rng {
    uint64_t state;
    explicit Rng(uint64_t seed) : state(seed) {}
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // uniform in [lo, hi]
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(next() % static_cast<uint64_t>(hi - lo + 1));
    }
};

inline Rational random_rational(Rng& rng, long long max_num = 6, long long max_den = 3) {
    return Rational(Int(rng.range(-max_num, max_num)), Int(rng.range(1, max_den)));
}

inline Rational random_nonzero_rational(Rng& rng, long long max_num = 6, long long max_den = 3) {
    for (;;) {
        Rational r = random_rational(rng, max_num, max_den);
        if (!r.is_zero()) return r;
    }
}

inline Constants2D random_constants(Rng& rng) {
    return Constants2D{random_rational(rng), random_rational(rng), random_rational(rng),
                       random_rational(rng), random_rational(rng), random_rational(rng),
                       random_rational(rng), random_rational(rng)};
}

inline Mat random_invertible_mat2(Rng& rng) {
    for (;;) {
        Mat P(2);
        for (size_t i = 0; i < 2; ++i)
            for (size_t j = 0; j < 2; ++j) P.at(i, j) = random_rational(rng, 3, 2);
        if (!P.det().is_zero()) return P;
    }
}

inline Vec random_vec(Rng& rng, size_t dim) {
    Vec v(dim);
    for (size_t i = 0; i < dim; ++i) v[i] = random_rational(rng);
    return v;
}

}  // namespace hta::testing

#endif
