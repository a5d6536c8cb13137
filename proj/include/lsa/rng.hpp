#pragma once

// Deterministic PRNG (splitmix64) so seeded runs are reproducible across
// platforms; std:: distributions are implementation-defined and unusable
// for golden tests.

#include <cstdint>

#include "lsa/matrix.hpp"
#include "lsa/scalar.hpp"

namespace lsa {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [lo, hi]
    long range(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    Rational rational(long bound = 6) {
        long num = range(-bound, bound);
        long den = range(1, bound);
        return make_rational(num, den);
    }

    GaussRational gauss_rational(long bound = 6) {
        return GaussRational(rational(bound), rational(bound));
    }

    GaussRational nonzero_gauss_rational(long bound = 6) {
        for (;;) {
            GaussRational v = gauss_rational(bound);
            if (!v.is_zero()) return v;
        }
    }

    Matrix<GaussRational> invertible_matrix(std::size_t n, long bound = 3) {
        for (;;) {
            Matrix<GaussRational> m(n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) m(i, j) = GaussRational(range(-bound, bound));
            if (rank(m) == n) return m;
        }
    }

private:
    std::uint64_t state_;
};

}  // namespace lsa
