#pragma once

// Seeded generators for property tests and a few shared helpers.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "weakore/algebra.hpp"
#include "weakore/ore.hpp"

namespace testing_support {

using namespace weakore;

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long long integer(long long lo, long long hi) { return std::uniform_int_distribution<long long>(lo, hi)(rng_); }
    bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

    /// Small rationals with numerators in [-4, 4] and denominators in [1, 3].
    Scalar scalar() { return Scalar(integer(-4, 4), integer(1, 3)); }
    Scalar nonzero_scalar() {
        Scalar s;
        do s = scalar();
        while (s.is_zero());
        return s;
    }

    Vector vector(std::size_t dim, double density = 0.5) {
        std::vector<Vector::Entry> e;
        for (std::size_t i = 0; i < dim; ++i)
            if (coin(density)) e.push_back({i, scalar()});
        return Vector(dim, std::move(e));
    }

    Matrix matrix(std::size_t rows, std::size_t cols, double density = 0.4) {
        std::vector<Matrix::Triplet> t;
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                if (coin(density)) t.push_back({r, c, scalar()});
        return Matrix(rows, cols, std::move(t));
    }

    OrePolynomial polynomial(std::size_t dim, std::size_t max_degree, double density = 0.4) {
        std::vector<Vector> c;
        for (std::size_t i = 0; i <= max_degree; ++i) c.push_back(vector(dim, density));
        return OrePolynomial(dim, std::move(c));
    }

    std::size_t index(std::size_t n) { return static_cast<std::size_t>(integer(0, static_cast<long long>(n) - 1)); }

private:
    std::mt19937_64 rng_;
};

inline Scalar q(long long num, long long den = 1) { return Scalar(num, den); }

}  // namespace testing_support
