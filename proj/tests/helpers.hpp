#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "tropdual/quadric.hpp"
#include "tropdual/trop_polynomial.hpp"

namespace testing_support {

using namespace tropdual;

/// Conic from (a1..a6): diagonal a1..a3, then (1,2), (1,3), (2,3).
inline QuadricMatrix conic(std::int64_t a1, std::int64_t a2, std::int64_t a3, std::int64_t a4, std::int64_t a5,
                           std::int64_t a6) {
    return QuadricMatrix::from_upper(3, {a1, a4, a5, a2, a6, a3});
}

inline QuadricMatrix conic(const std::vector<TropValue>& a) {
    return QuadricMatrix::from_upper(3, {a[0], a[3], a[4], a[1], a[5], a[2]});
}

/// Same ordering as conic(): diagonal first, upper triangle after.
inline std::vector<TropValue> layout(const TropMatrix& m) {
    std::vector<TropValue> out;
    for (std::size_t i = 0; i < m.size(); ++i) out.push_back(m.at(i, i));
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = i + 1; j < m.size(); ++j) out.push_back(m.at(i, j));
    }
    return out;
}

inline std::vector<TropValue> values(std::initializer_list<std::int64_t> xs) {
    return {xs.begin(), xs.end()};
}

/// Symmetric matrix with integer diagonal in [-10, 10] and off-diagonal
/// distortions ±k/d, k in 1..12, d in {1, 2}. sign > 0 gives all-positive
/// ε, sign < 0 all-negative, 0 a random mix.
inline QuadricMatrix random_quadric(std::mt19937_64& rng, std::size_t n, int sign) {
    std::uniform_int_distribution<int> diag(-10, 10);
    std::uniform_int_distribution<int> mag(1, 12);
    std::uniform_int_distribution<int> den(1, 2);
    std::uniform_int_distribution<int> coin(0, 1);
    std::vector<Rational> d(n);
    for (auto& x : d) x = diag(rng);
    std::vector<TropValue> grid(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        grid[i * n + i] = d[i];
        for (std::size_t j = i + 1; j < n; ++j) {
            int s = sign != 0 ? sign : (coin(rng) ? 1 : -1);
            Rational eps(s * mag(rng), den(rng));
            Rational a = eps + (d[i] + d[j]) * Rational(1, 2);
            grid[i * n + j] = a;
            grid[j * n + i] = a;
        }
    }
    return QuadricMatrix(TropMatrix(n, std::move(grid), true));
}

inline TropMatrix random_matrix(std::mt19937_64& rng, std::size_t n, bool symmetric, int lo = -9, int hi = 9) {
    std::uniform_int_distribution<int> dist(lo, hi);
    std::vector<TropValue> grid(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (symmetric && j < i) {
                grid[i * n + j] = grid[j * n + i];
            } else {
                grid[i * n + j] = Rational(dist(rng), 1 + (dist(rng) & 1));
            }
        }
    }
    return TropMatrix(n, std::move(grid), symmetric);
}

}  // namespace testing_support
