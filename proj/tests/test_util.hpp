#pragma once

#include <cmath>
#include <complex>
#include <random>
#include <utility>

#include "cebeam/beam.hpp"

namespace cebeam::test {

/**
 * Closed-form eigenvalues of the Hermitian matrix [[d00, c], [conj(c), d11]],
 * descending. Independent of any library solver; used as the brute-force
 * oracle for Schmidt weights and covariance spectra.
 */
inline std::pair<double, double> hermitian2_eigenvalues(double d00, double d11, Complex c) {
    const double mean = 0.5 * (d00 + d11);
    const double radius = std::hypot(0.5 * (d00 - d11), std::abs(c));
    return {mean + radius, mean - radius};
}

/// Eigenvalues of M M^dagger for a 2x2 complex matrix M (rows H, V).
inline std::pair<double, double> mmdagger_eigenvalues(const CoeffMatrix& m) {
    const double d00 = std::norm(m[0][0]) + std::norm(m[0][1]);
    const double d11 = std::norm(m[1][0]) + std::norm(m[1][1]);
    const Complex c = m[0][0] * std::conj(m[1][0]) + m[0][1] * std::conj(m[1][1]);
    return hermitian2_eigenvalues(d00, d11, c);
}

/// 1D trapezoid quadrature of f over [lo, hi] with n samples (n >= 2).
template <typename F>
double trapezoid_1d(F&& f, double lo, double hi, int n) {
    const double h = (hi - lo) / (n - 1);
    double sum = 0.5 * (f(lo) + f(hi));
    for (int i = 1; i < n - 1; ++i) sum += f(lo + i * h);
    return sum * h;
}

inline Complex random_complex(std::mt19937& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    return {u(rng), u(rng)};
}

inline CoeffMatrix random_coeffs(std::mt19937& rng) {
    return {{{random_complex(rng), random_complex(rng)},
             {random_complex(rng), random_complex(rng)}}};
}

}  // namespace cebeam::test
