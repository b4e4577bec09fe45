#pragma once

#include <Eigen/Dense>

#include "cebeam/beam.hpp"

namespace cebeam {

/**
 * Bipartite (polarization vs. space) Schmidt data of a beam:
 *
 *   U(rho, z) = sqrt(lambda1) u1 v1(rho, z) + sqrt(lambda2) u2 v2(rho, z)
 *
 * with lambda1 >= lambda2 >= 0, orthonormal Jones vectors u_i and orthonormal
 * spatial modes v_i. When the spatial rank is 1, lambda2 = 0, u2 is the Jones
 * vector orthogonal to u1 and v2 is the zero field.
 */
struct SchmidtResult {
    double lambda1 = 0.0;
    double lambda2 = 0.0;
    double k = 1.0;  // Schmidt number (lambda1+lambda2)^2 / (lambda1^2+lambda2^2)
    std::array<JonesVector, 2> pol_modes;
    std::array<SampledScalarField, 2> spatial_modes;
    double residual = 0.0;  // relative L2 error of the two-term reconstruction
};

/**
 * Hermitian positive-semidefinite matrix of pairwise spatial scalar products
 * of the beam's term modes, (m_s, m_t)_S. Entries with a closed form
 * (Hermite-Gauss pairs, displaced Gaussians, rect geometry) are exact;
 * the rest are evaluated by quadrature on the grid.
 */
Eigen::MatrixXcd spatial_gram(const VectorBeam& beam, const FieldGrid& grid);

/// Gram matrix with every entry evaluated by quadrature on the grid.
Eigen::MatrixXcd spatial_gram_quadrature(const VectorBeam& beam, const FieldGrid& grid);

/// Weights and mode combinations produced by the Gram-based factorization.
struct SchmidtWeights {
    double lambda1 = 0.0;
    double lambda2 = 0.0;
    std::array<JonesVector, 2> pol_modes;
    Eigen::MatrixXcd spatial_combos;  // T x 2; v_i = sum_t combos(t, i) m_t
    int rank = 0;                     // spatial rank after eigenvalue truncation
};

/**
 * Schmidt weights of a beam given its 2 x T polarization-coefficient matrix
 * (rows H, V) and the T x T spatial Gram of its modes. Factors the Gram
 * (eigenvalues below 1e-12 x trace are truncated; an eigenvalue below
 * -1e-10 x trace raises NumericalFailureError), maps the coefficients into
 * the induced orthonormal spatial basis and takes the singular value
 * decomposition there; the weights are the squared singular values.
 */
SchmidtWeights schmidt_from_gram(const Eigen::MatrixXcd& coeffs, const Eigen::MatrixXcd& gram);

/**
 * Full pipeline: samples the term modes on the grid, forms the quadrature
 * Gram, factors it, and assembles sampled Schmidt modes plus the
 * reconstruction residual. Using the quadrature Gram keeps the weights
 * consistent with every other grid-level quantity (total intensity,
 * covariance spectrum) independent of how well the grid resolves the modes.
 */
SchmidtResult schmidt_decompose(const VectorBeam& beam, const FieldGrid& grid);

/// K = (l1 + l2)^2 / (l1^2 + l2^2); scale-invariant, in [1, 2].
double schmidt_number(double lambda1, double lambda2);

/**
 * Closed-form Schmidt number of the polarization-position beam with
 * separation a: K = 2 / (1 + I(a)^2), I(a) = exp(-2 a^2 / w0^2).
 */
double k_of_separation(double a, double w0 = 1.0);

/// 2 x T matrix M with M(p, t) = coeff_t * pol_t[p]; columns follow term order.
Eigen::MatrixXcd polarization_coefficients(const VectorBeam& beam);

}  // namespace cebeam
