#pragma once

#include <Eigen/Dense>

#include "cebeam/beam.hpp"

namespace cebeam {

/**
 * Pointwise polarization coherence density in the {e_H, e_V} basis: at each
 * node the 2x2 outer product of the Jones field with its own conjugate,
 *
 *   J(rho, z) = [ |E_H|^2     E_H E_V* ]
 *               [ E_V E_H*    |E_V|^2  ]
 *
 * Each entry matrix is Hermitian positive-semidefinite with trace equal to
 * the local intensity.
 */
struct CoherenceDensity {
    FieldGrid grid;
    std::vector<Eigen::Matrix2cd> entries;  // row-major, y outer

    [[nodiscard]] const Eigen::Matrix2cd& at(int ix, int iy) const {
        return entries[grid.index(ix, iy)];
    }
};

/// Integrated 2x2 polarization covariance matrix J (Hermitian PSD).
struct CovarianceMatrix {
    Eigen::Matrix2cd j = Eigen::Matrix2cd::Zero();
};

CoherenceDensity coherence_density(const VectorBeam& beam, const FieldGrid& grid);

/// Entrywise trapezoidal quadrature of the density over the grid.
CovarianceMatrix covariance_matrix(const CoherenceDensity& density);

/// sqrt(1 - 4 det J / (tr J)^2), in [0, 1]. 0 for J proportional to the
/// identity (completely unpolarized), 1 for rank-1 J (fully polarized).
double degree_of_polarization(const CovarianceMatrix& covariance);

/// Total off-diagonal L1 mass of the density, integral of |J_HV| d^2 rho.
/// Vanishes where orthogonally polarized components never overlap.
double offdiagonal_l1_mass(const CoherenceDensity& density);

enum class Party { polarization, x, y };

/**
 * Single-party reduced 2x2 matrix of a tripartite tensor: contraction of the
 * tensor with its own conjugate over the other two indices. Hermitian PSD
 * with trace equal to the squared tensor norm.
 */
Eigen::Matrix2cd reduced_party_matrix(const TripartiteTensor& tensor, Party party);

}  // namespace cebeam
