#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "cebeam/modes.hpp"

namespace cebeam {

/// Transverse polarization state in the {e_H, e_V} basis.
struct JonesVector {
    Complex h{0.0, 0.0};
    Complex v{0.0, 0.0};
};

inline JonesVector jones_h() { return {1.0, 0.0}; }
inline JonesVector jones_v() { return {0.0, 1.0}; }

/// Polarization scalar product (a, b)_P = conj(a) . b; conjugate-linear in a.
inline Complex pol_inner(const JonesVector& a, const JonesVector& b) {
    return std::conj(a.h) * b.h + std::conj(a.v) * b.v;
}

/// One summand A * pol * mode(rho, z) of a beam.
struct BeamTerm {
    Complex coeff{1.0, 0.0};
    JonesVector pol;
    ScalarMode mode;
};

enum class BeamFamily { custom, pp, fourfold, ps, radial, ghz, w, noon };

std::string_view family_name(BeamFamily family);

/// Constructor parameters retained so reports can echo them.
struct BeamMetadata {
    BeamFamily family = BeamFamily::custom;
    double w0 = 1.0;
    double a = 0.0;
    double b = 0.0;
    double theta = 0.0;
    int order = 0;                       // N for NOON beams
    std::array<Complex, 4> coeffs{};     // A00, A01, A10, A11 where applicable
    bool has_coeffs = false;
};

/**
 * Finite sum of (coefficient x Jones vector x scalar mode) terms. The term
 * list is the source of truth; beams are sampled only for analysis and
 * rendering. Immutable after construction.
 */
struct VectorBeam {
    std::vector<BeamTerm> terms;
    BeamMetadata meta;
};

/// Coefficient matrix A over (first index, second index) as used by the
/// fourfold and polarization-spatial constructors.
using CoeffMatrix = std::array<std::array<Complex, 2>, 2>;

/**
 * Polarization-position beam: e_H U(x, y-a, z) + e_V U(x, y+a, z) with U the
 * fundamental Gaussian of waist w0. The spots sit at y = +a and y = -a.
 */
VectorBeam make_pp_beam(double a, double w0 = 1.0);

/**
 * Position-position beam: four rect spots with one shared polarization (e_H)
 * and complex amplitudes A[i][j], spot (i, j) occupying quadrant
 * (up/down = i, left/right = j). Requires b < 2a unless allow_overlap.
 */
VectorBeam make_fourfold_beam(const CoeffMatrix& A, double a, double b,
                              bool allow_overlap = false);

/**
 * Polarization-spatial beam over first-order Hermite-Gauss modes:
 * A00 e_H U10 + A01 e_H U01 + A10 e_V U10 + A11 e_V U01.
 * Terms with exactly zero amplitude are dropped.
 */
VectorBeam make_ps_beam(const CoeffMatrix& A, double w0 = 1.0);

/// Radially polarized beam e_H U10 + e_V U01 (the ps beam with A = diag(1, 1)).
VectorBeam make_radial_beam(double w0 = 1.0);

/// (1/sqrt(2)) [ e_H U00 + e_V U11 ].
VectorBeam make_ghz_beam(double w0 = 1.0);

/// (1/sqrt(3)) [ e_H U01 + e_H U10 + e_V U00 ].
VectorBeam make_w_beam(double w0 = 1.0);

/// Scalar two-mode superposition (1/sqrt(2)) [ U_N0 + e^{i N theta} U_0N ],
/// carried on e_H.
VectorBeam make_noon_beam(int n, double theta, double w0 = 1.0);

/// Field at one point, as (E_H, E_V).
JonesVector eval_beam(const VectorBeam& beam, double x, double y, double z);

/// Samples both Jones components on the grid at grid.z.
SampledVectorField sample_beam(const VectorBeam& beam, const FieldGrid& grid);

/// Quadrature of |E_H|^2 + |E_V|^2 over the grid.
double total_intensity(const VectorBeam& beam, const FieldGrid& grid);

/// Multiplies every term coefficient by c (c = 0 is rejected).
VectorBeam scale_beam(const VectorBeam& beam, Complex c);

/// 8x the largest transverse length scale among the beam's terms.
double default_extent(const VectorBeam& beam);

/// Square default analysis grid (extent from default_extent) at z.
FieldGrid default_grid(const VectorBeam& beam, int nx = 512, int ny = 512, double z = 0.0);

/**
 * Coefficients of a beam over the rank-2x2x2 product basis
 * {e_H, e_V} x {u_0(x), u_1(x)} x {u_0(y), u_1(y)}:
 *
 *   U(rho, z) = sum c[p][nx][ny] e_p u_nx(x, z) u_ny(y, z)
 */
struct TripartiteTensor {
    std::array<std::array<std::array<Complex, 2>, 2>, 2> c{};
    double w0 = 1.0;

    [[nodiscard]] Complex at(int pol, int order_x, int order_y) const {
        return c[pol][order_x][order_y];
    }

    /// Reconstructs the represented field at one point.
    [[nodiscard]] JonesVector eval(double x, double y, double z) const;
};

/**
 * Exact expansion of a beam whose every spatial mode lies in
 * span{U_nm : n, m in {0, 1}} of one waist. Throws NotRepresentableError
 * otherwise (higher orders, rect or displaced modes, mixed waists).
 */
TripartiteTensor factorize_tripartite(const VectorBeam& beam);

}  // namespace cebeam
