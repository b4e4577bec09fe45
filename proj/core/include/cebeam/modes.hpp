#pragma once

#include <memory>
#include <optional>
#include <variant>

#include "cebeam/grid.hpp"

namespace cebeam {

// Dimensionless unit system: transverse lengths in units of the reference
// waist w0, z in units of the reference Rayleigh range L = k w0^2 / 2.
// In these units k = 2 and a beam of waist w has Rayleigh range w^2.
inline constexpr double kWavenumber = 2.0;

/// Rayleigh range of a beam of waist w0, in reference units.
inline double rayleigh_range(double w0) { return w0 * w0; }

/**
 * Fundamental Gaussian beam, normalized so that the transverse intensity
 * integrates to 1 at every z:
 *
 *   U(rho, z) = sqrt(k L / pi) * exp(i k |rho|^2 / (2 (z - i L))) / (z - i L)
 */
struct GaussianFundamental {
    double w0 = 1.0;

    GaussianFundamental() = default;
    explicit GaussianFundamental(double waist);

    [[nodiscard]] double rayleigh() const { return rayleigh_range(w0); }
};

/// 1D Hermite-Gauss factor u_n(x, z); orthonormal over x at every z.
struct HermiteGauss1D {
    int n = 0;
    double w0 = 1.0;

    HermiteGauss1D() = default;
    HermiteGauss1D(int order, double waist);
};

/// Separable TEM_nm mode U_nm(rho, z) = u_n(x, z) u_m(y, z).
struct HermiteGauss2D {
    int n = 0, m = 0;
    double w0 = 1.0;

    HermiteGauss2D() = default;
    HermiteGauss2D(int order_x, int order_y, double waist);
};

/**
 * Square spot with unit height placed in one quadrant:
 *
 *   rect((y - (-1)^i a) / b) * rect((x + (-1)^j a) / b)
 *
 * i selects up (0) / down (1), j selects left (0) / right (1). rect(s) is 1
 * for |s| < 1/2, exactly 1/2 for |s| = 1/2 and 0 otherwise. The profile is
 * defined in the z = 0 plane; evaluation ignores z. Spots of a fourfold
 * arrangement are pairwise disjoint iff b < 2a, which the constructor
 * enforces unless allow_overlap is set.
 */
struct RectMode {
    int i = 0, j = 0;
    double a = 1.0;
    double b = 0.5;
    bool allow_overlap = false;

    RectMode() = default;
    RectMode(int row, int col, double half_separation, double width, bool allow_overlap = false);

    [[nodiscard]] double center_x() const { return -((j == 0) ? 1.0 : -1.0) * a; }
    [[nodiscard]] double center_y() const { return ((i == 0) ? 1.0 : -1.0) * a; }
};

struct ShiftedMode;

using ScalarMode = std::variant<GaussianFundamental, HermiteGauss2D, RectMode, ShiftedMode>;

/// Transverse displacement of another mode: value(x, y, z) = base(x - dx, y - dy, z).
struct ShiftedMode {
    std::shared_ptr<const ScalarMode> base;
    double dx = 0.0;
    double dy = 0.0;
};

/// Wraps a mode in a transverse shift.
ScalarMode shifted(ScalarMode base, double dx, double dy);

std::complex<double> eval_gaussian(const GaussianFundamental& g, double x, double y, double z);
std::complex<double> eval_hg1d(const HermiteGauss1D& u, double x, double z);
std::complex<double> eval_hg2d(const HermiteGauss2D& u, double x, double y, double z);
double eval_rect(const RectMode& r, double x, double y, double z = 0.0);

/// Evaluates any catalog mode at one point.
std::complex<double> eval_mode(const ScalarMode& mode, double x, double y, double z);

/**
 * Closed-form overlap of two fundamental Gaussians displaced by +a and -a
 * along one axis: I(a) = exp(-2 a^2 / w0^2). Independent of z.
 */
double overlap_gaussian_analytic(double a, double w0);

/// Evaluates a mode on every node of the grid at grid.z.
SampledScalarField sample_mode(const ScalarMode& mode, const FieldGrid& grid);

/**
 * Exact spatial scalar product (m1, m2)_S when a closed form exists
 * (Hermite-Gauss pairs of one waist, displaced Gaussians of one waist,
 * rect pairs); nullopt when only quadrature is available.
 */
std::optional<std::complex<double>> analytic_overlap(const ScalarMode& m1, const ScalarMode& m2);

/**
 * Transverse size of the region where the mode carries intensity: waist for
 * Gaussian-type modes, center offset plus half width for rect spots, shift
 * magnitude plus base scale for displaced modes. Used to size default grids.
 */
double mode_length_scale(const ScalarMode& mode);

}  // namespace cebeam
