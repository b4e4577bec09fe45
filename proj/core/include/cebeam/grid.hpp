#pragma once

#include <complex>
#include <vector>

#include "cebeam/errors.hpp"

namespace cebeam {

using Complex = std::complex<double>;

/**
 * Uniform Cartesian sampling window in the transverse plane.
 *
 * Transverse coordinates are measured in units of the reference waist w0 and
 * the longitudinal coordinate z in units of the reference Rayleigh range
 * L = k w0^2 / 2. Samples include both endpoints, so the spacing is
 * (x_max - x_min) / (nx - 1).
 *
 * Storage convention for all sampled fields on a grid is row-major with y as
 * the outer index: node (ix, iy) lives at iy * nx + ix, y ascending.
 */
struct FieldGrid {
    int nx = 0, ny = 0;
    double x_min = 0.0, x_max = 0.0;
    double y_min = 0.0, y_max = 0.0;
    double z = 0.0;

    [[nodiscard]] double dx() const { return (x_max - x_min) / (nx - 1); }
    [[nodiscard]] double dy() const { return (y_max - y_min) / (ny - 1); }
    [[nodiscard]] double x(int ix) const { return x_min + ix * dx(); }
    [[nodiscard]] double y(int iy) const { return y_min + iy * dy(); }
    [[nodiscard]] std::size_t size() const { return static_cast<std::size_t>(nx) * ny; }
    [[nodiscard]] std::size_t index(int ix, int iy) const {
        return static_cast<std::size_t>(iy) * nx + ix;
    }

    friend bool operator==(const FieldGrid&, const FieldGrid&) = default;
};

/// Square symmetric grid [-extent, extent]^2 at longitudinal position z.
FieldGrid make_grid(int nx, int ny, double extent, double z);

/// General rectangular grid; validates counts and bounds.
FieldGrid make_grid_rect(int nx, int ny, double x_min, double x_max, double y_min, double y_max,
                         double z);

/// Complex scalar amplitude sampled on a grid.
struct SampledScalarField {
    FieldGrid grid;
    std::vector<Complex> values;

    SampledScalarField() = default;
    explicit SampledScalarField(const FieldGrid& g) : grid(g), values(g.size()) {}

    [[nodiscard]] Complex& at(int ix, int iy) { return values[grid.index(ix, iy)]; }
    [[nodiscard]] const Complex& at(int ix, int iy) const { return values[grid.index(ix, iy)]; }
};

/// Jones field (H and V components) sampled on a grid.
struct SampledVectorField {
    FieldGrid grid;
    std::vector<Complex> ex, ey;

    SampledVectorField() = default;
    explicit SampledVectorField(const FieldGrid& g) : grid(g), ex(g.size()), ey(g.size()) {}
};

/**
 * Trapezoidal quadrature of the sampled values over the grid rectangle.
 * Accumulation order is fixed (rows, then row sums) so results are
 * bit-stable across runs.
 */
Complex integrate(const SampledScalarField& field);

/**
 * Spatial scalar product (a, b)_S = integral of conj(a) * b over the grid.
 * Conjugate-linear in the first argument. Both fields must share one grid.
 */
Complex inner_product_sampled(const SampledScalarField& a, const SampledScalarField& b);

/// sqrt((f, f)_S); always real non-negative.
double l2_norm(const SampledScalarField& field);

/// L2 norm of a Jones field: sqrt(integral of |ex|^2 + |ey|^2).
double l2_norm(const SampledVectorField& field);

}  // namespace cebeam
