#include "cebeam/grid.hpp"

#include <cmath>
#include <string>

namespace cebeam {

FieldGrid make_grid_rect(int nx, int ny, double x_min, double x_max, double y_min, double y_max,
                         double z) {
    if (nx < 2 || ny < 2) {
        throw InvalidParameterError("grid needs at least 2 samples per axis, got nx=" +
                                    std::to_string(nx) + " ny=" + std::to_string(ny));
    }
    if (!(x_max > x_min) || !(y_max > y_min)) {
        throw InvalidParameterError("grid bounds must satisfy x_max > x_min and y_max > y_min");
    }
    if (!std::isfinite(x_min) || !std::isfinite(x_max) || !std::isfinite(y_min) ||
        !std::isfinite(y_max) || !std::isfinite(z)) {
        throw InvalidParameterError("grid bounds must be finite");
    }
    return FieldGrid{nx, ny, x_min, x_max, y_min, y_max, z};
}

FieldGrid make_grid(int nx, int ny, double extent, double z) {
    if (!(extent > 0.0)) {
        throw InvalidParameterError("grid extent must be positive, got " + std::to_string(extent));
    }
    return make_grid_rect(nx, ny, -extent, extent, -extent, extent, z);
}

namespace {

inline double endpoint_weight(int i, int n) { return (i == 0 || i == n - 1) ? 0.5 : 1.0; }

}  // namespace

Complex integrate(const SampledScalarField& field) {
    const FieldGrid& g = field.grid;
    Complex total = 0.0;
    for (int iy = 0; iy < g.ny; ++iy) {
        const double wy = endpoint_weight(iy, g.ny);
        Complex row = 0.0;
        const Complex* v = field.values.data() + g.index(0, iy);
        for (int ix = 0; ix < g.nx; ++ix) {
            row += endpoint_weight(ix, g.nx) * v[ix];
        }
        total += wy * row;
    }
    return total * (g.dx() * g.dy());
}

Complex inner_product_sampled(const SampledScalarField& a, const SampledScalarField& b) {
    if (a.grid != b.grid) {
        throw IncompatibleGridError("inner product requires both fields on the same grid");
    }
    const FieldGrid& g = a.grid;
    Complex total = 0.0;
    for (int iy = 0; iy < g.ny; ++iy) {
        const double wy = endpoint_weight(iy, g.ny);
        Complex row = 0.0;
        const Complex* va = a.values.data() + g.index(0, iy);
        const Complex* vb = b.values.data() + g.index(0, iy);
        for (int ix = 0; ix < g.nx; ++ix) {
            row += endpoint_weight(ix, g.nx) * std::conj(va[ix]) * vb[ix];
        }
        total += wy * row;
    }
    return total * (g.dx() * g.dy());
}

double l2_norm(const SampledScalarField& field) {
    const FieldGrid& g = field.grid;
    double total = 0.0;
    for (int iy = 0; iy < g.ny; ++iy) {
        const double wy = endpoint_weight(iy, g.ny);
        double row = 0.0;
        const Complex* v = field.values.data() + g.index(0, iy);
        for (int ix = 0; ix < g.nx; ++ix) {
            row += endpoint_weight(ix, g.nx) * std::norm(v[ix]);
        }
        total += wy * row;
    }
    return std::sqrt(total * (g.dx() * g.dy()));
}

double l2_norm(const SampledVectorField& field) {
    const FieldGrid& g = field.grid;
    double total = 0.0;
    for (int iy = 0; iy < g.ny; ++iy) {
        const double wy = endpoint_weight(iy, g.ny);
        double row = 0.0;
        const Complex* vx = field.ex.data() + g.index(0, iy);
        const Complex* vy = field.ey.data() + g.index(0, iy);
        for (int ix = 0; ix < g.nx; ++ix) {
            row += endpoint_weight(ix, g.nx) * (std::norm(vx[ix]) + std::norm(vy[ix]));
        }
        total += wy * row;
    }
    return std::sqrt(total * (g.dx() * g.dy()));
}

}  // namespace cebeam
