#include "cebeam/modes.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

namespace cebeam {

namespace {

constexpr double kPi = std::numbers::pi;
const std::complex<double> kI{0.0, 1.0};

void require_positive_waist(double w0) {
    if (!(w0 > 0.0) || !std::isfinite(w0)) {
        throw InvalidParameterError("waist must be positive, got " + std::to_string(w0));
    }
}

}  // namespace

GaussianFundamental::GaussianFundamental(double waist) : w0(waist) {
    require_positive_waist(w0);
}

HermiteGauss1D::HermiteGauss1D(int order, double waist) : n(order), w0(waist) {
    if (n < 0) throw InvalidParameterError("Hermite-Gauss order must be non-negative");
    require_positive_waist(w0);
}

HermiteGauss2D::HermiteGauss2D(int order_x, int order_y, double waist)
    : n(order_x), m(order_y), w0(waist) {
    if (n < 0 || m < 0) throw InvalidParameterError("Hermite-Gauss orders must be non-negative");
    require_positive_waist(w0);
}

RectMode::RectMode(int row, int col, double half_separation, double width, bool overlap_ok)
    : i(row), j(col), a(half_separation), b(width), allow_overlap(overlap_ok) {
    if ((i != 0 && i != 1) || (j != 0 && j != 1)) {
        throw InvalidParameterError("rect quadrant selectors must be 0 or 1");
    }
    if (!(a > 0.0) || !(b > 0.0)) {
        throw InvalidParameterError("rect geometry requires a > 0 and b > 0");
    }
    if (!(b < 2.0 * a) && !allow_overlap) {
        throw InvalidGeometryError("rect spots overlap: width b=" + std::to_string(b) +
                                   " >= 2a=" + std::to_string(2.0 * a) +
                                   " (set allow_overlap to accept)");
    }
}

ScalarMode shifted(ScalarMode base, double dx, double dy) {
    if (!std::isfinite(dx) || !std::isfinite(dy)) {
        throw InvalidParameterError("shift must be finite");
    }
    return ShiftedMode{std::make_shared<const ScalarMode>(std::move(base)), dx, dy};
}

std::complex<double> eval_gaussian(const GaussianFundamental& g, double x, double y, double z) {
    const double L = g.rayleigh();
    const std::complex<double> q{z, -L};
    return std::sqrt(kWavenumber * L / kPi) / q * std::exp(kI * (0.5 * kWavenumber) * (x * x + y * y) / q);
}

std::complex<double> eval_hg1d(const HermiteGauss1D& u, double x, double z) {
    const double L = rayleigh_range(u.w0);
    const double zL = z * z + L * L;
    const double w = u.w0 * std::sqrt(1.0 + (z * z) / (L * L));
    const double gouy = std::atan(z / L);
    // amplitude: (2/pi)^{1/4} / sqrt(2^n n! w) * H_n(sqrt(2) x / w) * exp(-x^2/w^2)
    const double norm =
        std::pow(2.0 / kPi, 0.25) *
        std::exp(-0.5 * (u.n * std::numbers::ln2 + std::lgamma(u.n + 1.0)) - 0.5 * std::log(w));
    const double amp = norm * std::hermite(static_cast<unsigned>(u.n), std::numbers::sqrt2 * x / w) *
                       std::exp(-x * x / (w * w));
    // phase: wavefront curvature k x^2 z / (2 (z^2+L^2)) and Gouy term. The
    // constant pi/4 per factor makes u_0(x,z) u_0(y,z) coincide with the
    // closed-form fundamental Gaussian including its phase.
    const double phase = 0.5 * kWavenumber * x * x * z / zL + kPi / 4.0 - (u.n + 0.5) * gouy;
    return amp * std::complex<double>{std::cos(phase), std::sin(phase)};
}

std::complex<double> eval_hg2d(const HermiteGauss2D& u, double x, double y, double z) {
    return eval_hg1d(HermiteGauss1D{u.n, u.w0}, x, z) * eval_hg1d(HermiteGauss1D{u.m, u.w0}, y, z);
}

namespace {

// rect with the exact boundary convention: 1 inside, 1/2 on the edge, 0 outside.
double rect_function(double s) {
    const double m = std::abs(s);
    if (m < 0.5) return 1.0;
    if (m == 0.5) return 0.5;
    return 0.0;
}

}  // namespace

double eval_rect(const RectMode& r, double x, double y, double /*z*/) {
    const double sign_i = (r.i == 0) ? 1.0 : -1.0;
    const double sign_j = (r.j == 0) ? 1.0 : -1.0;
    return rect_function((y - sign_i * r.a) / r.b) * rect_function((x + sign_j * r.a) / r.b);
}

std::complex<double> eval_mode(const ScalarMode& mode, double x, double y, double z) {
    return std::visit(
        [&](const auto& m) -> std::complex<double> {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, GaussianFundamental>) {
                return eval_gaussian(m, x, y, z);
            } else if constexpr (std::is_same_v<T, HermiteGauss2D>) {
                return eval_hg2d(m, x, y, z);
            } else if constexpr (std::is_same_v<T, RectMode>) {
                return eval_rect(m, x, y, z);
            } else {
                return eval_mode(*m.base, x - m.dx, y - m.dy, z);
            }
        },
        mode);
}

double overlap_gaussian_analytic(double a, double w0) {
    require_positive_waist(w0);
    if (a < 0.0) throw InvalidParameterError("separation must be non-negative");
    return std::exp(-2.0 * a * a / (w0 * w0));
}

namespace {

// All catalog modes factor into x and y profiles; sampling evaluates the two
// 1D factor arrays and takes their outer product. (x0, y0) is the origin of
// the local frame, accumulated through shifts.
struct FactorSampler {
    const FieldGrid& grid;
    double x0 = 0.0, y0 = 0.0;

    SampledScalarField operator()(const GaussianFundamental& g) const {
        // u_0(x) u_0(y) equals the closed-form Gaussian exactly.
        const HermiteGauss1D u0{0, g.w0};
        return outer([&](double x) { return eval_hg1d(u0, x, grid.z); },
                     [&](double y) { return eval_hg1d(u0, y, grid.z); });
    }
    SampledScalarField operator()(const HermiteGauss2D& u) const {
        const HermiteGauss1D un{u.n, u.w0}, um{u.m, u.w0};
        return outer([&](double x) { return eval_hg1d(un, x, grid.z); },
                     [&](double y) { return eval_hg1d(um, y, grid.z); });
    }
    SampledScalarField operator()(const RectMode& r) const {
        const double sign_i = (r.i == 0) ? 1.0 : -1.0;
        const double sign_j = (r.j == 0) ? 1.0 : -1.0;
        return outer([&](double x) { return rect_function((x + sign_j * r.a) / r.b); },
                     [&](double y) { return rect_function((y - sign_i * r.a) / r.b); });
    }
    SampledScalarField operator()(const ShiftedMode& s) const {
        FactorSampler inner{grid, x0 + s.dx, y0 + s.dy};
        return std::visit(inner, *s.base);
    }

    template <typename FX, typename FY>
    SampledScalarField outer(FX&& fx, FY&& fy) const {
        SampledScalarField out(grid);
        std::vector<std::complex<double>> col(grid.nx);
        for (int ix = 0; ix < grid.nx; ++ix) col[ix] = fx(grid.x(ix) - x0);
        for (int iy = 0; iy < grid.ny; ++iy) {
            const std::complex<double> fy_val = fy(grid.y(iy) - y0);
            std::complex<double>* row = out.values.data() + grid.index(0, iy);
            for (int ix = 0; ix < grid.nx; ++ix) row[ix] = col[ix] * fy_val;
        }
        return out;
    }
};

}  // namespace

SampledScalarField sample_mode(const ScalarMode& mode, const FieldGrid& grid) {
    return std::visit(FactorSampler{grid}, mode);
}

namespace {

// Structural view of a mode for closed-form overlaps: an optionally shifted
// Gaussian, a Hermite-Gauss mode, or a rect spot.
struct FlatMode {
    enum class Kind { gaussian, hg, rect, other } kind = Kind::other;
    double w0 = 0.0;
    int n = 0, m = 0;
    double dx = 0.0, dy = 0.0;  // accumulated shift
    const RectMode* rect = nullptr;
};

FlatMode flatten(const ScalarMode& mode, double dx = 0.0, double dy = 0.0) {
    return std::visit(
        [&](const auto& m) -> FlatMode {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, GaussianFundamental>) {
                return {FlatMode::Kind::gaussian, m.w0, 0, 0, dx, dy, nullptr};
            } else if constexpr (std::is_same_v<T, HermiteGauss2D>) {
                return {FlatMode::Kind::hg, m.w0, m.n, m.m, dx, dy, nullptr};
            } else if constexpr (std::is_same_v<T, RectMode>) {
                return {FlatMode::Kind::rect, 0.0, 0, 0, dx, dy, &m};
            } else {
                return flatten(*m.base, dx + m.dx, dy + m.dy);
            }
        },
        mode);
}

double interval_overlap(double c1, double b1, double c2, double b2) {
    const double lo = std::max(c1 - 0.5 * b1, c2 - 0.5 * b2);
    const double hi = std::min(c1 + 0.5 * b1, c2 + 0.5 * b2);
    return std::max(hi - lo, 0.0);
}

}  // namespace

std::optional<std::complex<double>> analytic_overlap(const ScalarMode& m1, const ScalarMode& m2) {
    const FlatMode a = flatten(m1);
    const FlatMode b = flatten(m2);

    // Displaced fundamental Gaussians of one waist: real z-independent overlap.
    if (a.kind == FlatMode::Kind::gaussian && b.kind == FlatMode::Kind::gaussian &&
        a.w0 == b.w0) {
        const double ddx = a.dx - b.dx, ddy = a.dy - b.dy;
        return std::exp(-(ddx * ddx + ddy * ddy) / (2.0 * a.w0 * a.w0));
    }

    // Unshifted Hermite-Gauss family of one waist (the Gaussian is U_00).
    const bool a_hg_like =
        (a.kind == FlatMode::Kind::hg || a.kind == FlatMode::Kind::gaussian) && a.dx == 0.0 &&
        a.dy == 0.0;
    const bool b_hg_like =
        (b.kind == FlatMode::Kind::hg || b.kind == FlatMode::Kind::gaussian) && b.dx == 0.0 &&
        b.dy == 0.0;
    if (a_hg_like && b_hg_like && a.w0 == b.w0) {
        return (a.n == b.n && a.m == b.m) ? 1.0 : 0.0;
    }

    // Rect spots: overlap is the intersection area (boundary values have
    // measure zero), provided neither spot is displaced further.
    if (a.kind == FlatMode::Kind::rect && b.kind == FlatMode::Kind::rect) {
        const RectMode& ra = *a.rect;
        const RectMode& rb = *b.rect;
        const double ox =
            interval_overlap(ra.center_x() + a.dx, ra.b, rb.center_x() + b.dx, rb.b);
        const double oy =
            interval_overlap(ra.center_y() + a.dy, ra.b, rb.center_y() + b.dy, rb.b);
        return ox * oy;
    }

    return std::nullopt;
}

double mode_length_scale(const ScalarMode& mode) {
    return std::visit(
        [](const auto& m) -> double {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, GaussianFundamental>) {
                return m.w0;
            } else if constexpr (std::is_same_v<T, HermiteGauss2D>) {
                return m.w0;
            } else if constexpr (std::is_same_v<T, RectMode>) {
                return m.a + 0.5 * m.b;
            } else {
                return std::hypot(m.dx, m.dy) + mode_length_scale(*m.base);
            }
        },
        mode);
}

}  // namespace cebeam
