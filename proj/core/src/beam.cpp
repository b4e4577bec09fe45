#include "cebeam/beam.hpp"

#include <cmath>
#include <string>

namespace cebeam {

std::string_view family_name(BeamFamily family) {
    switch (family) {
        case BeamFamily::pp: return "pp";
        case BeamFamily::fourfold: return "fourfold";
        case BeamFamily::ps: return "ps";
        case BeamFamily::radial: return "radial";
        case BeamFamily::ghz: return "ghz";
        case BeamFamily::w: return "w";
        case BeamFamily::noon: return "noon";
        case BeamFamily::custom: break;
    }
    return "custom";
}

namespace {

void require_nonempty(const VectorBeam& beam, const char* what) {
    if (beam.terms.empty()) {
        throw DegenerateBeamError(std::string(what) + ": all coefficients vanish");
    }
}

}  // namespace

VectorBeam make_pp_beam(double a, double w0) {
    if (a < 0.0 || !std::isfinite(a)) {
        throw InvalidParameterError("pp beam separation must be non-negative");
    }
    const GaussianFundamental g{w0};
    VectorBeam beam;
    beam.terms.push_back({1.0, jones_h(), shifted(g, 0.0, +a)});
    beam.terms.push_back({1.0, jones_v(), shifted(g, 0.0, -a)});
    beam.meta.family = BeamFamily::pp;
    beam.meta.w0 = w0;
    beam.meta.a = a;
    return beam;
}

VectorBeam make_fourfold_beam(const CoeffMatrix& A, double a, double b, bool allow_overlap) {
    VectorBeam beam;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            if (A[i][j] == Complex{0.0, 0.0}) continue;
            beam.terms.push_back({A[i][j], jones_h(), RectMode{i, j, a, b, allow_overlap}});
        }
    }
    require_nonempty(beam, "fourfold beam");
    beam.meta.family = BeamFamily::fourfold;
    beam.meta.a = a;
    beam.meta.b = b;
    beam.meta.coeffs = {A[0][0], A[0][1], A[1][0], A[1][1]};
    beam.meta.has_coeffs = true;
    return beam;
}

VectorBeam make_ps_beam(const CoeffMatrix& A, double w0) {
    const HermiteGauss2D u10{1, 0, w0};
    const HermiteGauss2D u01{0, 1, w0};
    VectorBeam beam;
    const JonesVector pols[2] = {jones_h(), jones_v()};
    const HermiteGauss2D modes[2] = {u10, u01};
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            if (A[i][j] == Complex{0.0, 0.0}) continue;
            beam.terms.push_back({A[i][j], pols[i], modes[j]});
        }
    }
    require_nonempty(beam, "polarization-spatial beam");
    beam.meta.family = BeamFamily::ps;
    beam.meta.w0 = w0;
    beam.meta.coeffs = {A[0][0], A[0][1], A[1][0], A[1][1]};
    beam.meta.has_coeffs = true;
    return beam;
}

VectorBeam make_radial_beam(double w0) {
    VectorBeam beam = make_ps_beam({{{1.0, 0.0}, {0.0, 1.0}}}, w0);
    beam.meta.family = BeamFamily::radial;
    return beam;
}

VectorBeam make_ghz_beam(double w0) {
    const double c = 1.0 / std::numbers::sqrt2;
    VectorBeam beam;
    beam.terms.push_back({c, jones_h(), HermiteGauss2D{0, 0, w0}});
    beam.terms.push_back({c, jones_v(), HermiteGauss2D{1, 1, w0}});
    beam.meta.family = BeamFamily::ghz;
    beam.meta.w0 = w0;
    return beam;
}

VectorBeam make_w_beam(double w0) {
    const double c = 1.0 / std::sqrt(3.0);
    VectorBeam beam;
    beam.terms.push_back({c, jones_h(), HermiteGauss2D{0, 1, w0}});
    beam.terms.push_back({c, jones_h(), HermiteGauss2D{1, 0, w0}});
    beam.terms.push_back({c, jones_v(), HermiteGauss2D{0, 0, w0}});
    beam.meta.family = BeamFamily::w;
    beam.meta.w0 = w0;
    return beam;
}

VectorBeam make_noon_beam(int n, double theta, double w0) {
    if (n < 1) throw InvalidParameterError("NOON order must be at least 1");
    const double c = 1.0 / std::numbers::sqrt2;
    VectorBeam beam;
    beam.terms.push_back({c, jones_h(), HermiteGauss2D{n, 0, w0}});
    beam.terms.push_back({c * std::polar(1.0, n * theta), jones_h(), HermiteGauss2D{0, n, w0}});
    beam.meta.family = BeamFamily::noon;
    beam.meta.w0 = w0;
    beam.meta.theta = theta;
    beam.meta.order = n;
    return beam;
}

JonesVector eval_beam(const VectorBeam& beam, double x, double y, double z) {
    JonesVector e;
    for (const BeamTerm& t : beam.terms) {
        const Complex amp = t.coeff * eval_mode(t.mode, x, y, z);
        e.h += amp * t.pol.h;
        e.v += amp * t.pol.v;
    }
    return e;
}

SampledVectorField sample_beam(const VectorBeam& beam, const FieldGrid& grid) {
    SampledVectorField out(grid);
    for (const BeamTerm& t : beam.terms) {
        const SampledScalarField mode = sample_mode(t.mode, grid);
        const Complex ch = t.coeff * t.pol.h;
        const Complex cv = t.coeff * t.pol.v;
        for (std::size_t k = 0; k < mode.values.size(); ++k) {
            out.ex[k] += ch * mode.values[k];
            out.ey[k] += cv * mode.values[k];
        }
    }
    return out;
}

double total_intensity(const VectorBeam& beam, const FieldGrid& grid) {
    const double n = l2_norm(sample_beam(beam, grid));
    return n * n;
}

VectorBeam scale_beam(const VectorBeam& beam, Complex c) {
    if (c == Complex{0.0, 0.0}) {
        throw DegenerateBeamError("scaling a beam by zero discards it");
    }
    VectorBeam out = beam;
    for (BeamTerm& t : out.terms) t.coeff *= c;
    return out;
}

double default_extent(const VectorBeam& beam) {
    double scale = 0.0;
    for (const BeamTerm& t : beam.terms) scale = std::max(scale, mode_length_scale(t.mode));
    return 8.0 * std::max(scale, 1e-6);
}

FieldGrid default_grid(const VectorBeam& beam, int nx, int ny, double z) {
    return make_grid(nx, ny, default_extent(beam), z);
}

JonesVector TripartiteTensor::eval(double x, double y, double z) const {
    Complex ux[2], uy[2];
    for (int k = 0; k < 2; ++k) {
        ux[k] = eval_hg1d(HermiteGauss1D{k, w0}, x, z);
        uy[k] = eval_hg1d(HermiteGauss1D{k, w0}, y, z);
    }
    JonesVector e;
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            const Complex spatial = ux[a] * uy[b];
            e.h += c[0][a][b] * spatial;
            e.v += c[1][a][b] * spatial;
        }
    }
    return e;
}

TripartiteTensor factorize_tripartite(const VectorBeam& beam) {
    require_nonempty(beam, "tripartite factorization");
    TripartiteTensor tensor;
    bool have_w0 = false;
    for (const BeamTerm& t : beam.terms) {
        int n = 0, m = 0;
        double w0 = 0.0;
        if (const auto* hg = std::get_if<HermiteGauss2D>(&t.mode)) {
            n = hg->n;
            m = hg->m;
            w0 = hg->w0;
        } else if (const auto* g = std::get_if<GaussianFundamental>(&t.mode)) {
            w0 = g->w0;  // the fundamental Gaussian is U_00
        } else {
            throw NotRepresentableError(
                "tripartite factorization requires unshifted Hermite-Gauss modes");
        }
        if (n > 1 || m > 1) {
            throw NotRepresentableError("mode order exceeds the two-level truncation: U_" +
                                        std::to_string(n) + std::to_string(m));
        }
        if (have_w0 && w0 != tensor.w0) {
            throw NotRepresentableError("tripartite factorization requires a single waist");
        }
        tensor.w0 = w0;
        have_w0 = true;
        tensor.c[0][n][m] += t.coeff * t.pol.h;
        tensor.c[1][n][m] += t.coeff * t.pol.v;
    }
    return tensor;
}

}  // namespace cebeam
