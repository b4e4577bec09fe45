#include "cebeam/schmidt.hpp"

#include <cmath>

namespace cebeam {

Eigen::MatrixXcd polarization_coefficients(const VectorBeam& beam) {
    const int t = static_cast<int>(beam.terms.size());
    Eigen::MatrixXcd m(2, t);
    for (int i = 0; i < t; ++i) {
        m(0, i) = beam.terms[i].coeff * beam.terms[i].pol.h;
        m(1, i) = beam.terms[i].coeff * beam.terms[i].pol.v;
    }
    return m;
}

namespace {

std::vector<SampledScalarField> sample_terms(const VectorBeam& beam, const FieldGrid& grid) {
    std::vector<SampledScalarField> fields;
    fields.reserve(beam.terms.size());
    for (const BeamTerm& t : beam.terms) fields.push_back(sample_mode(t.mode, grid));
    return fields;
}

Eigen::MatrixXcd gram_of_samples(const std::vector<SampledScalarField>& fields) {
    const int t = static_cast<int>(fields.size());
    Eigen::MatrixXcd g(t, t);
    for (int s = 0; s < t; ++s) {
        for (int u = s; u < t; ++u) {
            g(s, u) = inner_product_sampled(fields[s], fields[u]);
            g(u, s) = std::conj(g(s, u));
        }
    }
    return g;
}

}  // namespace

Eigen::MatrixXcd spatial_gram_quadrature(const VectorBeam& beam, const FieldGrid& grid) {
    return gram_of_samples(sample_terms(beam, grid));
}

Eigen::MatrixXcd spatial_gram(const VectorBeam& beam, const FieldGrid& grid) {
    const int t = static_cast<int>(beam.terms.size());
    Eigen::MatrixXcd g(t, t);
    std::vector<SampledScalarField> cache(t);
    auto sampled = [&](int i) -> const SampledScalarField& {
        if (cache[i].values.empty()) cache[i] = sample_mode(beam.terms[i].mode, grid);
        return cache[i];
    };
    for (int s = 0; s < t; ++s) {
        for (int u = s; u < t; ++u) {
            if (auto exact = analytic_overlap(beam.terms[s].mode, beam.terms[u].mode)) {
                g(s, u) = *exact;
            } else {
                g(s, u) = inner_product_sampled(sampled(s), sampled(u));
            }
            g(u, s) = std::conj(g(s, u));
        }
    }
    return g;
}

double schmidt_number(double lambda1, double lambda2) {
    if (lambda1 < 0.0 || lambda2 < 0.0) {
        throw InvalidParameterError("Schmidt weights must be non-negative");
    }
    const double sum = lambda1 + lambda2;
    const double sq = lambda1 * lambda1 + lambda2 * lambda2;
    if (sq == 0.0) {
        throw DegenerateBeamError("Schmidt number undefined for a zero-intensity beam");
    }
    return sum * sum / sq;
}

double k_of_separation(double a, double w0) {
    const double overlap = overlap_gaussian_analytic(a, w0);
    return 2.0 / (1.0 + overlap * overlap);
}

SchmidtWeights schmidt_from_gram(const Eigen::MatrixXcd& coeffs, const Eigen::MatrixXcd& gram) {
    if (coeffs.rows() != 2 || coeffs.cols() != gram.rows() || gram.rows() != gram.cols()) {
        throw InvalidParameterError("coefficient matrix must be 2 x T with a T x T Gram");
    }
    const double trace = gram.real().trace();
    if (!(trace > 0.0)) {
        throw DegenerateBeamError("spatial Gram has zero trace");
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(gram);
    if (es.info() != Eigen::Success) {
        throw NumericalFailureError("Gram eigendecomposition failed");
    }
    const Eigen::VectorXd evals = es.eigenvalues();
    if (evals.minCoeff() < -1e-10 * trace) {
        throw NumericalFailureError("spatial Gram is not positive semidefinite");
    }

    // Keep eigenpairs above the truncation threshold; they define an
    // orthonormal spatial basis phi_k = sum_t V(t,k) g_k^{-1/2} m_t.
    std::vector<int> keep;
    for (int i = 0; i < evals.size(); ++i) {
        if (evals(i) > 1e-12 * trace) keep.push_back(i);
    }
    if (keep.empty()) {
        throw DegenerateBeamError("spatial Gram truncates to rank zero");
    }
    const int r = static_cast<int>(keep.size());
    const int t = static_cast<int>(gram.rows());
    Eigen::MatrixXcd v(t, r);
    Eigen::VectorXd g(r);
    for (int k = 0; k < r; ++k) {
        v.col(k) = es.eigenvectors().col(keep[k]);
        g(k) = evals(keep[k]);
    }

    // In that basis the beam's component matrix is C = M conj(V) diag(sqrt g),
    // and the Schmidt weights are the squared singular values of C.
    const Eigen::MatrixXcd c =
        coeffs * v.conjugate() * g.cwiseSqrt().asDiagonal();
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(c, Eigen::ComputeFullU | Eigen::ComputeThinV);

    SchmidtWeights out;
    const auto& sigma = svd.singularValues();
    out.lambda1 = sigma(0) * sigma(0);
    out.lambda2 = (sigma.size() > 1) ? sigma(1) * sigma(1) : 0.0;
    out.rank = r;

    Eigen::Matrix2cd pol = svd.matrixU();
    // v_i = sum_k conj(Q(k,i)) phi_k = sum_t W(t,i) m_t,
    // W = V diag(g^{-1/2}) conj(Q).
    Eigen::MatrixXcd w =
        v * g.cwiseSqrt().cwiseInverse().asDiagonal() * svd.matrixV().conjugate();
    if (w.cols() < 2) {
        w.conservativeResize(Eigen::NoChange, 2);
        w.col(1).setZero();
    }

    // Degenerate weights leave the pairing ambiguous; put the Jones vector
    // with the larger |H| component first. The weights travel with their
    // columns, so ordering may then be off by at most the degeneracy width.
    if (std::abs(out.lambda1 - out.lambda2) <= 1e-10 * (out.lambda1 + out.lambda2) &&
        std::abs(pol(0, 1)) > std::abs(pol(0, 0))) {
        pol.col(0).swap(pol.col(1));
        w.col(0).swap(w.col(1));
        std::swap(out.lambda1, out.lambda2);
    }

    // Phase convention: rotate each pair so the polarization mode's first
    // non-negligible component (H, else V) is real positive; the spatial
    // partner absorbs the conjugate phase, keeping the reconstruction exact.
    for (int i = 0; i < 2; ++i) {
        const Complex lead = (std::abs(pol(0, i)) > 1e-12) ? pol(0, i) : pol(1, i);
        if (std::abs(lead) == 0.0) continue;
        const Complex phase = lead / std::abs(lead);
        pol.col(i) *= std::conj(phase);
        if (i < w.cols()) w.col(i) *= phase;
    }

    out.pol_modes[0] = {pol(0, 0), pol(1, 0)};
    out.pol_modes[1] = {pol(0, 1), pol(1, 1)};
    out.spatial_combos = w;
    return out;
}

SchmidtResult schmidt_decompose(const VectorBeam& beam, const FieldGrid& grid) {
    const std::vector<SampledScalarField> fields = sample_terms(beam, grid);
    const Eigen::MatrixXcd gram = gram_of_samples(fields);
    const Eigen::MatrixXcd coeffs = polarization_coefficients(beam);
    const SchmidtWeights weights = schmidt_from_gram(coeffs, gram);

    SchmidtResult result;
    result.lambda1 = weights.lambda1;
    result.lambda2 = weights.lambda2;
    result.k = schmidt_number(weights.lambda1, weights.lambda2);
    result.pol_modes = weights.pol_modes;

    const int t = static_cast<int>(fields.size());
    for (int i = 0; i < 2; ++i) {
        SampledScalarField mode(grid);
        for (int s = 0; s < t; ++s) {
            const Complex w = weights.spatial_combos(s, i);
            if (w == Complex{0.0, 0.0}) continue;
            for (std::size_t k = 0; k < mode.values.size(); ++k) {
                mode.values[k] += w * fields[s].values[k];
            }
        }
        result.spatial_modes[i] = std::move(mode);
    }

    // Residual of the two-term re-synthesis against the directly sampled beam.
    SampledVectorField reference = sample_beam(beam, grid);
    SampledVectorField difference = reference;
    const double s1 = std::sqrt(result.lambda1);
    const double s2 = std::sqrt(result.lambda2);
    for (std::size_t k = 0; k < difference.ex.size(); ++k) {
        const Complex r1 = s1 * result.spatial_modes[0].values[k];
        const Complex r2 = s2 * result.spatial_modes[1].values[k];
        difference.ex[k] -= result.pol_modes[0].h * r1 + result.pol_modes[1].h * r2;
        difference.ey[k] -= result.pol_modes[0].v * r1 + result.pol_modes[1].v * r2;
    }
    const double ref_norm = l2_norm(reference);
    if (ref_norm == 0.0) {
        throw DegenerateBeamError("beam carries no intensity on the grid");
    }
    result.residual = l2_norm(difference) / ref_norm;
    return result;
}

}  // namespace cebeam
