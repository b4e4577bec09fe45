#include "cebeam/coherence.hpp"

#include <cmath>

namespace cebeam {

CoherenceDensity coherence_density(const VectorBeam& beam, const FieldGrid& grid) {
    const SampledVectorField field = sample_beam(beam, grid);
    CoherenceDensity density{grid, {}};
    density.entries.resize(grid.size());
    for (std::size_t k = 0; k < density.entries.size(); ++k) {
        const Complex eh = field.ex[k];
        const Complex ev = field.ey[k];
        Eigen::Matrix2cd& j = density.entries[k];
        j(0, 0) = std::norm(eh);
        j(0, 1) = eh * std::conj(ev);
        j(1, 0) = std::conj(j(0, 1));
        j(1, 1) = std::norm(ev);
    }
    return density;
}

namespace {

inline double endpoint_weight(int i, int n) { return (i == 0 || i == n - 1) ? 0.5 : 1.0; }

}  // namespace

CovarianceMatrix covariance_matrix(const CoherenceDensity& density) {
    const FieldGrid& g = density.grid;
    Eigen::Matrix2cd total = Eigen::Matrix2cd::Zero();
    for (int iy = 0; iy < g.ny; ++iy) {
        const double wy = endpoint_weight(iy, g.ny);
        Eigen::Matrix2cd row = Eigen::Matrix2cd::Zero();
        for (int ix = 0; ix < g.nx; ++ix) {
            row += endpoint_weight(ix, g.nx) * density.entries[g.index(ix, iy)];
        }
        total += wy * row;
    }
    return CovarianceMatrix{total * (g.dx() * g.dy())};
}

double degree_of_polarization(const CovarianceMatrix& covariance) {
    const double trace = covariance.j.real().trace();
    if (!(trace > 0.0)) {
        throw DegenerateBeamError("degree of polarization undefined for zero-trace covariance");
    }
    const double det = covariance.j.determinant().real();
    return std::sqrt(std::max(0.0, 1.0 - 4.0 * det / (trace * trace)));
}

double offdiagonal_l1_mass(const CoherenceDensity& density) {
    const FieldGrid& g = density.grid;
    double total = 0.0;
    for (int iy = 0; iy < g.ny; ++iy) {
        const double wy = endpoint_weight(iy, g.ny);
        double row = 0.0;
        for (int ix = 0; ix < g.nx; ++ix) {
            row += endpoint_weight(ix, g.nx) * std::abs(density.entries[g.index(ix, iy)](0, 1));
        }
        total += wy * row;
    }
    return total * (g.dx() * g.dy());
}

Eigen::Matrix2cd reduced_party_matrix(const TripartiteTensor& tensor, Party party) {
    Eigen::Matrix2cd reduced = Eigen::Matrix2cd::Zero();
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            for (int s = 0; s < 2; ++s) {
                for (int t = 0; t < 2; ++t) {
                    switch (party) {
                        case Party::polarization:
                            reduced(a, b) += tensor.c[a][s][t] * std::conj(tensor.c[b][s][t]);
                            break;
                        case Party::x:
                            reduced(a, b) += tensor.c[s][a][t] * std::conj(tensor.c[s][b][t]);
                            break;
                        case Party::y:
                            reduced(a, b) += tensor.c[s][t][a] * std::conj(tensor.c[s][t][b]);
                            break;
                    }
                }
            }
        }
    }
    return reduced;
}

}  // namespace cebeam
