#include "cebeam/report.hpp"

#include <nlohmann/json.hpp>

namespace cebeam {

using nlohmann::json;

namespace {

json params_json(const BeamConfig& config, const FieldGrid& grid) {
    json params;
    params["w0"] = config.w0;
    switch (config.family) {
        case BeamFamily::pp:
            params["a"] = config.a;
            break;
        case BeamFamily::fourfold:
            params["a"] = config.a;
            params["b"] = config.b;
            break;
        case BeamFamily::noon:
            params["N"] = config.order;
            params["theta"] = config.theta;
            break;
        default:
            break;
    }
    if (config.family == BeamFamily::fourfold || config.family == BeamFamily::ps) {
        json coeffs = json::array();
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                coeffs.push_back({config.coeffs[i][j].real(), config.coeffs[i][j].imag()});
            }
        }
        params["A"] = coeffs;
    }
    params["nx"] = grid.nx;
    params["ny"] = grid.ny;
    params["extent"] = grid.x_max;
    params["z"] = grid.z;
    return params;
}

}  // namespace

AnalysisReport analyze(const BeamConfig& config, const VectorBeam& beam, const FieldGrid& grid) {
    AnalysisReport report;
    report.family = std::string(family_name(beam.meta.family));
    report.config = config;
    report.grid = grid;

    const SchmidtResult schmidt = schmidt_decompose(beam, grid);
    report.lambda1 = schmidt.lambda1;
    report.lambda2 = schmidt.lambda2;
    report.k = schmidt.k;
    report.residual = schmidt.residual;

    const CovarianceMatrix covariance = covariance_matrix(coherence_density(beam, grid));
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            report.covariance[4 * r + 2 * c] = covariance.j(r, c).real();
            report.covariance[4 * r + 2 * c + 1] = covariance.j(r, c).imag();
        }
    }
    report.dop = degree_of_polarization(covariance);
    report.total_intensity = total_intensity(beam, grid);
    return report;
}

AnalysisReport analyze(const BeamConfig& config) {
    const VectorBeam beam = make_beam(config);
    const FieldGrid grid = make_config_grid(config, beam);
    return analyze(config, beam, grid);
}

std::string report_to_json(const AnalysisReport& report) {
    json doc;
    doc["family"] = report.family;
    doc["params"] = params_json(report.config, report.grid);
    doc["lambda1"] = report.lambda1;
    doc["lambda2"] = report.lambda2;
    doc["K"] = report.k;
    doc["residual"] = report.residual;
    doc["covariance"] = report.covariance;
    doc["dop"] = report.dop;
    doc["total_intensity"] = report.total_intensity;
    return doc.dump(2) + "\n";
}

std::string tripartite_to_json(const BeamConfig& config, const FieldGrid& grid,
                               const TripartiteTensor& tensor) {
    json entries = json::array();
    for (int p = 0; p < 2; ++p) {
        json plane = json::array();
        for (int a = 0; a < 2; ++a) {
            json row = json::array();
            for (int b = 0; b < 2; ++b) {
                row.push_back({tensor.c[p][a][b].real(), tensor.c[p][a][b].imag()});
            }
            plane.push_back(row);
        }
        entries.push_back(plane);
    }
    json doc;
    doc["family"] = std::string(family_name(config.family));
    doc["params"] = params_json(config, grid);
    doc["tensor"] = entries;
    return doc.dump(2) + "\n";
}

}  // namespace cebeam
