#pragma once

#include <array>
#include <string>

#include "cebeam/coherence.hpp"
#include "cebeam/config.hpp"
#include "cebeam/schmidt.hpp"

namespace cebeam {

/**
 * Flat summary of one beam analysis. Serializes to a JSON object with keys
 * exactly {family, params, lambda1, lambda2, K, residual, covariance, dop,
 * total_intensity}; covariance carries the 2x2 matrix as 8 reals
 * (re, im per entry, row-major).
 */
struct AnalysisReport {
    std::string family;
    BeamConfig config;
    FieldGrid grid;
    double lambda1 = 0.0;
    double lambda2 = 0.0;
    double k = 1.0;
    double residual = 0.0;
    std::array<double, 8> covariance{};
    double dop = 0.0;
    double total_intensity = 0.0;
};

/// Runs the Schmidt and coherence pipelines on one configured beam.
AnalysisReport analyze(const BeamConfig& config);

/// Same, with the beam and grid already built.
AnalysisReport analyze(const BeamConfig& config, const VectorBeam& beam, const FieldGrid& grid);

/// Serializes the report (ends with a newline; key order is stable).
std::string report_to_json(const AnalysisReport& report);

/// Serializes a tripartite tensor as {family, params, tensor} with
/// tensor[p][nx][ny] = [re, im].
std::string tripartite_to_json(const BeamConfig& config, const FieldGrid& grid,
                               const TripartiteTensor& tensor);

}  // namespace cebeam
