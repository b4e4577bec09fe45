#pragma once

#include <optional>
#include <string>

#include "cebeam/beam.hpp"

namespace cebeam {

/**
 * Everything needed to build one catalog beam and its analysis grid.
 * Defaults: w0 = 1, nx = ny = 512, z = 0; when extent is not set it falls
 * back to 8x the beam's largest transverse length scale (8 for the plain
 * unit-waist families).
 */
struct BeamConfig {
    BeamFamily family = BeamFamily::radial;
    double w0 = 1.0;
    double a = 1.0;                 // pp / fourfold separation
    double b = 0.5;                 // fourfold spot width
    double theta = 0.0;             // NOON phase
    int order = 1;                  // NOON N
    CoeffMatrix coeffs = {{{Complex{1.0}, Complex{1.0}}, {Complex{1.0}, Complex{1.0}}}};
    bool has_coeffs = false;        // explicit A given (defaults depend on family)
    bool allow_overlap = false;
    int nx = 512, ny = 512;
    std::optional<double> extent;
    double z = 0.0;
};

/// Parses a family name ("pp", "fourfold", "ps", "radial", "ghz", "w", "noon").
BeamFamily parse_family(const std::string& name);

/// Parses a JSON config document on top of the given defaults; keys absent
/// from the document keep their base values, unknown keys are rejected.
BeamConfig parse_config_json(const std::string& text, BeamConfig base = {});

/// Reads and parses a JSON config file.
BeamConfig load_config_file(const std::string& path, BeamConfig base = {});

/// Builds the configured beam via the catalog constructors.
VectorBeam make_beam(const BeamConfig& config);

/// The analysis grid for a configured beam (resolves the default extent).
FieldGrid make_config_grid(const BeamConfig& config, const VectorBeam& beam);

}  // namespace cebeam
