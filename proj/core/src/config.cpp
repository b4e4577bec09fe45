#include "cebeam/config.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace cebeam {

using nlohmann::json;

BeamFamily parse_family(const std::string& name) {
    if (name == "pp") return BeamFamily::pp;
    if (name == "fourfold") return BeamFamily::fourfold;
    if (name == "ps") return BeamFamily::ps;
    if (name == "radial") return BeamFamily::radial;
    if (name == "ghz") return BeamFamily::ghz;
    if (name == "w") return BeamFamily::w;
    if (name == "noon") return BeamFamily::noon;
    throw InvalidParameterError("unknown beam family '" + name +
                                "' (expected pp, fourfold, ps, radial, ghz, w or noon)");
}

namespace {

Complex parse_coeff(const json& value) {
    if (value.is_number()) return Complex{value.get<double>(), 0.0};
    if (value.is_array() && value.size() == 2 && value[0].is_number() && value[1].is_number()) {
        return Complex{value[0].get<double>(), value[1].get<double>()};
    }
    throw InvalidParameterError("coefficient must be a number or [re, im] pair");
}

}  // namespace

BeamConfig parse_config_json(const std::string& text, BeamConfig base) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InvalidParameterError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw InvalidParameterError("config must be a JSON object");

    BeamConfig config = base;
    for (const auto& [key, value] : doc.items()) {
        if (key == "family") {
            config.family = parse_family(value.get<std::string>());
        } else if (key == "w0") {
            config.w0 = value.get<double>();
        } else if (key == "a") {
            config.a = value.get<double>();
        } else if (key == "b") {
            config.b = value.get<double>();
        } else if (key == "theta") {
            config.theta = value.get<double>();
        } else if (key == "N") {
            config.order = value.get<int>();
        } else if (key == "A") {
            if (!value.is_array() || value.size() != 4) {
                throw InvalidParameterError("A must be an array of 4 coefficients");
            }
            config.coeffs = {{{parse_coeff(value[0]), parse_coeff(value[1])},
                              {parse_coeff(value[2]), parse_coeff(value[3])}}};
            config.has_coeffs = true;
        } else if (key == "allow_overlap") {
            config.allow_overlap = value.get<bool>();
        } else if (key == "nx") {
            config.nx = value.get<int>();
        } else if (key == "ny") {
            config.ny = value.get<int>();
        } else if (key == "extent") {
            config.extent = value.get<double>();
        } else if (key == "z") {
            config.z = value.get<double>();
        } else {
            throw InvalidParameterError("unknown config key '" + key + "'");
        }
    }
    return config;
}

BeamConfig load_config_file(const std::string& path, BeamConfig base) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open config file " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config_json(buffer.str(), base);
}

VectorBeam make_beam(const BeamConfig& config) {
    switch (config.family) {
        case BeamFamily::pp:
            return make_pp_beam(config.a, config.w0);
        case BeamFamily::fourfold:
            return make_fourfold_beam(config.coeffs, config.a, config.b, config.allow_overlap);
        case BeamFamily::ps:
            if (config.has_coeffs) return make_ps_beam(config.coeffs, config.w0);
            return make_ps_beam({{{Complex{1.0}, Complex{0.0}}, {Complex{0.0}, Complex{1.0}}}},
                                config.w0);
        case BeamFamily::radial:
            return make_radial_beam(config.w0);
        case BeamFamily::ghz:
            return make_ghz_beam(config.w0);
        case BeamFamily::w:
            return make_w_beam(config.w0);
        case BeamFamily::noon:
            return make_noon_beam(config.order, config.theta, config.w0);
        case BeamFamily::custom:
            break;
    }
    throw InvalidParameterError("config does not name a constructible beam family");
}

FieldGrid make_config_grid(const BeamConfig& config, const VectorBeam& beam) {
    const double extent = config.extent ? *config.extent : default_extent(beam);
    return make_grid(config.nx, config.ny, extent, config.z);
}

}  // namespace cebeam
