#include "cli.hpp"

#include <charconv>
#include <cstdlib>
#include <string_view>

#include <CLI11.hpp>

#include "cebeam/io.hpp"
#include "cebeam/report.hpp"

namespace cebeam::cli {

namespace {

Complex parse_complex_flag(const std::string& text) {
    std::string_view s(text);
    double re = 0.0, im = 0.0;
    auto r1 = std::from_chars(s.data(), s.data() + s.size(), re);
    if (r1.ec != std::errc{}) {
        throw InvalidParameterError("expected a number or re,im pair, got '" + text + "'");
    }
    if (r1.ptr != s.data() + s.size()) {
        if (*r1.ptr != ',') {
            throw InvalidParameterError("expected a number or re,im pair, got '" + text + "'");
        }
        const char* rest = r1.ptr + 1;
        auto r2 = std::from_chars(rest, s.data() + s.size(), im);
        if (r2.ec != std::errc{} || r2.ptr != s.data() + s.size()) {
            throw InvalidParameterError("expected a number or re,im pair, got '" + text + "'");
        }
    }
    return {re, im};
}

int env_grid_default() {
    const char* env = std::getenv("CEBEAM_GRID_DEFAULT");
    if (env == nullptr || *env == '\0') return 0;
    int value = 0;
    std::string_view s(env);
    auto res = std::from_chars(s.data(), s.data() + s.size(), value);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size() || value < 2) {
        throw InvalidParameterError(std::string("CEBEAM_GRID_DEFAULT must be an integer >= 2, got '") +
                                    env + "'");
    }
    return value;
}

// One flag set shared by every beam-based subcommand. Flags override values
// from --config, which override the defaults (and CEBEAM_GRID_DEFAULT).
struct BeamOptions {
    std::string config_path;
    std::string family;
    double w0 = 1.0, a = 1.0, b = 0.5, theta = 0.0, extent = 0.0, z = 0.0;
    int order = 1, nx = 0, ny = 0;
    bool allow_overlap = false;
    std::string a00, a01, a10, a11;

    CLI::Option *config_opt{}, *family_opt{}, *w0_opt{}, *a_opt{}, *b_opt{}, *theta_opt{},
        *order_opt{}, *nx_opt{}, *ny_opt{}, *extent_opt{}, *z_opt{}, *overlap_opt{}, *a00_opt{},
        *a01_opt{}, *a10_opt{}, *a11_opt{};

    void attach(CLI::App& cmd) {
        config_opt = cmd.add_option("--config", config_path,
                                    "JSON config file; explicit flags override its values");
        family_opt =
            cmd.add_option("--beam", family, "beam family: pp, fourfold, ps, radial, ghz, w, noon");
        w0_opt = cmd.add_option("--w0", w0, "waist in reference units (default 1)");
        a_opt = cmd.add_option("--a", a, "spot separation for pp / fourfold beams");
        b_opt = cmd.add_option("--b", b, "rect spot width for fourfold beams");
        theta_opt = cmd.add_option("--theta", theta, "NOON relative phase");
        order_opt = cmd.add_option("--N", order, "NOON mode order");
        a00_opt = cmd.add_option("--A00", a00, "coefficient A00 as re or re,im");
        a01_opt = cmd.add_option("--A01", a01, "coefficient A01 as re or re,im");
        a10_opt = cmd.add_option("--A10", a10, "coefficient A10 as re or re,im");
        a11_opt = cmd.add_option("--A11", a11, "coefficient A11 as re or re,im");
        overlap_opt = cmd.add_flag("--allow-overlap", allow_overlap,
                                   "accept fourfold geometries with b >= 2a");
        nx_opt = cmd.add_option("--nx", nx, "samples along x (default 512)");
        ny_opt = cmd.add_option("--ny", ny, "samples along y (default 512)");
        extent_opt = cmd.add_option("--extent", extent,
                                    "half size of the square grid (default: 8x beam scale)");
        z_opt = cmd.add_option("--z", z, "longitudinal plane in Rayleigh ranges (default 0)");
    }

    [[nodiscard]] BeamConfig resolve() const {
        BeamConfig base;
        if (const int n = env_grid_default(); n > 0) base.nx = base.ny = n;
        BeamConfig cfg = config_opt->count() ? load_config_file(config_path, base) : base;
        if (family_opt->count()) cfg.family = parse_family(family);
        if (w0_opt->count()) cfg.w0 = w0;
        if (a_opt->count()) cfg.a = a;
        if (b_opt->count()) cfg.b = b;
        if (theta_opt->count()) cfg.theta = theta;
        if (order_opt->count()) cfg.order = order;
        if (overlap_opt->count()) cfg.allow_overlap = allow_overlap;
        if (nx_opt->count()) cfg.nx = nx;
        if (ny_opt->count()) cfg.ny = ny;
        if (extent_opt->count()) cfg.extent = extent;
        if (z_opt->count()) cfg.z = z;
        const CLI::Option* opts[4] = {a00_opt, a01_opt, a10_opt, a11_opt};
        const std::string* vals[4] = {&a00, &a01, &a10, &a11};
        for (int k = 0; k < 4; ++k) {
            if (opts[k]->count()) {
                cfg.coeffs[k / 2][k % 2] = parse_complex_flag(*vals[k]);
                cfg.has_coeffs = true;
            }
        }
        return cfg;
    }
};

void write_text(const std::string& text, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw IoError("cannot open " + out_path + " for writing");
    file << text;
    file.flush();
    if (!file) throw IoError("write to " + out_path + " failed");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"classically entangled paraxial beam toolbox"};
    app.name("cebeam");
    app.require_subcommand(1);

    // make: sample a beam and dump the Jones field
    auto* make_cmd = app.add_subcommand("make", "sample a beam and write a field CSV");
    BeamOptions make_opts;
    make_opts.attach(*make_cmd);
    std::string make_out;
    make_cmd->add_option("--out", make_out, "output field CSV path")->required();

    // schmidt / coherence: JSON analysis report
    auto* schmidt_cmd = app.add_subcommand("schmidt", "Schmidt weights, K and reconstruction residual");
    BeamOptions schmidt_opts;
    schmidt_opts.attach(*schmidt_cmd);
    std::string schmidt_out;
    schmidt_cmd->add_option("--out", schmidt_out, "report path (default: stdout)");

    auto* coherence_cmd =
        app.add_subcommand("coherence", "polarization covariance matrix and degree of polarization");
    BeamOptions coherence_opts;
    coherence_opts.attach(*coherence_cmd);
    std::string coherence_out;
    coherence_cmd->add_option("--out", coherence_out, "report path (default: stdout)");

    // overlap: displaced-Gaussian overlap, analytic vs quadrature
    auto* overlap_cmd =
        app.add_subcommand("overlap", "overlap of Gaussians displaced by +a and -a");
    double ov_a = 1.0, ov_w0 = 1.0, ov_extent = 0.0;
    int ov_nx = 0, ov_ny = 0;
    overlap_cmd->add_option("--a", ov_a, "displacement (default 1)");
    overlap_cmd->add_option("--w0", ov_w0, "waist (default 1)");
    auto* ov_nx_opt = overlap_cmd->add_option("--nx", ov_nx, "samples along x (default 512)");
    auto* ov_ny_opt = overlap_cmd->add_option("--ny", ov_ny, "samples along y (default 512)");
    auto* ov_extent_opt =
        overlap_cmd->add_option("--extent", ov_extent, "grid half size (default: 8x(a+w0))");

    // render: intensity PGM plus optional Stokes / field dumps
    auto* render_cmd = app.add_subcommand("render", "intensity image and Stokes map of a beam");
    BeamOptions render_opts;
    render_opts.attach(*render_cmd);
    std::string render_out, render_stokes, render_field;
    render_cmd->add_option("--out", render_out, "output PGM path")->required();
    render_cmd->add_option("--stokes", render_stokes, "optional Stokes CSV path");
    render_cmd->add_option("--field", render_field, "optional field CSV path");

    // tripartite: 2x2x2 coefficient tensor
    auto* tripartite_cmd =
        app.add_subcommand("tripartite", "expand a beam over {e_H,e_V} x {u0,u1}_x x {u0,u1}_y");
    BeamOptions tripartite_opts;
    tripartite_opts.attach(*tripartite_cmd);
    std::string tripartite_out;
    tripartite_cmd->add_option("--out", tripartite_out, "tensor path (default: stdout)");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("cebeam");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitBadConfig;
    }

    try {
        if (*make_cmd) {
            const BeamConfig cfg = make_opts.resolve();
            const VectorBeam beam = make_beam(cfg);
            const FieldGrid grid = make_config_grid(cfg, beam);
            dump_field_csv(sample_beam(beam, grid), make_out);
        } else if (*schmidt_cmd || *coherence_cmd) {
            const BeamOptions& opts = *schmidt_cmd ? schmidt_opts : coherence_opts;
            const std::string& path = *schmidt_cmd ? schmidt_out : coherence_out;
            write_text(report_to_json(analyze(opts.resolve())), path, out);
        } else if (*overlap_cmd) {
            const double analytic = overlap_gaussian_analytic(ov_a, ov_w0);
            const int nx = ov_nx_opt->count() ? ov_nx : 512;
            const int ny = ov_ny_opt->count() ? ov_ny : 512;
            const double extent = ov_extent_opt->count() ? ov_extent : 8.0 * (ov_a + ov_w0);
            const FieldGrid grid = make_grid(nx, ny, extent, 0.0);
            const GaussianFundamental g{ov_w0};
            const Complex quad = inner_product_sampled(sample_mode(shifted(g, 0.0, +ov_a), grid),
                                                       sample_mode(shifted(g, 0.0, -ov_a), grid));
            out << "analytic " << format_double(analytic) << '\n';
            out << "quadrature " << format_double(quad.real()) << '\n';
        } else if (*render_cmd) {
            const BeamConfig cfg = render_opts.resolve();
            const VectorBeam beam = make_beam(cfg);
            const FieldGrid grid = make_config_grid(cfg, beam);
            const SampledVectorField field = sample_beam(beam, grid);
            render_intensity_pgm(field, render_out);
            if (!render_stokes.empty()) render_stokes_csv(field, render_stokes);
            if (!render_field.empty()) dump_field_csv(field, render_field);
        } else if (*tripartite_cmd) {
            const BeamConfig cfg = tripartite_opts.resolve();
            const VectorBeam beam = make_beam(cfg);
            const FieldGrid grid = make_config_grid(cfg, beam);
            write_text(tripartite_to_json(cfg, grid, factorize_tripartite(beam)), tripartite_out,
                       out);
        }
    } catch (const InvalidParameterError& e) {
        err << "error: " << e.what() << '\n';
        return kExitBadConfig;
    } catch (const InvalidGeometryError& e) {
        err << "error: " << e.what() << '\n';
        return kExitBadConfig;
    } catch (const NotRepresentableError& e) {
        err << "error: " << e.what() << '\n';
        return kExitBadConfig;
    } catch (const DegenerateBeamError& e) {
        err << "error: " << e.what() << '\n';
        return kExitBadConfig;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitNumericalFailure;
    }
    return kExitOk;
}

}  // namespace cebeam::cli
