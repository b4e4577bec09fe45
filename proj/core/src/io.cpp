#include "cebeam/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace cebeam {

std::string format_double(double value) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

namespace {

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    return out;
}

void finish_output(std::ostream& out, const std::filesystem::path& path) {
    out.flush();
    if (!out) throw IoError("write to " + path.string() + " failed");
}

double parse_double(std::string_view token, const char* what) {
    double value = 0.0;
    const auto res = std::from_chars(token.data(), token.data() + token.size(), value);
    if (res.ec != std::errc{} || res.ptr != token.data() + token.size()) {
        throw IoError(std::string("malformed ") + what + " value: '" + std::string(token) + "'");
    }
    return value;
}

}  // namespace

void dump_field_csv(const SampledVectorField& field, std::ostream& out) {
    const FieldGrid& g = field.grid;
    out << "# cebeam-field v1 z=" << format_double(g.z) << '\n';
    out << "x,y,re_ex,im_ex,re_ey,im_ey\n";
    for (int iy = 0; iy < g.ny; ++iy) {
        for (int ix = 0; ix < g.nx; ++ix) {
            const std::size_t k = g.index(ix, iy);
            out << format_double(g.x(ix)) << ',' << format_double(g.y(iy)) << ','
                << format_double(field.ex[k].real()) << ',' << format_double(field.ex[k].imag())
                << ',' << format_double(field.ey[k].real()) << ','
                << format_double(field.ey[k].imag()) << '\n';
        }
    }
}

void dump_field_csv(const SampledVectorField& field, const std::filesystem::path& path) {
    std::ofstream out = open_output(path);
    dump_field_csv(field, out);
    finish_output(out, path);
}

SampledVectorField read_field_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || !line.starts_with("# cebeam-field v1 z=")) {
        throw IoError("missing cebeam-field v1 header");
    }
    const double z = parse_double(std::string_view(line).substr(20), "z");
    if (!std::getline(in, line) || line != "x,y,re_ex,im_ex,re_ey,im_ey") {
        throw IoError("missing field column header");
    }

    std::vector<double> xs, ys;
    std::vector<Complex> ex, ey;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::string_view row(line);
        double vals[6];
        for (int c = 0; c < 6; ++c) {
            const std::size_t comma = row.find(',');
            const std::string_view token = (c < 5) ? row.substr(0, comma) : row;
            if (c < 5 && comma == std::string_view::npos) {
                throw IoError("field row has fewer than 6 columns: '" + line + "'");
            }
            vals[c] = parse_double(token, "field");
            if (c < 5) row.remove_prefix(comma + 1);
        }
        xs.push_back(vals[0]);
        ys.push_back(vals[1]);
        ex.emplace_back(vals[2], vals[3]);
        ey.emplace_back(vals[4], vals[5]);
    }
    if (xs.empty()) throw IoError("field dump has no rows");

    // Row-major with y outer: the first row of nodes shares one y value.
    int nx = 1;
    while (nx < static_cast<int>(xs.size()) && ys[nx] == ys[0]) ++nx;
    if (xs.size() % nx != 0) throw IoError("field dump rows do not form a full grid");
    const int ny = static_cast<int>(xs.size()) / nx;
    if (nx < 2 || ny < 2) throw IoError("field dump grid is smaller than 2x2");

    SampledVectorField field(make_grid_rect(nx, ny, xs.front(), xs[nx - 1], ys.front(), ys.back(), z));
    field.ex = std::move(ex);
    field.ey = std::move(ey);
    return field;
}

SampledVectorField read_field_csv(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string() + " for reading");
    return read_field_csv(in);
}

void render_intensity_pgm(const SampledVectorField& field, std::ostream& out) {
    const FieldGrid& g = field.grid;
    double peak = 0.0;
    for (std::size_t k = 0; k < field.ex.size(); ++k) {
        peak = std::max(peak, std::norm(field.ex[k]) + std::norm(field.ey[k]));
    }
    out << "P5\n" << g.nx << ' ' << g.ny << "\n65535\n";
    std::vector<std::uint8_t> row(static_cast<std::size_t>(g.nx) * 2);
    for (int iy = g.ny - 1; iy >= 0; --iy) {  // top row at largest y
        for (int ix = 0; ix < g.nx; ++ix) {
            const std::size_t k = g.index(ix, iy);
            const double intensity = std::norm(field.ex[k]) + std::norm(field.ey[k]);
            const std::uint16_t sample =
                (peak > 0.0)
                    ? static_cast<std::uint16_t>(std::llround(intensity / peak * 65535.0))
                    : 0;
            row[2 * ix] = static_cast<std::uint8_t>(sample >> 8);  // big-endian
            row[2 * ix + 1] = static_cast<std::uint8_t>(sample & 0xff);
        }
        out.write(reinterpret_cast<const char*>(row.data()), static_cast<std::streamsize>(row.size()));
    }
}

void render_intensity_pgm(const SampledVectorField& field, const std::filesystem::path& path) {
    std::ofstream out = open_output(path);
    render_intensity_pgm(field, out);
    finish_output(out, path);
}

void render_stokes_csv(const SampledVectorField& field, std::ostream& out) {
    const FieldGrid& g = field.grid;
    out << "# cebeam-stokes v1 z=" << format_double(g.z) << '\n';
    out << "x,y,s0,s1,s2,s3\n";
    for (int iy = 0; iy < g.ny; ++iy) {
        for (int ix = 0; ix < g.nx; ++ix) {
            const std::size_t k = g.index(ix, iy);
            const Complex eh = field.ex[k];
            const Complex ev = field.ey[k];
            const double ih = std::norm(eh);
            const double iv = std::norm(ev);
            const Complex cross = std::conj(eh) * ev;
            out << format_double(g.x(ix)) << ',' << format_double(g.y(iy)) << ','
                << format_double(ih + iv) << ',' << format_double(ih - iv) << ','
                << format_double(2.0 * cross.real()) << ',' << format_double(2.0 * cross.imag())
                << '\n';
        }
    }
}

void render_stokes_csv(const SampledVectorField& field, const std::filesystem::path& path) {
    std::ofstream out = open_output(path);
    render_stokes_csv(field, out);
    finish_output(out, path);
}

}  // namespace cebeam
