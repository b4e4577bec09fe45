#pragma once

#include <filesystem>
#include <iosfwd>

#include "cebeam/grid.hpp"

namespace cebeam {

/**
 * Field dump, version 1. UTF-8 text:
 *
 *   # cebeam-field v1 z=<z>
 *   x,y,re_ex,im_ex,re_ey,im_ey
 *   <rows>
 *
 * Rows run in row-major order, y outer ascending. Every number carries 17
 * significant digits, so reading the file back reproduces the doubles
 * bit-exactly.
 */
void dump_field_csv(const SampledVectorField& field, const std::filesystem::path& path);
void dump_field_csv(const SampledVectorField& field, std::ostream& out);

/// Reads a v1 field dump; grid bounds are recovered from the node coordinates.
SampledVectorField read_field_csv(const std::filesystem::path& path);
SampledVectorField read_field_csv(std::istream& in);

/**
 * Binary PGM (magic P5, maxval 65535, big-endian 16-bit samples) of the
 * intensity |E_H|^2 + |E_V|^2, mapped linearly from 0 to the per-image peak.
 * nx columns, ny rows, top row at the largest y. An all-zero field renders
 * as an all-zero image.
 */
void render_intensity_pgm(const SampledVectorField& field, const std::filesystem::path& path);
void render_intensity_pgm(const SampledVectorField& field, std::ostream& out);

/**
 * Per-node Stokes parameters, same layout contract as the field dump:
 *
 *   # cebeam-stokes v1 z=<z>
 *   x,y,s0,s1,s2,s3
 *   <rows>
 *
 * with S0 = |E_H|^2 + |E_V|^2, S1 = |E_H|^2 - |E_V|^2, S2 = 2 Re(E_H* E_V),
 * S3 = 2 Im(E_H* E_V).
 */
void render_stokes_csv(const SampledVectorField& field, const std::filesystem::path& path);
void render_stokes_csv(const SampledVectorField& field, std::ostream& out);

/// Formats one double with 17 significant digits (round-trip exact).
std::string format_double(double value);

}  // namespace cebeam
