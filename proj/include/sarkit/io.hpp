#pragma once

#include <string>
#include <vector>

#include "sarkit/types.hpp"

// On-disk formats.
//
// Complex arrays: a raw file of little-endian float64 pairs (re, im), row-major,
// plus a JSON sidecar at <path>.json with format_version, dtype ("c128le"), dims,
// role, and a geometry snapshot appropriate to the role.
// Magnitude renderings: 16-bit big-endian binary PGM (P5), dB or linear scale.
// Tabular output: CSV with a mandatory header row, %.17g doubles.
namespace sarkit::io {

inline constexpr int kFormatVersion = 1;

void write_image(const std::string& path, const ComplexImage& image,
                 const std::string& role = "image");
ComplexImage read_image(const std::string& path);

void write_phase_history(const std::string& path, const PhaseHistory& ph);
PhaseHistory read_phase_history(const std::string& path);

void write_signal(const std::string& path, const ComplexSignal& signal,
                  const std::string& role = "signal");
ComplexSignal read_signal(const std::string& path);

// dB scale: 20*log10(|v| / max|v|) clipped below at db_floor (default -60), mapped
// linearly onto [0, 65535]. A zero image renders as all black.
void write_pgm_db(const std::string& path, const ComplexImage& image, double db_floor = -60.0);
void write_pgm_linear(const std::string& path, const ComplexImage& image);

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);

}  // namespace sarkit::io
