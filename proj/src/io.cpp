#include "sarkit/io.hpp"

#include <json.hpp>

#include <bit>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>

namespace sarkit::io {

using json = nlohmann::json;

namespace {

static_assert(std::endian::native == std::endian::little,
              "raw complex files are little-endian; big-endian hosts need byte swaps");

void write_raw(const std::string& path, const cvec& samples) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  f.write(reinterpret_cast<const char*>(samples.data()),
          static_cast<std::streamsize>(samples.size() * sizeof(cplx)));
  if (!f) throw std::runtime_error("short write: " + path);
}

cvec read_raw(const std::string& path, std::size_t count) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open: " + path);
  cvec samples(count);
  f.read(reinterpret_cast<char*>(samples.data()),
         static_cast<std::streamsize>(count * sizeof(cplx)));
  if (f.gcount() != static_cast<std::streamsize>(count * sizeof(cplx)))
    throw std::runtime_error("raw file shorter than sidecar dims promise: " + path);
  return samples;
}

void write_sidecar(const std::string& path, const json& meta) {
  std::ofstream f(path + ".json", std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open for writing: " + path + ".json");
  f << meta.dump(2) << "\n";
}

json read_sidecar(const std::string& path) {
  std::ifstream f(path + ".json");
  if (!f) throw std::runtime_error("missing sidecar: " + path + ".json");
  json meta;
  f >> meta;
  if (meta.value("format_version", -1) != kFormatVersion)
    throw std::runtime_error("unsupported format_version in " + path + ".json");
  if (meta.value("dtype", "") != "c128le")
    throw std::runtime_error("unsupported dtype in " + path + ".json");
  return meta;
}

}  // namespace

void write_image(const std::string& path, const ComplexImage& image, const std::string& role) {
  json meta{{"format_version", kFormatVersion},
            {"dtype", "c128le"},
            {"dims", {image.n, image.n}},
            {"role", role},
            {"geometry", {{"n_pixels", image.n}, {"pixel_m", image.pixel_m}}}};
  write_sidecar(path, meta);
  write_raw(path, image.samples);
}

ComplexImage read_image(const std::string& path) {
  const json meta = read_sidecar(path);
  const auto dims = meta.at("dims").get<std::vector<int>>();
  if (dims.size() != 2 || dims[0] != dims[1] || dims[0] <= 0)
    throw std::runtime_error("not a square image: " + path);
  ComplexImage img(dims[0], meta.at("geometry").at("pixel_m").get<double>());
  img.samples = read_raw(path, static_cast<std::size_t>(dims[0]) * dims[0]);
  return img;
}

void write_phase_history(const std::string& path, const PhaseHistory& ph) {
  validate(ph);
  json meta{{"format_version", kFormatVersion},
            {"dtype", "c128le"},
            {"dims", {static_cast<int>(ph.n_azimuths()), static_cast<int>(ph.n_freqs())}},
            {"role", "phase_history"},
            {"geometry",
             {{"k_radpm", ph.k_radpm},
              {"azimuths_rad", ph.azimuths_rad},
              {"scene", {{"radius_m", ph.scene_ref.radius_m}, {"n_pixels", ph.scene_ref.n_pixels}}}}}};
  write_sidecar(path, meta);
  write_raw(path, ph.samples);
}

PhaseHistory read_phase_history(const std::string& path) {
  const json meta = read_sidecar(path);
  if (meta.value("role", "") != "phase_history")
    throw std::runtime_error("not a phase-history file: " + path);
  PhaseHistory ph;
  const auto& geo = meta.at("geometry");
  ph.k_radpm = geo.at("k_radpm").get<std::vector<double>>();
  ph.azimuths_rad = geo.at("azimuths_rad").get<std::vector<double>>();
  ph.scene_ref.radius_m = geo.at("scene").at("radius_m").get<double>();
  ph.scene_ref.n_pixels = geo.at("scene").at("n_pixels").get<int>();
  const auto dims = meta.at("dims").get<std::vector<long long>>();
  if (dims.size() != 2 || dims[0] != static_cast<long long>(ph.azimuths_rad.size()) ||
      dims[1] != static_cast<long long>(ph.k_radpm.size()))
    throw std::runtime_error("phase-history dims disagree with axes: " + path);
  ph.samples = read_raw(path, ph.k_radpm.size() * ph.azimuths_rad.size());
  validate(ph);
  return ph;
}

void write_signal(const std::string& path, const ComplexSignal& signal, const std::string& role) {
  json meta{{"format_version", kFormatVersion},
            {"dtype", "c128le"},
            {"dims", {static_cast<long long>(signal.samples.size())}},
            {"role", role},
            {"geometry", json::object()}};
  write_sidecar(path, meta);
  write_raw(path, signal.samples);
}

ComplexSignal read_signal(const std::string& path) {
  const json meta = read_sidecar(path);
  const auto dims = meta.at("dims").get<std::vector<long long>>();
  if (dims.size() != 1 || dims[0] <= 0) throw std::runtime_error("not a 1D signal: " + path);
  ComplexSignal s;
  s.samples = read_raw(path, static_cast<std::size_t>(dims[0]));
  return s;
}

namespace {

void write_pgm16(const std::string& path, int n, const std::vector<double>& unit) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  f << "P5\n" << n << " " << n << "\n65535\n";
  std::vector<unsigned char> row(static_cast<std::size_t>(n) * 2);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      const double u = unit[static_cast<std::size_t>(r) * n + c];
      const auto v = static_cast<unsigned>(std::lround(u * 65535.0));
      row[static_cast<std::size_t>(c) * 2] = static_cast<unsigned char>((v >> 8) & 0xff);
      row[static_cast<std::size_t>(c) * 2 + 1] = static_cast<unsigned char>(v & 0xff);
    }
    f.write(reinterpret_cast<const char*>(row.data()), static_cast<std::streamsize>(row.size()));
  }
}

}  // namespace

void write_pgm_db(const std::string& path, const ComplexImage& image, double db_floor) {
  if (!(db_floor < 0.0)) throw std::invalid_argument("write_pgm_db: db_floor must be negative");
  double peak = 0.0;
  for (const auto& z : image.samples) peak = std::max(peak, std::abs(z));
  std::vector<double> unit(image.samples.size(), 0.0);
  if (peak > 0.0) {
    for (std::size_t j = 0; j < unit.size(); ++j) {
      const double a = std::abs(image.samples[j]);
      const double db = a > 0.0 ? 20.0 * std::log10(a / peak) : db_floor;
      unit[j] = (std::max(db, db_floor) - db_floor) / (-db_floor);
    }
  }
  write_pgm16(path, image.n, unit);
}

void write_pgm_linear(const std::string& path, const ComplexImage& image) {
  double peak = 0.0;
  for (const auto& z : image.samples) peak = std::max(peak, std::abs(z));
  std::vector<double> unit(image.samples.size(), 0.0);
  if (peak > 0.0)
    for (std::size_t j = 0; j < unit.size(); ++j) unit[j] = std::abs(image.samples[j]) / peak;
  write_pgm16(path, image.n, unit);
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows) {
  if (header.empty()) throw std::invalid_argument("write_csv: header row is mandatory");
  std::ofstream f(path, std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  for (std::size_t c = 0; c < header.size(); ++c) f << (c ? "," : "") << header[c];
  f << "\n";
  char buf[64];
  for (const auto& row : rows) {
    if (row.size() != header.size())
      throw std::invalid_argument("write_csv: row width disagrees with header");
    for (std::size_t c = 0; c < row.size(); ++c) {
      std::snprintf(buf, sizeof(buf), "%.17g", row[c]);
      f << (c ? "," : "") << buf;
    }
    f << "\n";
  }
}

}  // namespace sarkit::io
