#include "sarkit/fft.hpp"

#include <fftw3.h>

#include <mutex>
#include <stdexcept>

namespace sarkit::fft {

namespace {
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace

void transform_1d(cvec& data, int sign) {
  if (data.empty()) throw std::invalid_argument("fft: empty input");
  auto* p = reinterpret_cast<fftw_complex*>(data.data());
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    plan = fftw_plan_dft_1d(static_cast<int>(data.size()), p, p,
                            sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD, FFTW_ESTIMATE);
  }
  if (!plan) throw std::runtime_error("fft: planner failed");
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(plan);
  }
}

void transform_2d(cvec& data, int rows, int cols, int sign) {
  if (rows <= 0 || cols <= 0 || data.size() != static_cast<std::size_t>(rows) * cols)
    throw std::invalid_argument("fft: bad 2d shape");
  auto* p = reinterpret_cast<fftw_complex*>(data.data());
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    plan = fftw_plan_dft_2d(rows, cols, p, p, sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD,
                            FFTW_ESTIMATE);
  }
  if (!plan) throw std::runtime_error("fft: planner failed");
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(plan);
  }
}

}  // namespace sarkit::fft
