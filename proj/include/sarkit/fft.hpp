#pragma once

#include "sarkit/types.hpp"

// Thin wrapper over FFTW3 (double precision, complex-to-complex, unnormalized).
// sign = -1: X_k = sum_j x_j exp(-2*pi*i*j*k/n); sign = +1: exp(+2*pi*i*j*k/n).
// Plan creation is serialized internally; FFTW_ESTIMATE keeps plans deterministic.
namespace sarkit::fft {

void transform_1d(cvec& data, int sign);
void transform_2d(cvec& data, int rows, int cols, int sign);  // row-major

}  // namespace sarkit::fft
