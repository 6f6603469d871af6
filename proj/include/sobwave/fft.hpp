#pragma once

#include <complex>
#include <vector>

#include "sobwave/grid.hpp"

namespace sobwave {

using cplx = std::complex<double>;

// Discrete transforms in the Fourier-coefficient convention:
//   forward:  c(k) = (1/M) sum_n f(x_n) e^{-2 pi i k.x_n},  M = total samples
//   backward: f(x_n) = sum_k c(k) e^{+2 pi i k.x_n}
// so backward(forward(f)) == f and a point mass has unimodular coefficients.
// Arrays are row-major, natural FFT frequency order per axis.  Backed by FFTW
// with a process-wide plan pool; all entry points are single-thread only.
std::vector<cplx> fft_forward(const GridSpec& grid, const std::vector<cplx>& samples);
std::vector<cplx> fft_backward(const GridSpec& grid, const std::vector<cplx>& coeffs);

}  // namespace sobwave
