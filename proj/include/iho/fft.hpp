#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace iho::fft {

using cplx = std::complex<double>;

// In-place radix-2 FFT; size must be a power of two.  sign = -1 forward
// (e^{-2pi i kn/N}), +1 inverse (unscaled).
void transform_pow2(std::vector<cplx>& a, int sign);

std::size_t next_pow2(std::size_t n);

// Chirp-z (Bluestein) evaluation of
//   S_k = sum_{n=0}^{N-1} a_n w^{(k + k0) n},  w = e^{i theta},
// for k = 0..M-1, in O((N+M) log(N+M)).  Arbitrary theta and offset k0.
std::vector<cplx> chirp_z(const std::vector<cplx>& a, double theta, double k0,
                          std::size_t m);

} // namespace iho::fft
