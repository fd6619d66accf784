#pragma once

#include <complex>

#include "iho/grid.hpp"

namespace iho::lct {

using cplx = std::complex<double>;

// A = [[a, b], [alpha, beta]] in SL2(R).  Kernel-based operations require
// b != 0.
struct SL2Matrix {
    double a = 1.0;
    double b = 0.0;
    double alpha = 0.0;
    double beta = 1.0;

    double det() const { return a * beta - b * alpha; }
    SL2Matrix inverse() const { return SL2Matrix{beta, -b, -alpha, a}; }

    void validate(double tol = 1e-12) const;
    void require_nonzero_b() const;

    static SL2Matrix fourier() { return SL2Matrix{0.0, 1.0, -1.0, 0.0}; }
    static SL2Matrix identity() { return SL2Matrix{1.0, 0.0, 0.0, 1.0}; }
};

// Coefficients (E, F, G) of E x^2 + F(xp+px) + G p^2.
struct QuadraticForm {
    double E = 0.0;
    double F = 0.0;
    double G = 0.0;
};

// Kernel constant c(A) = sqrt(1/(2 pi i b)), principal square root.
cplx kernel_constant(const SL2Matrix& A);

// Integral kernel c(A) exp[(i/2b)(a x^2 - 2 u x + beta u^2)].
cplx kernel(const SL2Matrix& A, double u, double x);

// Trapezoidal quadrature of (W_A f)(u) = int W(A; u, x) f(x) dx on each u of
// u_grid.  Serial reference implementation, O(N*M).
SampledFunction lct_apply_direct_serial(const SL2Matrix& A,
                                        const SampledFunction& f,
                                        const Grid& u_grid);

// Same quadrature, parallel over output points.
SampledFunction lct_apply_direct(const SL2Matrix& A, const SampledFunction& f,
                                 const Grid& u_grid);

// Critically sampled output grid for the fast path:
// du = 2 pi |b| / (N dx), centered on zero.
Grid fast_output_grid(const SL2Matrix& A, const SampledFunction& f);

// Chirp-Fourier-chirp evaluation W_A = M2 o F o M1 via a Bluestein chirp-z
// transform; O(N log N).  Output on fast_output_grid.
SampledFunction lct_apply_fast(const SL2Matrix& A, const SampledFunction& f);

// Matrix product A2*A1 with determinant re-validation.
SL2Matrix compose(const SL2Matrix& A2, const SL2Matrix& A1);

// ||W_{A2}(W_{A1} f) - W_{A2 A1} f|| in the discrete L2 norm, all transforms
// on f's own grid.
double group_law_check(const SL2Matrix& A2, const SL2Matrix& A1,
                       const SampledFunction& f);

// |<W_A f, W_A g> - <f, g>| with discrete inner products on a common grid.
double unitarity_check(const SL2Matrix& A, const SampledFunction& f,
                       const SampledFunction& g);

// (E, F, G) = (2 a alpha, a beta + b alpha, 2 b beta): the x-representation
// of u p_u + p_u u.
QuadraticForm quadratic_coeffs(const SL2Matrix& A);

// Inverse construction [[a, a(F-1)/E], [E/2a, (F+1)/2a]]; requires E != 0,
// EG - F^2 = -1, a_param != 0.
SL2Matrix matrix_from_quadratic(const QuadraticForm& Q, double a_param);

// Matrix with quadratic_coeffs = (-omega, 0, 1/omega), so that
// omega (u p_u + p_u u) = p^2 - omega^2 x^2.
SL2Matrix iho_matrix(double omega, double a_param);

} // namespace iho::lct
