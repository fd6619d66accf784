#pragma once

#include <complex>
#include <utility>

#include "iho/grid.hpp"
#include "iho/lct.hpp"

namespace iho::logmap {

using cplx = std::complex<double>;

// Pair of t-line channels for L2(R_{+1} + R_{-1}); both share grid spacing.
struct TwoLineFunction {
    SampledFunction plus;
    SampledFunction minus;

    double total_norm() const;
};

// t-grid for the substitution x = +/- e^t.
struct HalfLineSpec {
    double t_min = -8.0;
    double t_max = 2.0;
    std::size_t n = 1001;

    Grid grid() const { return Grid::from_range(t_min, t_max, n); }
    void validate() const {
        if (!(t_min < t_max) || n < 2)
            throw ValidationError("HalfLineSpec: need t_min < t_max, n >= 2");
    }
};

// f -> (eta(x) f, eta(-x) f) with eta(0) = 1/2, so the halves sum back to f
// exactly on the grid.
std::pair<SampledFunction, SampledFunction> heaviside_split(
    const SampledFunction& f);

// Channel +/- carries f(+/- e^t) e^{t/2} on the t-grid, interpolating f
// linearly between x-samples.  Throws InterpolationError if e^{t_max} exceeds
// the x-grid range.
TwoLineFunction u_exp_forward(const SampledFunction& f, const HalfLineSpec& spec);

// f(x) = g_{sign(x)}(ln|x|) |x|^{-1/2}; inverse of u_exp_forward up to
// interpolation error.
SampledFunction u_exp_inverse(const TwoLineFunction& g, const Grid& x_grid);

// phi_{a,b,gamma}(x) = a eta(x)|x|^{-1/2+i gamma} + b eta(-x)|x|^{-1/2+i gamma}.
cplx phi_abgamma(cplx a, cplx b, double gamma, double x);

// x-representation of W_{A^{-1}} applied to u^{-1/2+i gamma} on the half line
// u > 0 (via the half-line Gaussian moment integral):
//   C(A^{-1}) exp(-i a x^2/(2b)) K^{-(alpha_e+1)/2} Psi_{alpha_e}((i x / b)/sqrt(K))
// with K = i beta/(2b) and alpha_e = -1/2 + i gamma.  An eigenfunction of
// E x^2 + F(xp+px) + G p^2 at eigenvalue 2 gamma; for A = iho_matrix(omega, .)
// an eigenfunction of -d^2/dx^2 - omega^2 x^2 at lambda = 2 omega gamma.
cplx wlemma_eigenfunction(const lct::SL2Matrix& A, double gamma, double x);

// Smooth plateau window: 1 on |x| <= x_flat, cosine-squared rolloff to zero
// at |x| >= x_zero.
double plateau_window(double x, double x_flat = 8.0, double x_zero = 14.0);

// U_exp(W_A psi) with A = iho_matrix(omega, a_param).  For psi a windowed
// eigenfunction with real eigenvalue lambda, each nonzero channel oscillates
// at frequency gamma = lambda/(2 omega).
TwoLineFunction spectrum_map_pipeline(double omega, double a_param,
                                      const SampledFunction& psi,
                                      const HalfLineSpec& spec);

// Frequency of the dominant bin of the zero-padded discrete Fourier spectrum
// of a channel (angular frequency of the e^{i gamma t} carrier).
double dominant_frequency(const SampledFunction& channel, std::size_t pad_factor = 8);

// Resolution bin width 2 pi / (n dt) of a channel's spectrum.
double frequency_bin_width(const SampledFunction& channel);

} // namespace iho::logmap
