#pragma once

#include <complex>
#include <functional>

#include "iho/grid.hpp"
#include "iho/specfun.hpp"

namespace iho::oscillator {

using cplx = std::complex<double>;

enum class Parity { Even, Odd };

// Spectral data of the eigenproblem (-d^2/dx^2 - omega^2 x^2) psi = lambda psi.
// The chirp parameter alpha is constrained to +/- omega and is stored as a
// sign; nu = lambda / (4 i alpha) is always recomputed.
struct EigenParams {
    cplx lambda;
    double omega = 1.0;
    int alpha_sign = +1;
    Parity parity = Parity::Even;

    double alpha() const { return alpha_sign >= 0 ? omega : -omega; }
    cplx nu() const { return lambda / (cplx(0.0, 4.0) * alpha()); }

    void validate() const {
        if (!(omega > 0.0))
            throw ValidationError("EigenParams: omega must be positive");
    }
};

// Unit-modulus chirp exp(i alpha x^2 / 2).
cplx fresnel_factor(double alpha, double x);

// The Kummer factor F_{P/N,alpha,lambda}(x): the eigenfunction with the
// Fresnel factor stripped.  Even: 1F1(nu+1/4, 1/2, -i alpha x^2);
// Odd: x * 1F1(nu+3/4, 3/2, -i alpha x^2).  Evaluated through x^2 so parity
// is bit-exact.
cplx kummer_part(const EigenParams& p, double x,
                 const specfun::SeriesControl& ctl = {});

// Full eigenfunctions psi = fresnel_factor * kummer_part.
cplx psi(const EigenParams& p, double x, const specfun::SeriesControl& ctl = {});
cplx psi_even(const EigenParams& p, double x,
              const specfun::SeriesControl& ctl = {});
cplx psi_odd(const EigenParams& p, double x,
             const specfun::SeriesControl& ctl = {});

// Asymptotic amplitude of the large-x form:
//   Even: Gamma(1/2)/Gamma(1/4 + i lambda/4alpha) (i alpha)^{-1/4 + i lambda/4alpha}
//   Odd:  Gamma(3/2)/Gamma(3/4 + i lambda/4alpha) (i alpha)^{-3/4 + i lambda/4alpha}
cplx amplitude(const EigenParams& p);

// Two-term oscillatory form (1/sqrt(x))(A e^{i g_a(x)} + conj(A) e^{-i g_a(x)})
// with g_a(x) = alpha x^2/2 + (a/2alpha) ln x.  The spectral label a_param
// equals lambda.
struct AsymptoticForm {
    cplx amplitude;
    double alpha = 1.0;
    cplx a_param;
};

cplx asymptotic_eval(const AsymptoticForm& form, double x);

// Sup over grid interior of |(-D2_h - omega^2 x^2 - lambda) psi| with the
// central second difference D2_h.  Independent of the series representation.
double ode_residual(const std::function<cplx(double)>& psi_fn, cplx lambda,
                    double omega, const Grid& grid, double h);

// Scaled defect of the chirp-sign identity
// f_{-omega} F_{.,-omega,lambda} = f_{omega} F_{.,omega,lambda}
// (Kummer's first formula), summed over both parities.
double kummer_parity_identity_check(cplx lambda, double omega, double x);

} // namespace iho::oscillator
