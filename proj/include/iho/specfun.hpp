#pragma once

#include <complex>

#include "iho/errors.hpp"

namespace iho::specfun {

using cplx = std::complex<double>;

// Parameters of the Kummer function 1F1(a; b; z).  b must not be zero or a
// non-positive integer, otherwise the series denominators (b)_n vanish.
struct KummerParams {
    cplx a;
    cplx b;

    void validate() const;
};

struct SeriesControl {
    double rel_tol = 1e-13;
    int max_terms = 2000;
    double asymptotic_switch_radius = 40.0;

    void validate() const;
};

// Rising factorial (a)_n = a(a+1)...(a+n-1); (a)_0 = 1.
cplx pochhammer(cplx a, int n);

// Power series sum of 1F1(a; b; z) with compensated summation.  Stops once
// two consecutive terms fall below rel_tol * |partial sum|.  Throws
// NonConvergence if max_terms is exhausted first.  For Re z < 0 the sum is
// routed through the transformation 1F1(a;b;z) = e^z 1F1(b-a;b;-z), which
// removes the exponential cancellation of the raw alternating series.
cplx kummer_series(const KummerParams& p, cplx z, const SeriesControl& ctl = {});

// Leading-order large-|z| form
//   Gamma(b)/Gamma(b-a) (-z)^{-a} + Gamma(b)/Gamma(a) e^z z^{a-b}
// with principal-branch powers.  Requires |z| >= switch_radius.
cplx kummer_asymptotic(const KummerParams& p, cplx z, double switch_radius = 40.0);

// Dispatches between the series and the asymptotic form at
// ctl.asymptotic_switch_radius.
cplx kummer_eval(const KummerParams& p, cplx z, const SeriesControl& ctl = {});

// Gamma function for complex argument (Lanczos approximation, reflection
// formula for Re z < 0.5).  Throws PoleError at non-positive integers.
cplx complex_gamma(cplx z);

// Psi_alpha(v) with Re(alpha) > -1: the closed form of the half-line Gaussian
// moment integral int_0^inf exp(-t^2 + t v) t^alpha dt,
//   1/2 Gamma((alpha+1)/2) 1F1((alpha+1)/2, 1/2, v^2/4)
// + 1/2 Gamma((alpha+2)/2) v 1F1((alpha+2)/2, 3/2, v^2/4).
cplx psi_alpha(cplx alpha, cplx v, const SeriesControl& ctl = {});

} // namespace iho::specfun
