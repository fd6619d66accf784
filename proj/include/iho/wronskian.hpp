#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "iho/errors.hpp"

namespace iho::wronskian {

using cplx = std::complex<double>;
using cfun = std::function<cplx(double)>;

// Sign pair (s1, s2) of the basis Wronskian
//   W_{s1,s2} = Wr(x^{-1/2} e^{s2 i g_a}, x^{-1/2} e^{s1 i g_b})
// with g_c(x) = alpha x^2/2 + (c/2alpha) ln x: s2 tags the a-labelled slot,
// s1 the b-labelled one.  This orientation makes the bilinear expansion
// converge to +4 pi alpha |A(a)|^2 delta(b - a).
struct BasisSigns {
    int s1 = -1;
    int s2 = +1;

    void validate() const {
        if ((s1 != -1 && s1 != 1) || (s2 != -1 && s2 != 1))
            throw ValidationError("BasisSigns: entries must be +1 or -1");
    }
};

// Wr(f, g)(x) = f g' - f' g by central differences of step h.
cplx wronskian_numeric(const cfun& f, const cfun& g, double x, double h = 1e-5);

// Closed forms of the basis Wronskians at x > 0:
//   W_{-+} = -(2 i alpha + i(b+a)/(2 alpha x^2)) exp(i(a-b) ln x / 2alpha)
//   W_{++} =  i(b-a)/(2 alpha x^2) exp(i(alpha x^2 + (a+b) ln x / 2alpha))
//   W_{--} = conj(W_{++}),  W_{+-} = conj(W_{-+})   (real a, b)
cplx basis_wronskian_closed(const BasisSigns& signs, cplx a, cplx b,
                            double alpha, double x);

// |Wr(fg, fh) - f^2 Wr(g, h)| by finite differences; zero for smooth inputs
// up to O(h^2).
double product_identity_check(const cfun& f, const cfun& g, const cfun& h,
                              double x, double step = 1e-4);

// Bilinear expansion of Wr(F_a, conj(F_b)) over the four basis Wronskians,
// with F_c = x^{-1/2}(A_c e^{i g_c} + conj(A_c) e^{-i g_c}).
cplx bilinear_expand(cplx A_a, cplx A_b, cplx a, cplx b, double alpha, double x);

// Symmetric principal-value grid about `center`: midpoints +/-(k - 1/2) h,
// k = 1..m, excluding the center itself.
std::vector<double> make_pv_grid(double center, double half_width, double h);

// Smeared ratio of the distributional limit
//   Wr(conj(F_b), F_a)/(a - b) -> 4 pi alpha |A(a)|^2 delta(b - a):
// quadrature of the left side against rho over b_grid, divided by the right
// side at b = a.  Ratio -> 1 as x_probe grows.
double delta_normalization_probe(double a, double alpha,
                                 const std::function<cplx(double)>& A_of,
                                 const std::function<double(double)>& rho,
                                 double x_probe,
                                 const std::vector<double>& b_grid);

} // namespace iho::wronskian
