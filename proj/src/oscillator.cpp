#include "iho/oscillator.hpp"

#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace iho::oscillator {

namespace {
const cplx kI{0.0, 1.0};
}

cplx fresnel_factor(double alpha, double x) {
    return std::exp(kI * (alpha * x * x / 2.0));
}

cplx kummer_part(const EigenParams& p, double x,
                 const specfun::SeriesControl& ctl) {
    p.validate();
    const double al = p.alpha();
    const cplx z = -kI * (al * (x * x));
    if (p.parity == Parity::Even)
        return specfun::kummer_eval({p.nu() + 0.25, 0.5}, z, ctl);
    return x * specfun::kummer_eval({p.nu() + 0.75, 1.5}, z, ctl);
}

cplx psi(const EigenParams& p, double x, const specfun::SeriesControl& ctl) {
    return fresnel_factor(p.alpha(), x) * kummer_part(p, x, ctl);
}

cplx psi_even(const EigenParams& p, double x,
              const specfun::SeriesControl& ctl) {
    if (p.parity != Parity::Even)
        throw DomainError("psi_even: parity must be Even");
    return psi(p, x, ctl);
}

cplx psi_odd(const EigenParams& p, double x, const specfun::SeriesControl& ctl) {
    if (p.parity != Parity::Odd)
        throw DomainError("psi_odd: parity must be Odd");
    return psi(p, x, ctl);
}

cplx amplitude(const EigenParams& p) {
    p.validate();
    const double al = p.alpha();
    const cplx ila = kI * p.lambda / (4.0 * al);
    if (p.parity == Parity::Even)
        return specfun::complex_gamma(0.5) / specfun::complex_gamma(0.25 + ila) *
               std::pow(cplx(0.0, al), -0.25 + ila);
    return specfun::complex_gamma(1.5) / specfun::complex_gamma(0.75 + ila) *
           std::pow(cplx(0.0, al), -0.75 + ila);
}

cplx asymptotic_eval(const AsymptoticForm& form, double x) {
    if (!(x > 0.0))
        throw DomainError("asymptotic_eval: requires x > 0");
    const cplx g = form.alpha * x * x / 2.0 +
                   form.a_param / (2.0 * form.alpha) * std::log(x);
    return (form.amplitude * std::exp(kI * g) +
            std::conj(form.amplitude) * std::exp(-kI * g)) /
           std::sqrt(x);
}

double ode_residual(const std::function<cplx(double)>& psi_fn, cplx lambda,
                    double omega, const Grid& grid, double h) {
    grid.validate();
    if (!(h > 0.0)) throw DomainError("ode_residual: h must be positive");
    if (grid.n == 0) throw DomainError("ode_residual: empty grid");

    double worst = 0.0;
#ifdef _OPENMP
#pragma omp parallel for reduction(max : worst) schedule(static)
#endif
    for (long long i = 0; i < static_cast<long long>(grid.n); ++i) {
        const double x = grid.x(static_cast<std::size_t>(i));
        const cplx fm = psi_fn(x - h);
        const cplx f0 = psi_fn(x);
        const cplx fp = psi_fn(x + h);
        const cplx d2 = (fp - 2.0 * f0 + fm) / (h * h);
        const cplx r = -d2 - omega * omega * x * x * f0 - lambda * f0;
        const double ar = std::abs(r);
        if (ar > worst) worst = ar;
    }
    return worst;
}

double kummer_parity_identity_check(cplx lambda, double omega, double x) {
    double defect = 0.0;
    double scale = 0.0;
    for (Parity par : {Parity::Even, Parity::Odd}) {
        const EigenParams plus{lambda, omega, +1, par};
        const EigenParams minus{lambda, omega, -1, par};
        const cplx lhs = psi(minus, x);
        const cplx rhs = psi(plus, x);
        defect += std::abs(lhs - rhs);
        if (par == Parity::Even) scale = std::abs(rhs);
    }
    return defect / (1.0 + scale);
}

} // namespace iho::oscillator
