#include "iho/specfun.hpp"

#include <cmath>
#include <sstream>

namespace iho::specfun {

namespace {

bool is_nonpositive_integer(cplx z) {
    if (z.imag() != 0.0) return false;
    const double r = z.real();
    return r <= 0.0 && r == std::floor(r);
}

std::string to_str(cplx z) {
    std::ostringstream os;
    os << "(" << z.real() << ", " << z.imag() << ")";
    return os.str();
}

} // namespace

void KummerParams::validate() const {
    if (is_nonpositive_integer(b))
        throw ValidationError("KummerParams: b = " + to_str(b) +
                              " is zero or a non-positive integer");
}

void SeriesControl::validate() const {
    if (!(rel_tol > 0.0) || max_terms < 10 || !(asymptotic_switch_radius > 0.0))
        throw ValidationError("SeriesControl: need rel_tol > 0, max_terms >= 10, "
                              "asymptotic_switch_radius > 0");
}

cplx pochhammer(cplx a, int n) {
    cplx prod = 1.0;
    for (int k = 0; k < n; ++k) prod *= a + static_cast<double>(k);
    return prod;
}

cplx kummer_series(const KummerParams& p, cplx z, const SeriesControl& ctl) {
    p.validate();
    ctl.validate();

    // For Re z < 0 the raw series cancels catastrophically (condition number
    // ~ e^{|z| - Re z}); route through 1F1(a;b;z) = e^z 1F1(b-a;b;-z) so all
    // summed terms share the sign structure of the growing direction.
    if (z.real() < 0.0)
        return std::exp(z) * kummer_series({p.b - p.a, p.b}, -z, ctl);

    // Extended-precision Kahan-compensated sum; terms via the ratio
    // recurrence t_{n+1} = t_n (a+n) z / ((b+n)(n+1)).  The long double
    // accumulation keeps the oscillatory cancellation (partial sums up to
    // ~e^{|z|} collapsing to an O(1) result) well inside the double budget.
    using cplxl = std::complex<long double>;
    const cplxl al(p.a.real(), p.a.imag());
    const cplxl bl(p.b.real(), p.b.imag());
    const cplxl zl(z.real(), z.imag());
    cplxl sum = 1.0L;
    cplxl comp = 0.0L;
    cplxl term = 1.0L;
    int below_count = 0;
    for (int n = 0; n < ctl.max_terms; ++n) {
        const cplxl nl(static_cast<long double>(n), 0.0L);
        term *= (al + nl) * zl / ((bl + nl) * (nl + 1.0L));
        const cplxl y = term - comp;
        const cplxl t = sum + y;
        comp = (t - sum) - y;
        sum = t;

        // Two consecutive small terms guard against even/odd cancellation.
        if (std::abs(term) <= ctl.rel_tol * std::abs(sum)) {
            if (++below_count >= 2)
                return {static_cast<double>(sum.real()),
                        static_cast<double>(sum.imag())};
        } else {
            below_count = 0;
        }
    }
    throw NonConvergence("kummer_series: " + std::to_string(ctl.max_terms) +
                         " terms reached at z = " + to_str(z));
}

cplx kummer_asymptotic(const KummerParams& p, cplx z, double switch_radius) {
    p.validate();
    if (std::abs(z) < switch_radius)
        throw DomainError("kummer_asymptotic: |z| below switch radius");

    const cplx gb = complex_gamma(p.b);
    cplx t1 = 0.0;
    if (!is_nonpositive_integer(p.b - p.a))
        t1 = gb / complex_gamma(p.b - p.a) * std::pow(-z, -p.a);
    cplx t2 = 0.0;
    if (!is_nonpositive_integer(p.a))
        t2 = gb / complex_gamma(p.a) * std::exp(z) * std::pow(z, p.a - p.b);
    return t1 + t2;
}

cplx kummer_eval(const KummerParams& p, cplx z, const SeriesControl& ctl) {
    ctl.validate();
    if (std::abs(z) < ctl.asymptotic_switch_radius)
        return kummer_series(p, z, ctl);
    return kummer_asymptotic(p, z, ctl.asymptotic_switch_radius);
}

namespace {

// Lanczos g = 7, 9-term coefficient set.
constexpr int kLanczosG = 7;
constexpr double kLanczosCoeff[kLanczosG + 2] = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};
constexpr double kPi = 3.141592653589793238462643383279502884;

cplx gamma_lanczos(cplx z) {
    // Requires Re(z) >= 0.5.
    z -= 1.0;
    cplx x = kLanczosCoeff[0];
    for (int i = 1; i < kLanczosG + 2; ++i)
        x += kLanczosCoeff[i] / (z + static_cast<double>(i));
    const cplx t = z + (kLanczosG + 0.5);
    return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

} // namespace

cplx complex_gamma(cplx z) {
    if (is_nonpositive_integer(z))
        throw PoleError("complex_gamma: pole at z = " + to_str(z));
    if (z.real() < 0.5)
        return kPi / (std::sin(kPi * z) * gamma_lanczos(1.0 - z));
    return gamma_lanczos(z);
}

cplx psi_alpha(cplx alpha, cplx v, const SeriesControl& ctl) {
    if (!(alpha.real() > -1.0))
        throw DomainError("psi_alpha: requires Re(alpha) > -1");
    const cplx q = v * v / 4.0;
    const cplx even = 0.5 * complex_gamma((alpha + 1.0) / 2.0) *
                      kummer_eval({(alpha + 1.0) / 2.0, 0.5}, q, ctl);
    const cplx odd = 0.5 * complex_gamma((alpha + 2.0) / 2.0) * v *
                     kummer_eval({(alpha + 2.0) / 2.0, 1.5}, q, ctl);
    return even + odd;
}

} // namespace iho::specfun
