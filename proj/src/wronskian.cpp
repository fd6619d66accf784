#include "iho/wronskian.hpp"

#include <cmath>

namespace iho::wronskian {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
const cplx kI{0.0, 1.0};
} // namespace

cplx wronskian_numeric(const cfun& f, const cfun& g, double x, double h) {
    const cplx fp = (f(x + h) - f(x - h)) / (2.0 * h);
    const cplx gp = (g(x + h) - g(x - h)) / (2.0 * h);
    return f(x) * gp - fp * g(x);
}

cplx basis_wronskian_closed(const BasisSigns& signs, cplx a, cplx b,
                            double alpha, double x) {
    signs.validate();
    if (!(x > 0.0))
        throw DomainError("basis_wronskian_closed: requires x > 0");

    const double lx = std::log(x);
    const double ax2 = 2.0 * alpha * x * x;
    if (signs.s1 == -1 && signs.s2 == +1)
        return -(2.0 * kI * alpha + kI * (b + a) / ax2) *
               std::exp(kI * (a - b) * lx / (2.0 * alpha));
    if (signs.s1 == +1 && signs.s2 == +1)
        return kI * (b - a) / ax2 *
               std::exp(kI * (alpha * x * x + (a + b) * lx / (2.0 * alpha)));
    if (signs.s1 == -1 && signs.s2 == -1)
        return std::conj(
            basis_wronskian_closed(BasisSigns{+1, +1}, a, b, alpha, x));
    return std::conj(basis_wronskian_closed(BasisSigns{-1, +1}, a, b, alpha, x));
}

double product_identity_check(const cfun& f, const cfun& g, const cfun& h,
                              double x, double step) {
    const cfun fg = [&](double t) { return f(t) * g(t); };
    const cfun fh = [&](double t) { return f(t) * h(t); };
    const cplx lhs = wronskian_numeric(fg, fh, x, step);
    const cplx rhs = f(x) * f(x) * wronskian_numeric(g, h, x, step);
    return std::abs(lhs - rhs);
}

cplx bilinear_expand(cplx A_a, cplx A_b, cplx a, cplx b, double alpha,
                     double x) {
    if (!(x > 0.0)) throw DomainError("bilinear_expand: requires x > 0");
    const cplx w_mp = basis_wronskian_closed(BasisSigns{-1, +1}, a, b, alpha, x);
    const cplx w_pp = basis_wronskian_closed(BasisSigns{+1, +1}, a, b, alpha, x);
    const cplx w_mm = basis_wronskian_closed(BasisSigns{-1, -1}, a, b, alpha, x);
    const cplx w_pm = basis_wronskian_closed(BasisSigns{+1, -1}, a, b, alpha, x);
    return std::conj(A_b) * A_a * w_mp + std::conj(A_b) * std::conj(A_a) * w_mm +
           A_b * A_a * w_pp + A_b * std::conj(A_a) * w_pm;
}

std::vector<double> make_pv_grid(double center, double half_width, double h) {
    if (!(half_width > 0.0) || !(h > 0.0))
        throw ValidationError("make_pv_grid: half_width and h must be positive");
    const std::size_t m = static_cast<std::size_t>(half_width / h);
    std::vector<double> grid;
    grid.reserve(2 * m);
    for (std::size_t k = m; k >= 1; --k)
        grid.push_back(center - (static_cast<double>(k) - 0.5) * h);
    for (std::size_t k = 1; k <= m; ++k)
        grid.push_back(center + (static_cast<double>(k) - 0.5) * h);
    return grid;
}

double delta_normalization_probe(double a, double alpha,
                                 const std::function<cplx(double)>& A_of,
                                 const std::function<double(double)>& rho,
                                 double x_probe,
                                 const std::vector<double>& b_grid) {
    if (b_grid.size() < 2)
        throw QuadratureError("delta_normalization_probe: b_grid too small");
    // symmetric principal-value grid about a, excluding b = a
    const std::size_t n = b_grid.size();
    for (std::size_t k = 0; k < n / 2; ++k) {
        const double lo = b_grid[k] - a;
        const double hi = b_grid[n - 1 - k] - a;
        if (std::abs(lo + hi) > 1e-9 * (std::abs(lo) + std::abs(hi)) ||
            lo == 0.0)
            throw QuadratureError(
                "delta_normalization_probe: b_grid not symmetric about a");
    }
    const double h = b_grid[1] - b_grid[0];

    const cplx A_a = A_of(a);
    cplx num = 0.0;
    for (double b : b_grid) {
        const cplx w = bilinear_expand(A_a, A_of(b), a, b, alpha, x_probe);
        num += w / cplx(a - b) * rho(b);
    }
    num *= h;

    const double den = 4.0 * kPi * alpha * std::norm(A_a) * rho(a);
    return std::abs(num / den);
}

} // namespace iho::wronskian
