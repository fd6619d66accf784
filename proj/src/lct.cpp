#include "iho/lct.hpp"

#include <cmath>
#include <iostream>

#include "iho/fft.hpp"

namespace iho::lct {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
const cplx kI{0.0, 1.0};

void warn_truncation(const SampledFunction& f) {
    double peak = 0.0;
    for (const cplx& v : f.values) peak = std::max(peak, std::abs(v));
    const double edge =
        std::max(std::abs(f.values.front()), std::abs(f.values.back()));
    if (edge > 1e-8 * peak)
        std::cerr << "[iho::lct] TruncationWarning: input not decayed at grid "
                     "edges (edge/peak = "
                  << (peak > 0 ? edge / peak : 0.0) << ")\n";
}

} // namespace

void SL2Matrix::validate(double tol) const {
    if (std::abs(det() - 1.0) > tol)
        throw ValidationError("SL2Matrix: determinant " + std::to_string(det()) +
                              " != 1");
}

void SL2Matrix::require_nonzero_b() const {
    if (b == 0.0)
        throw DomainError("SL2Matrix: kernel operations require b != 0");
}

cplx kernel_constant(const SL2Matrix& A) {
    A.require_nonzero_b();
    // principal sqrt: phase -pi/4 for b > 0, +pi/4 for b < 0
    return std::sqrt(1.0 / (2.0 * kPi * kI * A.b));
}

cplx kernel(const SL2Matrix& A, double u, double x) {
    return kernel_constant(A) *
           std::exp(kI / (2.0 * A.b) * (A.a * x * x - 2.0 * u * x + A.beta * u * u));
}

namespace {

SampledFunction apply_direct_impl(const SL2Matrix& A, const SampledFunction& f,
                                  const Grid& u_grid, bool parallel) {
    A.validate();
    A.require_nonzero_b();
    f.validate();
    u_grid.validate();
    warn_truncation(f);

    const std::size_t n = f.size();
    const cplx c = kernel_constant(A);
    const double inv2b = 1.0 / (2.0 * A.b);

    SampledFunction out{u_grid.x_min, u_grid.dx, std::vector<cplx>(u_grid.n)};
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
    for (long long j = 0; j < static_cast<long long>(u_grid.n); ++j) {
        const double u = u_grid.x(static_cast<std::size_t>(j));
        cplx acc = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double x = f.x(i);
            const double w = (i == 0 || i == n - 1) ? 0.5 : 1.0;
            const double phase = inv2b * (A.a * x * x - 2.0 * u * x);
            acc += w * f.values[i] * cplx(std::cos(phase), std::sin(phase));
        }
        const double up = inv2b * A.beta * u * u;
        out.values[static_cast<std::size_t>(j)] =
            c * f.dx * acc * cplx(std::cos(up), std::sin(up));
    }
    return out;
}

} // namespace

SampledFunction lct_apply_direct_serial(const SL2Matrix& A,
                                        const SampledFunction& f,
                                        const Grid& u_grid) {
    return apply_direct_impl(A, f, u_grid, false);
}

SampledFunction lct_apply_direct(const SL2Matrix& A, const SampledFunction& f,
                                 const Grid& u_grid) {
    return apply_direct_impl(A, f, u_grid, true);
}

Grid fast_output_grid(const SL2Matrix& A, const SampledFunction& f) {
    A.require_nonzero_b();
    const std::size_t n = f.size();
    const double du = 2.0 * kPi * std::abs(A.b) / (static_cast<double>(n) * f.dx);
    return Grid{-du * static_cast<double>(n / 2), du, n};
}

SampledFunction lct_apply_fast(const SL2Matrix& A, const SampledFunction& f) {
    A.validate();
    A.require_nonzero_b();
    f.validate();
    warn_truncation(f);

    const std::size_t n = f.size();
    const Grid ug = fast_output_grid(A, f);
    const double inv2b = 1.0 / (2.0 * A.b);

    // M1: input chirp (with trapezoid end weights to match the direct path)
    std::vector<cplx> a(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double x = f.x(i);
        const double w = (i == 0 || i == n - 1) ? 0.5 : 1.0;
        const double phase = inv2b * A.a * x * x;
        a[i] = w * f.values[i] * cplx(std::cos(phase), std::sin(phase));
    }

    // F: S_j = sum_n a_n e^{-i u_j (x_min + n dx)/b};
    // u_j = (j - n/2) du and du dx / b = sign(b) 2 pi / n.
    const double theta = -(A.b > 0 ? 1.0 : -1.0) * 2.0 * kPi / static_cast<double>(n);
    const double k0 = -static_cast<double>(n / 2);
    std::vector<cplx> s = fft::chirp_z(a, theta, k0, n);

    const cplx c = kernel_constant(A);
    SampledFunction out{ug.x_min, ug.dx, std::vector<cplx>(n)};
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (long long j = 0; j < static_cast<long long>(n); ++j) {
        const double u = ug.x(static_cast<std::size_t>(j));
        // M2: output chirp plus the x_min carrier
        const double phase = inv2b * A.beta * u * u - u * f.x_min / A.b;
        out.values[static_cast<std::size_t>(j)] =
            c * f.dx * s[static_cast<std::size_t>(j)] *
            cplx(std::cos(phase), std::sin(phase));
    }
    return out;
}

SL2Matrix compose(const SL2Matrix& A2, const SL2Matrix& A1) {
    A1.validate();
    A2.validate();
    const SL2Matrix p{A2.a * A1.a + A2.b * A1.alpha,
                      A2.a * A1.b + A2.b * A1.beta,
                      A2.alpha * A1.a + A2.beta * A1.alpha,
                      A2.alpha * A1.b + A2.beta * A1.beta};
    if (std::abs(p.det() - 1.0) > 1e-10)
        throw ValidationError("compose: product determinant drifted to " +
                              std::to_string(p.det()));
    return p;
}

double group_law_check(const SL2Matrix& A2, const SL2Matrix& A1,
                       const SampledFunction& f) {
    A1.require_nonzero_b();
    A2.require_nonzero_b();
    const SL2Matrix prod = compose(A2, A1);
    prod.require_nonzero_b();

    const Grid g = f.grid();
    const SampledFunction two_step = lct_apply_direct(A2, lct_apply_direct(A1, f, g), g);
    const SampledFunction one_step = lct_apply_direct(prod, f, g);
    return l2_distance(two_step, one_step);
}

double unitarity_check(const SL2Matrix& A, const SampledFunction& f,
                       const SampledFunction& g) {
    if (f.size() != g.size() || f.x_min != g.x_min || f.dx != g.dx)
        throw GridMismatch("unitarity_check: f and g grids differ");
    const Grid ug = f.grid();
    const SampledFunction wf = lct_apply_direct(A, f, ug);
    const SampledFunction wg = lct_apply_direct(A, g, ug);
    return std::abs(inner_product(wf, wg) - inner_product(f, g));
}

QuadraticForm quadratic_coeffs(const SL2Matrix& A) {
    return QuadraticForm{2.0 * A.a * A.alpha, A.a * A.beta + A.b * A.alpha,
                         2.0 * A.b * A.beta};
}

SL2Matrix matrix_from_quadratic(const QuadraticForm& Q, double a_param) {
    if (Q.E == 0.0)
        throw DomainError("matrix_from_quadratic: construction requires E != 0");
    if (a_param == 0.0)
        throw DomainError("matrix_from_quadratic: a_param must be nonzero");
    if (std::abs(Q.E * Q.G - Q.F * Q.F + 1.0) > 1e-10)
        throw ValidationError("matrix_from_quadratic: EG - F^2 != -1");
    return SL2Matrix{a_param, a_param * (Q.F - 1.0) / Q.E, Q.E / (2.0 * a_param),
                     (Q.F + 1.0) / (2.0 * a_param)};
}

SL2Matrix iho_matrix(double omega, double a_param) {
    if (!(omega > 0.0)) throw DomainError("iho_matrix: omega must be positive");
    return matrix_from_quadratic(QuadraticForm{-omega, 0.0, 1.0 / omega}, a_param);
}

} // namespace iho::lct
