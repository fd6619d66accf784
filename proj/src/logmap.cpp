#include "iho/logmap.hpp"

#include <algorithm>
#include <cmath>

#include "iho/fft.hpp"
#include "iho/specfun.hpp"

namespace iho::logmap {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
const cplx kI{0.0, 1.0};

// Linear interpolation of f at x; 0 outside the grid on the decaying side,
// InterpolationError beyond the far end is handled by callers.
cplx lerp(const SampledFunction& f, double x) {
    const double pos = (x - f.x_min) / f.dx;
    if (pos <= 0.0 || pos >= static_cast<double>(f.size() - 1)) {
        if (pos == 0.0) return f.values.front();
        if (pos == static_cast<double>(f.size() - 1)) return f.values.back();
        return 0.0;
    }
    const std::size_t i = static_cast<std::size_t>(pos);
    const double frac = pos - static_cast<double>(i);
    return f.values[i] * (1.0 - frac) + f.values[i + 1] * frac;
}

} // namespace

double TwoLineFunction::total_norm() const {
    const double np = norm(plus);
    const double nm = norm(minus);
    return std::sqrt(np * np + nm * nm);
}

std::pair<SampledFunction, SampledFunction> heaviside_split(
    const SampledFunction& f) {
    f.validate();
    SampledFunction pos = f, neg = f;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const double x = f.x(i);
        if (x > 0.0) {
            neg.values[i] = 0.0;
        } else if (x < 0.0) {
            pos.values[i] = 0.0;
        } else {
            pos.values[i] *= 0.5;
            neg.values[i] *= 0.5;
        }
    }
    return {pos, neg};
}

TwoLineFunction u_exp_forward(const SampledFunction& f,
                              const HalfLineSpec& spec) {
    f.validate();
    spec.validate();
    const double reach = std::exp(spec.t_max);
    if (reach > f.x_max() || -reach < f.x_min)
        throw InterpolationError("u_exp_forward: e^{t_max} exceeds the x-grid");

    const Grid tg = spec.grid();
    TwoLineFunction out{
        SampledFunction{tg.x_min, tg.dx, std::vector<cplx>(tg.n)},
        SampledFunction{tg.x_min, tg.dx, std::vector<cplx>(tg.n)}};
    for (std::size_t j = 0; j < tg.n; ++j) {
        const double t = tg.x(j);
        const double xq = std::exp(t);
        const double half = std::exp(t / 2.0);
        out.plus.values[j] = lerp(f, xq) * half;
        out.minus.values[j] = lerp(f, -xq) * half;
    }
    return out;
}

SampledFunction u_exp_inverse(const TwoLineFunction& g, const Grid& x_grid) {
    g.plus.validate();
    g.minus.validate();
    x_grid.validate();

    SampledFunction out{x_grid.x_min, x_grid.dx, std::vector<cplx>(x_grid.n)};
    for (std::size_t i = 0; i < x_grid.n; ++i) {
        const double x = x_grid.x(i);
        if (x == 0.0) {
            out.values[i] = 0.0; // t -> -inf limit
            continue;
        }
        const SampledFunction& ch = x > 0.0 ? g.plus : g.minus;
        const double t = std::log(std::abs(x));
        if (t > ch.x_max())
            throw InterpolationError("u_exp_inverse: ln|x| beyond the t-grid");
        out.values[i] = lerp(ch, t) / std::sqrt(std::abs(x));
    }
    return out;
}

cplx phi_abgamma(cplx a, cplx b, double gamma, double x) {
    if (x == 0.0) throw DomainError("phi_abgamma: undefined at x = 0");
    const cplx power = std::exp(cplx(-0.5, gamma) * std::log(std::abs(x)));
    return (x > 0.0 ? a : b) * power;
}

cplx wlemma_eigenfunction(const lct::SL2Matrix& A, double gamma, double x) {
    A.validate();
    A.require_nonzero_b();
    if (A.beta == 0.0)
        throw DomainError("wlemma_eigenfunction: requires beta != 0");

    const cplx K = kI * A.beta / (2.0 * A.b);
    const cplx alpha_e{-0.5, gamma};
    const cplx v = (kI * x / A.b) / std::sqrt(K);
    return lct::kernel_constant(A.inverse()) *
           std::exp(-kI * A.a * x * x / (2.0 * A.b)) *
           std::pow(K, -(alpha_e + 1.0) / 2.0) * specfun::psi_alpha(alpha_e, v);
}

double plateau_window(double x, double x_flat, double x_zero) {
    const double ax = std::abs(x);
    if (ax <= x_flat) return 1.0;
    if (ax >= x_zero) return 0.0;
    const double c = std::cos((ax - x_flat) / (x_zero - x_flat) * kPi / 2.0);
    return c * c;
}

TwoLineFunction spectrum_map_pipeline(double omega, double a_param,
                                      const SampledFunction& psi,
                                      const HalfLineSpec& spec) {
    psi.validate();
    spec.validate();
    const lct::SL2Matrix A = lct::iho_matrix(omega, a_param);

    // u-grid wide enough for the t-grid reach, at the input resolution
    const double reach = std::exp(spec.t_max) + psi.dx;
    const std::size_t half = static_cast<std::size_t>(std::ceil(reach / psi.dx));
    const Grid u_grid{-psi.dx * static_cast<double>(half), psi.dx, 2 * half + 1};

    const SampledFunction w = lct::lct_apply_direct(A, psi, u_grid);
    return u_exp_forward(w, spec);
}

double dominant_frequency(const SampledFunction& channel, std::size_t pad_factor) {
    channel.validate();
    const std::size_t n = channel.size();
    const std::size_t p = fft::next_pow2(n * std::max<std::size_t>(pad_factor, 1));
    std::vector<cplx> buf(p, cplx(0.0));
    std::copy(channel.values.begin(), channel.values.end(), buf.begin());
    fft::transform_pow2(buf, -1);

    std::size_t best = 0;
    double best_mag = 0.0;
    for (std::size_t k = 0; k < p; ++k) {
        const double m = std::abs(buf[k]);
        if (m > best_mag) {
            best_mag = m;
            best = k;
        }
    }
    const double kk = best <= p / 2 ? static_cast<double>(best)
                                    : static_cast<double>(best) - static_cast<double>(p);
    return 2.0 * kPi * kk / (static_cast<double>(p) * channel.dx);
}

double frequency_bin_width(const SampledFunction& channel) {
    channel.validate();
    return 2.0 * kPi / (static_cast<double>(channel.size()) * channel.dx);
}

} // namespace iho::logmap
