#include "iho/rigged.hpp"

#include <algorithm>
#include <cmath>

namespace iho::rigged {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
} // namespace

double mu_weight(const RiggedWeight& w, double x) {
    const double ax = std::abs(x);
    if (ax <= 1.0) return 1.0;
    return 1.0 + std::pow(ax, -w.exponent);
}

cplx weighted_scalar_product(const SampledFunction& f, const SampledFunction& g,
                             unsigned n) {
    if (f.size() != g.size() || f.x_min != g.x_min || f.dx != g.dx)
        throw GridMismatch("weighted_scalar_product: grids differ");
    cplx total = 0.0;
    for (unsigned k = 0; k <= n; ++k) {
        cplx acc = 0.0;
        if (k == 0) {
            for (std::size_t i = 0; i < f.size(); ++i)
                acc += std::conj(f.values[i]) * g.values[i];
        } else {
            const RiggedWeight w = RiggedWeight::integer_order(k);
            for (std::size_t i = 0; i < f.size(); ++i)
                acc += std::conj(f.values[i]) * g.values[i] *
                       mu_weight(w, f.x(i));
        }
        total += acc * f.dx;
    }
    return total;
}

double phi_test_family(double epsilon, double x) {
    if (!(epsilon > 0.0))
        throw ValidationError("phi_test_family: epsilon must be > 0");
    return std::pow(1.0 + x * x, -0.25 - epsilon / 2.0);
}

cplx phi_chirped_witness(double epsilon, double alpha, double x) {
    const double phase = -alpha * x * x;
    return phi_test_family(epsilon, x) * cplx(std::cos(phase), std::sin(phase));
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Converged: return "Converged";
        case Verdict::Diverged: return "Diverged";
        default: return "Inconclusive";
    }
}

ConvergenceVerdict pairing_partials(cplx lambda, double omega,
                                    oscillator::Parity parity,
                                    const std::function<cplx(double)>& phi,
                                    const std::vector<double>& X_sequence,
                                    double refine) {
    if (X_sequence.size() < 3)
        throw ValidationError("pairing_partials: need >= 3 cutoffs");
    for (std::size_t k = 1; k < X_sequence.size(); ++k)
        if (!(X_sequence[k] > X_sequence[k - 1]))
            throw ValidationError("pairing_partials: X_sequence not increasing");

    const oscillator::EigenParams p{lambda, omega, +1, parity};
    p.validate();

    ConvergenceVerdict out;
    double x_done = 0.0;
    cplx acc_pos = 0.0, acc_neg = 0.0;
    const double alpha = std::abs(p.alpha());
    const double h0 = 0.02 / refine;
    for (double X : X_sequence) {
        // extend the running integrals instead of recomputing from 0
        double x = x_done;
        while (x < X) {
            double h =
                std::min(h0, kPi / (16.0 * alpha * std::max(x, 1.0)) / refine);
            if (h < 1e-12)
                throw QuadratureError("pairing_partials: step underflow");
            if (x + h > X) h = X - x;
            const double xm = x + h / 2.0;
            acc_pos += h * oscillator::kummer_part(p, xm) * std::conj(phi(xm));
            acc_neg += h * oscillator::kummer_part(p, -xm) * std::conj(phi(-xm));
            x += h;
        }
        x_done = X;
        out.partials.emplace_back(X, acc_pos + acc_neg);
    }

    std::vector<double> mags, incs;
    for (const auto& [X, v] : out.partials) mags.push_back(std::abs(v));
    for (std::size_t k = 1; k < out.partials.size(); ++k)
        incs.push_back(std::abs(out.partials[k].second - out.partials[k - 1].second));

    const double max_mag = *std::max_element(mags.begin(), mags.end());
    const bool decreasing =
        std::is_sorted(incs.rbegin(), incs.rend()); // non-increasing
    const bool increasing = std::is_sorted(incs.begin(), incs.end()) &&
                            incs.front() < incs.back();

    if (incs.back() < 1e-3 * max_mag && decreasing)
        out.verdict = Verdict::Converged; // threshold fast path
    else if (mags.back() > 10.0 * mags.front() && increasing)
        out.verdict = Verdict::Diverged; // threshold fast path
    else if (decreasing)
        out.verdict = Verdict::Converged;
    else if (increasing)
        out.verdict = Verdict::Diverged;
    else
        out.verdict = Verdict::Inconclusive;
    return out;
}

} // namespace iho::rigged
