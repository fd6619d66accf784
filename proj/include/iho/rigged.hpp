#pragma once

#include <complex>
#include <functional>
#include <utility>
#include <vector>

#include "iho/grid.hpp"
#include "iho/oscillator.hpp"

namespace iho::rigged {

using cplx = std::complex<double>;

// Weight label: either the integer family mu_n (exponent 1/n) or the
// continuous variant mu_eps (exponent eps).
struct RiggedWeight {
    double exponent = 1.0;

    static RiggedWeight integer_order(unsigned n) {
        if (n < 1) throw ValidationError("RiggedWeight: n must be >= 1");
        return RiggedWeight{1.0 / static_cast<double>(n)};
    }
    static RiggedWeight epsilon_order(double eps) {
        if (!(eps > 0.0)) throw ValidationError("RiggedWeight: eps must be > 0");
        return RiggedWeight{eps};
    }
};

// mu(x) = 1 for |x| <= 1, 1 + |x|^{-exponent} for |x| > 1.
double mu_weight(const RiggedWeight& w, double x);

// Sum_{k=0}^{n} <f, g>_k: the unweighted L2 product at k = 0 plus the
// mu_k-weighted products for k = 1..n, all on the common grid.
cplx weighted_scalar_product(const SampledFunction& f, const SampledFunction& g,
                             unsigned n);

// phi_eps(x) = (1 + x^2)^{-1/4 - eps/2}: lies in every weighted space
// L^2_{mu_delta} (tail integrand x^{-1-eps}(1 + x^{-delta})).
double phi_test_family(double epsilon, double x);

// Chirp-matched witness phi_eps(x) e^{-i alpha x^2}: same modulus class as
// phi_test_family, with the phase aligned to the growing branch of the
// eigenfunction asymptotics so divergence at Im(lambda) != 0 is visible in
// the partial integrals.
cplx phi_chirped_witness(double epsilon, double alpha, double x);

enum class Verdict { Converged, Diverged, Inconclusive };

struct ConvergenceVerdict {
    Verdict verdict = Verdict::Inconclusive;
    std::vector<std::pair<double, cplx>> partials; // (X, I(X))
};

const char* to_string(Verdict v);

// Partial pairings I(X) = int_{-X}^{X} F_{parity,alpha,lambda}(x) conj(phi(x)) dx
// for each X in the increasing sequence, by midpoint quadrature with the step
// tied to the local chirp rate (>= 16 samples per oscillation of alpha x^2).
// Verdict: increments |I(X_{k+1}) - I(X_k)| decreasing -> Converged (fast path
// when the last increment is below 1e-3 max|I|), increasing -> Diverged (fast
// path when |I| has grown 10x from the first partial), mixed -> Inconclusive.
// `refine` scales the base step down (for resolution-stability checks).
ConvergenceVerdict pairing_partials(cplx lambda, double omega,
                                    oscillator::Parity parity,
                                    const std::function<cplx(double)>& phi,
                                    const std::vector<double>& X_sequence,
                                    double refine = 1.0);

} // namespace iho::rigged
