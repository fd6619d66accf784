#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "iho/oscillator.hpp"
#include "iho/wronskian.hpp"

using namespace iho;
using namespace iho::wronskian;
using cplx = std::complex<double>;

namespace {
const cplx kI{0.0, 1.0};

// Explicit basis function x^{-1/2} e^{s i g_c(x)}, g_c = alpha x^2/2 +
// (c / 2 alpha) ln x.
cfun basis_fn(int s, cplx c, double alpha) {
    return [s, c, alpha](double x) {
        const cplx g = alpha * x * x / 2.0 + c / (2.0 * alpha) * std::log(x);
        return std::exp(static_cast<double>(s) * kI * g) / std::sqrt(x);
    };
}

} // namespace

TEST_CASE("numeric Wronskian sanity") {
    const cfun s = [](double x) { return cplx(std::sin(x), 0.0); };
    const cfun c = [](double x) { return cplx(std::cos(x), 0.0); };
    CHECK(std::abs(wronskian_numeric(s, c, 0.7) - cplx(-1.0)) < 1e-9);
    CHECK(wronskian_numeric(s, s, 1.3) == cplx(0.0));

    const cfun ep = [](double x) { return std::exp(kI * x); };
    const cfun em = [](double x) { return std::exp(-kI * x); };
    CHECK(std::abs(wronskian_numeric(ep, em, 2.0) - cplx(0.0, -2.0)) < 1e-9);

    // antisymmetry as computed
    const cplx w1 = wronskian_numeric(s, c, 0.7);
    const cplx w2 = wronskian_numeric(c, s, 0.7);
    CHECK(w1 == -w2);
}

TEST_CASE("closed forms match finite differences of the explicit basis") {
    const cplx a = 1.0, b = 2.0;
    const double alpha = 1.0;
    for (const double x : {2.0, 5.0, 10.0, 50.0}) {
        for (const BasisSigns signs :
             {BasisSigns{-1, +1}, BasisSigns{+1, +1}, BasisSigns{-1, -1},
              BasisSigns{+1, -1}}) {
            const cplx closed = basis_wronskian_closed(signs, a, b, alpha, x);
            // orientation: s2 tags the a-labelled slot, s1 the b-labelled one
            const cplx numeric = wronskian_numeric(
                basis_fn(signs.s2, a, alpha), basis_fn(signs.s1, b, alpha), x,
                1e-5);
            CHECK(std::abs(closed - numeric) < 1e-6 * (1.0 + std::abs(closed)));
        }
    }
}

TEST_CASE("degenerate and asymptotic structure") {
    CHECK(basis_wronskian_closed(BasisSigns{+1, +1}, 1.5, 1.5, 1.0, 3.0) ==
          cplx(0.0));
    // 1/x^2 term dies off: |W_{-+}| -> 2|alpha|
    const double big = std::abs(
        basis_wronskian_closed(BasisSigns{-1, +1}, 1.0, 2.0, 1.0, 1e4));
    CHECK(big == doctest::Approx(2.0).epsilon(1e-6));
    CHECK_THROWS_AS(basis_wronskian_closed(BasisSigns{-1, +1}, 1.0, 2.0, 1.0, -1.0),
                    DomainError);
    CHECK_THROWS_AS(basis_wronskian_closed(BasisSigns{0, 1}, 1.0, 2.0, 1.0, 1.0),
                    ValidationError);
}

TEST_CASE("conjugation symmetry for real labels") {
    const cplx a = 0.7, b = 1.9;
    for (const double x : {2.0, 8.0}) {
        CHECK(basis_wronskian_closed(BasisSigns{-1, -1}, a, b, 1.0, x) ==
              std::conj(basis_wronskian_closed(BasisSigns{+1, +1}, a, b, 1.0, x)));
        CHECK(basis_wronskian_closed(BasisSigns{+1, -1}, a, b, 1.0, x) ==
              std::conj(basis_wronskian_closed(BasisSigns{-1, +1}, a, b, 1.0, x)));
    }
}

TEST_CASE("product identity Wr(fg, fh) = f^2 Wr(g, h)") {
    const cfun id = [](double x) { return cplx(x, 0.0); };
    const cfun s = [](double x) { return cplx(std::sin(x), 0.0); };
    const cfun c = [](double x) { return cplx(std::cos(x), 0.0); };
    CHECK(product_identity_check(id, s, c, 1.0) < 1e-6);

    const cfun chirp = [](double x) { return std::exp(kI * (x * x / 2.0)); };
    const cfun ep = [](double x) { return std::exp(kI * x); };
    const cfun em = [](double x) { return std::exp(-kI * x); };
    CHECK(product_identity_check(chirp, ep, em, 2.0) < 1e-6);

    const cfun one = [](double) { return cplx(1.0); };
    CHECK(product_identity_check(one, s, c, 0.4) < 1e-12);
}

TEST_CASE("bilinear expansion against the direct numeric Wronskian") {
    const double alpha = 1.0, x = 10.0;
    const cplx a = 1.0, b = 1.3;
    const auto amp = [alpha](cplx lam) {
        return oscillator::amplitude(oscillator::EigenParams{
            lam, alpha, +1, oscillator::Parity::Even});
    };
    const cplx A_a = amp(a), A_b = amp(b);

    const cfun F_a = [&](double t) {
        return A_a * basis_fn(+1, a, alpha)(t) +
               std::conj(A_a) * basis_fn(-1, a, alpha)(t);
    };
    const cfun F_b_conj = [&](double t) {
        return std::conj(A_b * basis_fn(+1, b, alpha)(t) +
                         std::conj(A_b) * basis_fn(-1, b, alpha)(t));
    };

    const cplx expanded = bilinear_expand(A_a, A_b, a, b, alpha, x);
    const cplx numeric = wronskian_numeric(F_a, F_b_conj, x, 1e-5);
    CHECK(std::abs(expanded - numeric) / std::abs(numeric) < 1e-4);

    CHECK(bilinear_expand(0.0, 0.0, a, b, alpha, x) == cplx(0.0));
}

TEST_CASE("principal-value grid construction") {
    const auto g = make_pv_grid(1.0, 0.5, 0.1);
    REQUIRE(g.size() == 10);
    CHECK(g.front() == doctest::Approx(0.55));
    CHECK(g.back() == doctest::Approx(1.45));
    for (std::size_t k = 0; k < g.size(); ++k)
        CHECK(g[k] + g[g.size() - 1 - k] == doctest::Approx(2.0));
}

TEST_CASE("delta normalization probe") {
    const double a = 1.0, alpha = 1.0, sigma = 1.0;
    const auto A_of = [alpha](double b) {
        return oscillator::amplitude(oscillator::EigenParams{
            cplx(b, 0.0), alpha, +1, oscillator::Parity::Even});
    };
    const auto rho = [a, sigma](double b) {
        const double s = (b - a) / sigma;
        return std::exp(-0.5 * s * s) /
               (sigma * std::sqrt(2.0 * 3.141592653589793));
    };
    const auto b_grid = make_pv_grid(a, 6.0 * sigma, 0.005);

    const double r3 = delta_normalization_probe(a, alpha, A_of, rho, 1e3, b_grid);
    CHECK(std::abs(r3 - 1.0) < 0.05);

    // asymmetric grid rejected
    auto bad = b_grid;
    bad.pop_back();
    CHECK_THROWS_AS(delta_normalization_probe(a, alpha, A_of, rho, 1e3, bad),
                    QuadratureError);

    // density centered far from a: sifting kills the integral
    const auto rho_far = [a, sigma](double b) {
        const double s = (b - (a + 10.0)) / sigma;
        return std::exp(-0.5 * s * s) /
               (sigma * std::sqrt(2.0 * 3.141592653589793));
    };
    const double far =
        delta_normalization_probe(a, alpha, A_of, rho_far, 1e3, b_grid) *
        rho_far(a); // undo the 1/rho(a) scaling to compare numerators
    const double centered = r3 * rho(a);
    CHECK(far < 0.05 * centered);
}
