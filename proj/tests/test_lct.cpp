#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "iho/lct.hpp"

using namespace iho;
using namespace iho::lct;
using cplx = std::complex<double>;

namespace {

const Grid kGrid{-16.0, 32.0 / 4096.0, 4096};

SampledFunction gaussian(double sigma = 1.0) {
    return sample(kGrid, [sigma](double x) {
        return cplx(std::exp(-x * x / (2.0 * sigma * sigma)), 0.0);
    });
}

SampledFunction probe_g() {
    return sample(kGrid, [](double x) {
        return cplx(x, 0.3) * std::exp(-x * x / 3.0);
    });
}

} // namespace

TEST_CASE("SL2 validation and inverse") {
    CHECK_THROWS_AS((SL2Matrix{1.0, 0.0, 0.0, 2.0}.validate()), ValidationError);
    CHECK_THROWS_AS(kernel_constant(SL2Matrix::identity()), DomainError);

    const SL2Matrix A{0.6, 1.1, -0.5, 0.75};
    CHECK(A.det() == doctest::Approx(1.0).epsilon(1e-14));
    const SL2Matrix P = compose(A, A.inverse());
    CHECK(P.a == doctest::Approx(1.0));
    CHECK(P.b == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("Fourier case reduces to the classical transform of a Gaussian") {
    // W_F gaussian(sigma=1)(u) = sqrt(-i) e^{-u^2/2} (principal branch)
    const SampledFunction f = gaussian();
    const SampledFunction w = lct_apply_direct(SL2Matrix::fourier(), f, kGrid);
    const cplx root_mi = std::sqrt(cplx(0.0, -1.0));
    for (std::size_t i = 1024; i < 3072; i += 256) {
        const double u = kGrid.x(i);
        const cplx want = root_mi * std::exp(-u * u / 2.0);
        CHECK(std::abs(w.values[i] - want) < 1e-10);
    }
}

TEST_CASE("serial and parallel direct paths agree bitwise-close") {
    const SampledFunction f = probe_g();
    const SL2Matrix A{0.8, 0.9, -0.6, 0.575};
    A.validate(1e-9);
    const SampledFunction s = lct_apply_direct_serial(A, f, kGrid);
    const SampledFunction p = lct_apply_direct(A, f, kGrid);
    CHECK(l2_distance(s, p) < 1e-12);
}

TEST_CASE("fast path matches the direct quadrature") {
    const SampledFunction f = gaussian(1.3);
    for (const SL2Matrix& A :
         {SL2Matrix::fourier(), SL2Matrix{0.8, 0.9, -0.6, 0.575},
          SL2Matrix{1.0, -0.7, 0.3, 0.79}}) {
        const SampledFunction fast = lct_apply_fast(A, f);
        const SampledFunction direct = lct_apply_direct(A, f, fast.grid());
        CHECK(l2_distance(fast, direct) / norm(direct) < 1e-10);
    }
}

TEST_CASE("unitarity on a Gaussian pair") {
    const SL2Matrix A{0.8, 0.9, -0.6, 0.575};
    CHECK(unitarity_check(A, gaussian(), probe_g()) < 1e-8);
}

TEST_CASE("group law away from the metaplectic sign flip") {
    // sign(b1) != sign(b2): the composition law holds with phase +1
    const SL2Matrix A1{0.9, 0.8, -0.5, 0.666666666666666667};
    const SL2Matrix A2{1.1, -0.6, 0.4, 0.690909090909090909};
    A1.validate(1e-9);
    A2.validate(1e-9);
    const SampledFunction f = gaussian();
    CHECK(group_law_check(A2, A1, f) / norm(f) < 1e-6);
}

TEST_CASE("metaplectic phase is exactly -1 in the anomalous sector") {
    // sign(b1) = sign(b2) = +, sign(b of the product) = -: the two-step
    // transform equals minus the one-step transform.
    const SL2Matrix M1{0.0, 1.0, -1.0, 0.0};
    const SL2Matrix M2{-1.0, 2.0, -1.0, 1.0};
    const SL2Matrix M12 = compose(M2, M1);
    REQUIRE(M1.b > 0);
    REQUIRE(M2.b > 0);
    REQUIRE(M12.b < 0);

    const SampledFunction f = gaussian();
    const Grid g = f.grid();
    const SampledFunction two =
        lct_apply_direct(M2, lct_apply_direct(M1, f, g), g);
    SampledFunction one = lct_apply_direct(M12, f, g);
    for (cplx& v : one.values) v = -v;
    CHECK(l2_distance(two, one) / norm(f) < 1e-6);
}

TEST_CASE("quadratic form coefficients and reconstruction") {
    const SL2Matrix A{0.8, 0.9, -0.6, 0.575};
    const QuadraticForm Q = quadratic_coeffs(A);
    CHECK(Q.E * Q.G - Q.F * Q.F == doctest::Approx(-1.0).epsilon(1e-12));
    const SL2Matrix R = matrix_from_quadratic(Q, A.a);
    CHECK(R.b == doctest::Approx(A.b));
    CHECK(R.alpha == doctest::Approx(A.alpha));
    CHECK(R.beta == doctest::Approx(A.beta));
}

TEST_CASE("iho matrix realizes (-omega, 0, 1/omega)") {
    for (const double omega : {1.0, 2.0}) {
        for (const double a : {0.7, 1.0, -1.5}) {
            const SL2Matrix A = iho_matrix(omega, a);
            A.validate(1e-12);
            const QuadraticForm Q = quadratic_coeffs(A);
            CHECK(Q.E == doctest::Approx(-omega).epsilon(1e-12));
            CHECK(Q.F == doctest::Approx(0.0).epsilon(1e-12));
            CHECK(Q.G == doctest::Approx(1.0 / omega).epsilon(1e-12));
        }
    }
    CHECK_THROWS_AS(iho_matrix(-1.0, 1.0), DomainError);
    CHECK_THROWS_AS(iho_matrix(1.0, 0.0), DomainError);
}
