// Wall-time comparison of the three canonical-transform evaluation paths:
// serial direct quadrature, OpenMP direct quadrature, chirp-z fast path.

#include <chrono>
#include <cmath>
#include <cstdio>

#include "iho/lct.hpp"

using namespace iho;
using cplx = std::complex<double>;

namespace {

template <class Fn>
double time_s(Fn&& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

} // namespace

int main() {
    const lct::SL2Matrix A{0.8, 0.9, -0.6, 0.575};
    std::printf("%8s %12s %12s %12s %10s %10s\n", "N", "serial[s]", "openmp[s]",
                "fast[s]", "omp-speed", "fast-speed");
    for (const std::size_t n : {1024u, 4096u, 16384u}) {
        const Grid g{-16.0, 32.0 / static_cast<double>(n), n};
        const SampledFunction f = sample(g, [](double x) {
            return cplx(std::exp(-x * x / 2.0), 0.0);
        });
        const Grid ug = lct::fast_output_grid(A, f);

        SampledFunction out_s, out_p, out_f;
        const double ts =
            time_s([&] { out_s = lct::lct_apply_direct_serial(A, f, ug); });
        const double tp = time_s([&] { out_p = lct::lct_apply_direct(A, f, ug); });
        const double tf = time_s([&] { out_f = lct::lct_apply_fast(A, f); });

        double dev = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            dev = std::max(dev, std::abs(out_s.values[i] - out_f.values[i]));
        std::printf("%8zu %12.4f %12.4f %12.4f %9.1fx %9.1fx   (max dev %.2e)\n",
                    n, ts, tp, tf, ts / tp, ts / tf, dev);
    }
    return 0;
}
