#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "iho/errors.hpp"

namespace iho {

using cplx = std::complex<double>;

// Uniform real grid x_i = x_min + i*dx, i = 0..n-1.
struct Grid {
    double x_min = 0.0;
    double dx = 1.0;
    std::size_t n = 2;

    double x(std::size_t i) const { return x_min + dx * static_cast<double>(i); }
    double x_max() const { return x(n - 1); }

    void validate() const {
        if (!(dx > 0.0) || n < 2)
            throw ValidationError("Grid: need dx > 0 and n >= 2");
    }

    static Grid from_range(double x_min, double x_max, std::size_t n) {
        if (n < 2 || !(x_max > x_min))
            throw ValidationError("Grid: need x_max > x_min and n >= 2");
        return Grid{x_min, (x_max - x_min) / static_cast<double>(n - 1), n};
    }
};

// Complex samples of a function on a uniform grid.
struct SampledFunction {
    double x_min = 0.0;
    double dx = 1.0;
    std::vector<cplx> values;

    std::size_t size() const { return values.size(); }
    double x(std::size_t i) const { return x_min + dx * static_cast<double>(i); }
    double x_max() const { return x(size() - 1); }
    Grid grid() const { return Grid{x_min, dx, size()}; }

    void validate() const {
        if (!(dx > 0.0) || values.size() < 2)
            throw ValidationError("SampledFunction: need dx > 0 and length >= 2");
    }
};

// Discrete L2 inner product dx * sum conj(f_i) g_i (conjugate-linear in the
// first slot).
cplx inner_product(const SampledFunction& f, const SampledFunction& g);

double norm(const SampledFunction& f);

// sqrt(dx * sum |f_i - g_i|^2); grids must agree.
double l2_distance(const SampledFunction& f, const SampledFunction& g);

template <class Fn>
SampledFunction sample(const Grid& g, Fn&& fn) {
    g.validate();
    SampledFunction out{g.x_min, g.dx, std::vector<cplx>(g.n)};
    for (std::size_t i = 0; i < g.n; ++i) out.values[i] = fn(g.x(i));
    return out;
}

} // namespace iho
