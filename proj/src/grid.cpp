#include "iho/grid.hpp"

#include <cmath>

namespace iho {

cplx inner_product(const SampledFunction& f, const SampledFunction& g) {
    if (f.size() != g.size() || f.x_min != g.x_min || f.dx != g.dx)
        throw GridMismatch("inner_product: grids differ");
    cplx acc = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i)
        acc += std::conj(f.values[i]) * g.values[i];
    return acc * f.dx;
}

double norm(const SampledFunction& f) {
    double acc = 0.0;
    for (const cplx& v : f.values) acc += std::norm(v);
    return std::sqrt(acc * f.dx);
}

double l2_distance(const SampledFunction& f, const SampledFunction& g) {
    if (f.size() != g.size() || f.x_min != g.x_min || f.dx != g.dx)
        throw GridMismatch("l2_distance: grids differ");
    double acc = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i)
        acc += std::norm(f.values[i] - g.values[i]);
    return std::sqrt(acc * f.dx);
}

} // namespace iho
