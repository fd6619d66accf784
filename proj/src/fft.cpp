#include "iho/fft.hpp"

#include <cmath>
#include <stdexcept>

namespace iho::fft {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

void transform_pow2(std::vector<cplx>& a, int sign) {
    const std::size_t n = a.size();
    if (n == 0 || (n & (n - 1)) != 0)
        throw std::invalid_argument("transform_pow2: size must be a power of two");

    // bit reversal
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }

    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = sign * 2.0 * kPi / static_cast<double>(len);
        const cplx wl(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            cplx w = 1.0;
            for (std::size_t k = 0; k < len / 2; ++k) {
                const cplx u = a[i + k];
                const cplx v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wl;
            }
        }
    }
}

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

std::vector<cplx> chirp_z(const std::vector<cplx>& a, double theta, double k0,
                          std::size_t m) {
    const std::size_t n = a.size();
    // w^{(k+k0)n} = w^{k0 n} w^{kn};  kn = (k^2 + n^2 - (k-n)^2)/2.
    const std::size_t p = next_pow2(n + m);

    auto half_chirp = [&](double q) {
        // e^{i theta q^2 / 2}; q^2 can be large, reduce mod 2pi via fmod on
        // the angle to keep sin/cos accurate.
        const double ang = std::fmod(theta * q * q / 2.0, 2.0 * kPi);
        return cplx(std::cos(ang), std::sin(ang));
    };

    std::vector<cplx> u(p, cplx(0.0));
    for (std::size_t i = 0; i < n; ++i) {
        const double d = static_cast<double>(i);
        const double ang = std::fmod(theta * k0 * d, 2.0 * kPi);
        u[i] = a[i] * cplx(std::cos(ang), std::sin(ang)) * half_chirp(d);
    }

    // kernel v_j = e^{-i theta j^2/2}, j = -(n-1)..(m-1), wrapped into p.
    std::vector<cplx> v(p, cplx(0.0));
    for (std::size_t k = 0; k < m; ++k)
        v[k] = std::conj(half_chirp(static_cast<double>(k)));
    for (std::size_t i = 1; i < n; ++i)
        v[p - i] = std::conj(half_chirp(static_cast<double>(i)));

    transform_pow2(u, -1);
    transform_pow2(v, -1);
    for (std::size_t i = 0; i < p; ++i) u[i] *= v[i];
    transform_pow2(u, +1);

    std::vector<cplx> out(m);
    const double scale = 1.0 / static_cast<double>(p);
    for (std::size_t k = 0; k < m; ++k)
        out[k] = u[k] * scale * half_chirp(static_cast<double>(k));
    return out;
}

} // namespace iho::fft
