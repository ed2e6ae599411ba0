#pragma once

#include <cmath>
#include <string>

#include "gaborlab/grid.hpp"

namespace gaborlab {

namespace detail {

// C-infinity step: S(t) = g(t) / (g(t) + g(1-t)) with g(t) = e^{-1/t} on t > 0.
// S(t) + S(1-t) = 1 identically, which is what makes the plateau windows an
// exact partition of unity.
inline double smoothstep(double t) {
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    const double a = std::exp(-1.0 / t);
    const double b = std::exp(-1.0 / (1.0 - t));
    return a / (a + b);
}

// plateau bump: 1 on [-inner, inner], 0 outside (-outer, outer)
inline double plateau(double x, double inner, double outer) {
    const double t = (outer - std::abs(x)) / (outer - inner);
    return smoothstep(t);
}

}  // namespace detail

// Gabor pair for the lattice Z^d x (pi Z^d):
//   phi: supp in [-3/4,3/4]^d, == 1 on [-1/4,1/4]^d, sum_j phi(.-j) = 1
//   psi: supp in [-1,1]^d,     == 1 on [-3/4,3/4]^d  (so psi == 1 on supp phi)
struct WindowPair {
    Field phi;
    Field psi;
};

inline WindowPair make_window_pair(const Grid& g) {
    if (g.N / (2.0 * g.L) < 16.0)
        throw precondition_error("window-resolution", "grid must resolve [-1,1]^d with >= 16 points per unit");

    auto phi_axis = [](double x) {
        // normalize by the shift sum; the smoothstep construction makes the
        // denominator 1 up to rounding, division removes that rounding
        const double raw = detail::plateau(x, 0.25, 0.75);
        double denom = 0.0;
        for (int j = static_cast<int>(std::floor(x)) - 1; j <= static_cast<int>(std::ceil(x)) + 1; ++j)
            denom += detail::plateau(x - j, 0.25, 0.75);
        return raw / denom;
    };
    auto psi_axis = [](double x) { return detail::plateau(x, 0.75, 1.0); };

    Field phi(g), psi(g);
    if (g.d == 1) {
        for (int k = 0; k < g.N; ++k) {
            phi.values[static_cast<std::size_t>(k)] = cd{phi_axis(g.x(k)), 0.0};
            psi.values[static_cast<std::size_t>(k)] = cd{psi_axis(g.x(k)), 0.0};
        }
    } else {
        for (int k0 = 0; k0 < g.N; ++k0)
            for (int k1 = 0; k1 < g.N; ++k1) {
                phi.at(k0, k1) = cd{phi_axis(g.x(k0)) * phi_axis(g.x(k1)), 0.0};
                psi.at(k0, k1) = cd{psi_axis(g.x(k0)) * psi_axis(g.x(k1)), 0.0};
            }
    }
    return WindowPair{std::move(phi), std::move(psi)};
}

// normalized real Gaussian, the default lifting window
inline Field gaussian_window(const Grid& g) {
    Field w(g);
    const double c = std::pow(std::numbers::pi, -0.25 * g.d);
    if (g.d == 1) {
        for (int k = 0; k < g.N; ++k)
            w.values[static_cast<std::size_t>(k)] = cd{c * std::exp(-0.5 * g.x(k) * g.x(k)), 0.0};
    } else {
        for (int k0 = 0; k0 < g.N; ++k0)
            for (int k1 = 0; k1 < g.N; ++k1)
                w.at(k0, k1) = cd{c * std::exp(-0.5 * (g.x(k0) * g.x(k0) + g.x(k1) * g.x(k1))), 0.0};
    }
    return w;
}

// max |w| on |x|_inf >= L/2; windows used with periodic shifts must decay
// below 1e-14 there for wrap-around to be negligible
inline double window_wrap_mass(const Field& w) {
    const Grid& g = w.grid;
    double m = 0.0;
    if (g.d == 1) {
        for (int k = 0; k < g.N; ++k)
            if (std::abs(g.x(k)) >= 0.5 * g.L) m = std::max(m, std::abs(w.values[static_cast<std::size_t>(k)]));
    } else {
        for (int k0 = 0; k0 < g.N; ++k0)
            for (int k1 = 0; k1 < g.N; ++k1)
                if (std::max(std::abs(g.x(k0)), std::abs(g.x(k1))) >= 0.5 * g.L)
                    m = std::max(m, std::abs(w.at(k0, k1)));
    }
    return m;
}

}  // namespace gaborlab
