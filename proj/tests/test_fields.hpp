#pragma once

// Shared builders for deterministic test fields.

#include <cmath>
#include <complex>
#include <functional>

#include "gaborlab/fourier.hpp"
#include "gaborlab/grid.hpp"
#include "gaborlab/rng.hpp"

namespace testfields {

using gaborlab::cd;
using gaborlab::CounterRng;
using gaborlab::Field;
using gaborlab::Grid;

inline Field sampled(const Grid& g, const std::function<cd(double)>& fn) {
    Field f(g);
    for (int k = 0; k < g.N; ++k) f.values[static_cast<std::size_t>(k)] = fn(g.x(k));
    return f;
}

inline Field sampled2(const Grid& g, const std::function<cd(double, double)>& fn) {
    Field f(g);
    for (int k0 = 0; k0 < g.N; ++k0)
        for (int k1 = 0; k1 < g.N; ++k1) f.at(k0, k1) = fn(g.x(k0), g.x(k1));
    return f;
}

// Band-limited random field: seeded Gaussian spectrum with decay envelope,
// then a spatial Gaussian envelope so the box boundary is negligible.
// Unit L2 norm. d=1 grids only.
inline Field random_smooth(const Grid& g, CounterRng& rng, double sigma_xi = 3.0, double sigma_x = -1.0) {
    if (sigma_x <= 0.0) sigma_x = g.L / 4.0;
    Grid dual = g.dual();
    Field spec(dual);
    for (int m = 0; m < g.N; ++m) {
        const double xi = dual.x(m);
        spec.values[static_cast<std::size_t>(m)] =
            rng.next_complex_gaussian() * std::exp(-0.5 * xi * xi / (sigma_xi * sigma_xi));
    }
    Field f = gaborlab::inverse_fourier(spec);
    for (int k = 0; k < g.N; ++k) {
        const double x = g.x(k);
        f.values[static_cast<std::size_t>(k)] *= std::exp(-0.5 * x * x / (sigma_x * sigma_x));
    }
    const double n = gaborlab::l2_norm(f);
    for (auto& v : f.values) v /= n;
    return f;
}

// Gaussian times chirp with seeded parameters; decays to ~1e-14 at |x| = L
// for the default ranges on L >= 8 grids.
inline Field gaussian_chirp(const Grid& g, CounterRng& rng) {
    const double a = rng.next_uniform(0.5, 2.0);
    const double x0 = rng.next_uniform(-1.5, 1.5);
    const double b = rng.next_uniform(-3.0, 3.0);
    const double c = rng.next_uniform(-1.0, 1.0);
    const double amp = rng.next_uniform(0.5, 1.5);
    return sampled(g, [=](double x) {
        const double u = x - x0;
        return std::polar(amp * std::exp(-a * u * u), b * x + c * x * x);
    });
}

inline double rel_l2_diff(const Field& a, const Field& b) {
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i) {
        num += std::norm(a.values[i] - b.values[i]);
        den += std::norm(b.values[i]);
    }
    return den > 0.0 ? std::sqrt(num / den) : std::sqrt(num);
}

inline double rel_l2_diff(const gaborlab::PhaseField& a, const gaborlab::PhaseField& b) {
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i) {
        num += std::norm(a.values[i] - b.values[i]);
        den += std::norm(b.values[i]);
    }
    return den > 0.0 ? std::sqrt(num / den) : std::sqrt(num);
}

// normalized Hermite functions h_0..h_n at x (physicists', L2-orthonormal)
inline double hermite_fn(int n, double x) {
    double h0 = std::pow(M_PI, -0.25) * std::exp(-0.5 * x * x);
    if (n == 0) return h0;
    double h1 = std::sqrt(2.0) * x * h0;
    if (n == 1) return h1;
    for (int k = 2; k <= n; ++k) {
        const double h2 = std::sqrt(2.0 / k) * x * h1 - std::sqrt((k - 1.0) / k) * h0;
        h0 = h1;
        h1 = h2;
    }
    return h1;
}

}  // namespace testfields
