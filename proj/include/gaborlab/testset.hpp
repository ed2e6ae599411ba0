#pragma once

#include <cmath>
#include <complex>
#include <numbers>

#include "gaborlab/fourier.hpp"
#include "gaborlab/grid.hpp"
#include "gaborlab/rng.hpp"

namespace gaborlab {

// Deterministic test-field builders. Every draw comes from the counter
// generator, so a (seed, grid) pair pins the field bit-for-bit.

// Band-limited random field: seeded Gaussian spectrum under a decay envelope,
// then a spatial Gaussian envelope, normalized to unit L2. d = 1.
inline Field random_smooth_field(const Grid& g, CounterRng& rng, double sigma_xi = 3.0, double sigma_x = -1.0) {
    if (sigma_x <= 0.0) sigma_x = g.L / 4.0;
    Grid dual = g.dual();
    Field spec(dual);
    for (int m = 0; m < g.N; ++m) {
        const double xi = dual.x(m);
        spec.values[static_cast<std::size_t>(m)] =
            rng.next_complex_gaussian() * std::exp(-0.5 * xi * xi / (sigma_xi * sigma_xi));
    }
    Field f = inverse_fourier(spec);
    for (int k = 0; k < g.N; ++k) {
        const double x = g.x(k);
        f.values[static_cast<std::size_t>(k)] *= std::exp(-0.5 * x * x / (sigma_x * sigma_x));
    }
    const double n = l2_norm(f);
    for (auto& v : f.values) v /= n;
    return f;
}

// Gaussian times chirp with seeded center, width, and phase slope/curvature.
inline Field gaussian_chirp_field(const Grid& g, CounterRng& rng) {
    const double a = rng.next_uniform(0.5, 2.0);
    const double x0 = rng.next_uniform(-1.5, 1.5);
    const double b = rng.next_uniform(-3.0, 3.0);
    const double c = rng.next_uniform(-1.0, 1.0);
    const double amp = rng.next_uniform(0.5, 1.5);
    Field f(g);
    for (int k = 0; k < g.N; ++k) {
        const double x = g.x(k);
        const double u = x - x0;
        f.values[static_cast<std::size_t>(k)] = std::polar(amp * std::exp(-a * u * u), b * x + c * x * x);
    }
    return f;
}

// L2-normalized Hermite function h_n(x).
inline double hermite_function(int n, double x) {
    double h0 = std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * x * x);
    if (n == 0) return h0;
    double h1 = std::sqrt(2.0) * x * h0;
    for (int k = 2; k <= n; ++k) {
        const double h2 = std::sqrt(2.0 / k) * x * h1 - std::sqrt((k - 1.0) / k) * h0;
        h0 = h1;
        h1 = h2;
    }
    return h1;
}

inline double rel_l2_error(const Field& got, const Field& want) {
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < got.values.size(); ++i) {
        num += std::norm(got.values[i] - want.values[i]);
        den += std::norm(want.values[i]);
    }
    return den > 0.0 ? std::sqrt(num / den) : std::sqrt(num);
}

inline double rel_l2_error(const PhaseField& got, const PhaseField& want) {
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < got.values.size(); ++i) {
        num += std::norm(got.values[i] - want.values[i]);
        den += std::norm(want.values[i]);
    }
    return den > 0.0 ? std::sqrt(num / den) : std::sqrt(num);
}

}  // namespace gaborlab
