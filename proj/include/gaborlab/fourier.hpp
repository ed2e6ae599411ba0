#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "gaborlab/grid.hpp"

namespace gaborlab {

namespace detail {

// Forward: out[m] = (2pi)^{-1/2} h * sum_k in[k] e^{-i x_k xi_m}, frequency stored
// in natural order (array index m <-> xi = (m - N/2)*dxi). With x_k = -L + k h this
// is (-1)^{m'} times DFT bin (m' mod N), m' = m - N/2.
inline void fourier_line(std::vector<cd>& line, double L, bool inverse) {
    const int N = static_cast<int>(line.size());
    const double h = 2.0 * L / N;
    const double dxi = std::numbers::pi / L;
    const double c = 1.0 / std::sqrt(2.0 * std::numbers::pi);
    std::vector<cd> buf(line.size());
    if (!inverse) {
        buf = line;
        dft_inplace(buf, -1);
        for (int m = 0; m < N; ++m) {
            const int mp = m - N / 2;
            const double sgn = (wrap_index(mp, 2) == 0) ? 1.0 : -1.0;
            line[static_cast<std::size_t>(m)] = c * h * sgn * buf[static_cast<std::size_t>(wrap_index(mp, N))];
        }
    } else {
        for (int m = 0; m < N; ++m) {
            const int mp = m - N / 2;
            const double sgn = (wrap_index(mp, 2) == 0) ? 1.0 : -1.0;
            buf[static_cast<std::size_t>(wrap_index(mp, N))] = sgn * line[static_cast<std::size_t>(m)];
        }
        dft_inplace(buf, +1);
        for (int k = 0; k < N; ++k) line[static_cast<std::size_t>(k)] = c * dxi * buf[static_cast<std::size_t>(k)];
    }
}

// Apply fourier_line along one axis of a row-major d-dim array (d <= 2).
inline void fourier_axis(std::vector<cd>& v, int d, int N, int axis, double L, bool inverse) {
    if (d == 1) {
        fourier_line(v, L, inverse);
        return;
    }
    std::vector<cd> line(static_cast<std::size_t>(N));
    if (axis == 0) {
        for (int j = 0; j < N; ++j) {
            for (int i = 0; i < N; ++i) line[static_cast<std::size_t>(i)] = v[static_cast<std::size_t>(i) * N + j];
            fourier_line(line, L, inverse);
            for (int i = 0; i < N; ++i) v[static_cast<std::size_t>(i) * N + j] = line[static_cast<std::size_t>(i)];
        }
    } else {
        for (int i = 0; i < N; ++i) {
            for (int j = 0; j < N; ++j) line[static_cast<std::size_t>(j)] = v[static_cast<std::size_t>(i) * N + j];
            fourier_line(line, L, inverse);
            for (int j = 0; j < N; ++j) v[static_cast<std::size_t>(i) * N + j] = line[static_cast<std::size_t>(j)];
        }
    }
}

}  // namespace detail

// (2pi)^{-d/2}-normalized Fourier transform, rectangle-rule realization of the
// integral on the sampling grid. Unitary between the grid and its dual:
// inverse_fourier(fourier(f)) == f and ||fourier(f)||_2 == ||f||_2 exactly
// (up to rounding), because h*dxi*N = 2*pi.
inline Field fourier(const Field& f) {
    Field out(f.grid.dual(), f.values);
    for (int axis = 0; axis < f.grid.d; ++axis)
        detail::fourier_axis(out.values, f.grid.d, f.grid.N, axis, f.grid.L, false);
    return out;
}

inline Field inverse_fourier(const Field& fhat) {
    Field out(fhat.grid.dual(), fhat.values);
    for (int axis = 0; axis < fhat.grid.d; ++axis)
        detail::fourier_axis(out.values, fhat.grid.d, fhat.grid.N, axis, out.grid.L, true);
    return out;
}

// Quadrature convolution (f*g)(x) = h^d sum_y f(y) g(x-y), periodic wrap.
// Direct summation; the FFT product route is kept as an identity to test
// against, not as the implementation.
inline Field convolve(const Field& f, const Field& g) {
    require_same_grid(f.grid, g.grid, "convolve operands");
    const int N = f.grid.N;
    const double hd = std::pow(f.grid.h(), f.grid.d);
    Field out(f.grid);
    // coordinate x_i - x_k = (i-k)h lives at sample index (i-k) + N/2
    const int off = N / 2;
    if (f.grid.d == 1) {
        for (int i = 0; i < N; ++i) {
            cd acc{0.0, 0.0};
            for (int k = 0; k < N; ++k)
                acc += f.values[static_cast<std::size_t>(k)] *
                       g.values[static_cast<std::size_t>(wrap_index(i - k + off, N))];
            out.values[static_cast<std::size_t>(i)] = acc * hd;
        }
    } else {
        for (int i0 = 0; i0 < N; ++i0)
            for (int i1 = 0; i1 < N; ++i1) {
                cd acc{0.0, 0.0};
                for (int k0 = 0; k0 < N; ++k0)
                    for (int k1 = 0; k1 < N; ++k1)
                        acc += f.at(k0, k1) * g.at(wrap_index(i0 - k0 + off, N), wrap_index(i1 - k1 + off, N));
                out.at(i0, i1) = acc * hd;
            }
    }
    return out;
}

// Spectral derivative along space axis `axis` of a d-dim field line set.
// Used by the phase-space residual; treats lines as 2L-periodic.
inline Field spectral_derivative(const Field& f, int axis) {
    Field fh = fourier(f);
    const int N = f.grid.N;
    if (f.grid.d == 1) {
        for (int m = 0; m < N; ++m) fh.values[static_cast<std::size_t>(m)] *= cd{0.0, 1.0} * fh.grid.x(m);
    } else {
        for (int m0 = 0; m0 < N; ++m0)
            for (int m1 = 0; m1 < N; ++m1)
                fh.at(m0, m1) *= cd{0.0, 1.0} * fh.grid.x(axis == 0 ? m0 : m1);
    }
    return inverse_fourier(fh);
}

}  // namespace gaborlab
