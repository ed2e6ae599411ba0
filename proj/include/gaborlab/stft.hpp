#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "gaborlab/fourier.hpp"
#include "gaborlab/grid.hpp"

namespace gaborlab {

namespace detail {

// window shifted to grid point x_k with periodic indexing:
// phi(y - x_k) = phi.values[(j_y - j_k + N/2) mod N] per axis
inline Field shift_window(const Field& w, int k0, int k1 = 0) {
    const int N = w.grid.N;
    Field out(w.grid);
    if (w.grid.d == 1) {
        for (int j = 0; j < N; ++j)
            out.values[static_cast<std::size_t>(j)] =
                w.values[static_cast<std::size_t>(wrap_index(j - k0 + N / 2, N))];
    } else {
        for (int j0 = 0; j0 < N; ++j0)
            for (int j1 = 0; j1 < N; ++j1)
                out.at(j0, j1) = w.at(wrap_index(j0 - k0 + N / 2, N), wrap_index(j1 - k1 + N / 2, N));
    }
    return out;
}

inline void require_window(const Field& w) {
    if (l2_norm(w) == 0.0) throw precondition_error("zero-window", "window has zero L2 norm");
}

}  // namespace detail

// Short-time Fourier transform
//   V_phi f(x,xi) = (2pi)^{-d/2} h^d sum_y f(y) conj(phi(y-x)) e^{-i<y,xi>},
// one transform of f . conj(phi(.-x_k)) per window position.
inline PhaseField stft(const Field& f, const Field& window) {
    require_same_grid(f.grid, window.grid, "stft operands");
    detail::require_window(window);
    const Grid& g = f.grid;
    PhaseField out(g, g.dual());
    const int N = g.N;
    Field masked(g);
    if (g.d == 1) {
        for (int k = 0; k < N; ++k) {
            for (int j = 0; j < N; ++j)
                masked.values[static_cast<std::size_t>(j)] =
                    f.values[static_cast<std::size_t>(j)] *
                    std::conj(window.values[static_cast<std::size_t>(wrap_index(j - k + N / 2, N))]);
            Field row = fourier(masked);
            for (int m = 0; m < N; ++m) out.at(static_cast<std::size_t>(k), static_cast<std::size_t>(m)) = row.values[static_cast<std::size_t>(m)];
        }
    } else {
        for (int k0 = 0; k0 < N; ++k0)
            for (int k1 = 0; k1 < N; ++k1) {
                for (int j0 = 0; j0 < N; ++j0)
                    for (int j1 = 0; j1 < N; ++j1)
                        masked.at(j0, j1) = f.at(j0, j1) * std::conj(window.at(wrap_index(j0 - k0 + N / 2, N),
                                                                               wrap_index(j1 - k1 + N / 2, N)));
                Field row = fourier(masked);
                const std::size_t xidx = static_cast<std::size_t>(k0) * N + static_cast<std::size_t>(k1);
                for (std::size_t m = 0; m < row.values.size(); ++m) out.at(xidx, m) = row.values[m];
            }
    }
    return out;
}

// Adjoint V_phi^* F(x) = (2pi)^{-d/2} h^d dxi^d sum_{y,eta} F(y,eta) phi(x-y) e^{i<x,eta>}.
// Per window position y the eta-sum is an inverse transform of the F(y,.) line.
inline Field stft_adjoint(const PhaseField& F, const Field& window) {
    require_same_grid(F.space, window.grid, "stft_adjoint operands");
    const Grid& g = F.space;
    const int N = g.N;
    Field out(g);
    const double hd = std::pow(g.h(), g.d);
    if (g.d == 1) {
        Field line(F.freq);
        for (int y = 0; y < N; ++y) {
            for (int m = 0; m < N; ++m) line.values[static_cast<std::size_t>(m)] = F.at(static_cast<std::size_t>(y), static_cast<std::size_t>(m));
            Field inner = inverse_fourier(line);  // (2pi)^{-1/2} dxi sum_eta F(y,eta) e^{i x eta}
            for (int x = 0; x < N; ++x)
                out.values[static_cast<std::size_t>(x)] +=
                    inner.values[static_cast<std::size_t>(x)] *
                    window.values[static_cast<std::size_t>(wrap_index(x - y + N / 2, N))];
        }
    } else {
        Field line(F.freq);
        for (int y0 = 0; y0 < N; ++y0)
            for (int y1 = 0; y1 < N; ++y1) {
                const std::size_t yidx = static_cast<std::size_t>(y0) * N + static_cast<std::size_t>(y1);
                for (std::size_t m = 0; m < line.values.size(); ++m) line.values[m] = F.at(yidx, m);
                Field inner = inverse_fourier(line);
                for (int x0 = 0; x0 < N; ++x0)
                    for (int x1 = 0; x1 < N; ++x1)
                        out.at(x0, x1) += inner.at(x0, x1) * window.at(wrap_index(x0 - y0 + N / 2, N),
                                                                       wrap_index(x1 - y1 + N / 2, N));
            }
    }
    for (auto& v : out.values) v *= hd;
    return out;
}

// P_phi = ||phi||^{-2} V_phi V_phi^*, the orthogonal projection onto the
// range of the STFT with window phi.
inline PhaseField project(const PhaseField& F, const Field& window) {
    detail::require_window(window);
    const double n2 = l2_norm(window);
    Field back = stft_adjoint(F, window);
    for (auto& v : back.values) v /= n2 * n2;
    return stft(back, window);
}

// Twisted convolution
//   (F *_V G)(x,xi) = (2pi)^{-d/2} h^d dxi^d
//       sum_{y,eta} F(x-y, xi-eta) G(y,eta) e^{-i<y, xi-eta>},
// index differences wrap periodically. Direct summation; the per-axis phase
// e^{-i y (xi-eta)} depends only on (m-n) mod N, which makes the wrapped
// evaluation consistent.
inline PhaseField twisted_convolve(const PhaseField& F, const PhaseField& G, bool allow_large = false) {
    if (F.space.d != G.space.d || F.space.N != G.space.N || !F.space.compatible(G.space))
        throw precondition_error("grid-mismatch", "twisted_convolve operands");
    const std::size_t npts = F.xpoints();
    if (!allow_large && npts > 128)
        throw precondition_error("size-limit", "twisted_convolve is O(N^4); pass allow_large to override");

    const Grid& g = F.space;
    const int N = g.N, d = g.d;
    const double cell = std::pow(g.h(), d) * std::pow(g.dxi(), d);
    const double c = std::pow(2.0 * std::numbers::pi, -0.5 * d) * cell;

    // phase[j][o] = e^{-i y_j (o * dxi)} per axis, N-periodic in o
    std::vector<std::vector<cd>> phase(static_cast<std::size_t>(N), std::vector<cd>(static_cast<std::size_t>(N)));
    for (int j = 0; j < N; ++j)
        for (int o = 0; o < N; ++o)
            phase[static_cast<std::size_t>(j)][static_cast<std::size_t>(o)] = std::polar(1.0, -g.x(j) * o * g.dxi());

    PhaseField out(F.space, F.freq);
    const std::size_t nxi = F.xipoints();

    auto axis_split = [N, d](std::size_t flat, int* comp) {
        if (d == 1) {
            comp[0] = static_cast<int>(flat);
        } else {
            comp[0] = static_cast<int>(flat) / N;
            comp[1] = static_cast<int>(flat) % N;
        }
    };
    auto axis_join = [N, d](const int* comp) {
        return d == 1 ? static_cast<std::size_t>(comp[0])
                      : static_cast<std::size_t>(comp[0]) * N + static_cast<std::size_t>(comp[1]);
    };

    int xk[2], xm[2], yj[2], en[2], dk[2], dm[2];
    for (std::size_t xf = 0; xf < npts; ++xf) {
        axis_split(xf, xk);
        for (std::size_t mf = 0; mf < nxi; ++mf) {
            axis_split(mf, xm);
            cd acc{0.0, 0.0};
            for (std::size_t yf = 0; yf < npts; ++yf) {
                axis_split(yf, yj);
                for (int a = 0; a < d; ++a) dk[a] = wrap_index(xk[a] - yj[a] + N / 2, N);
                const std::size_t fy = axis_join(dk);
                for (std::size_t nf = 0; nf < nxi; ++nf) {
                    axis_split(nf, en);
                    cd ph{1.0, 0.0};
                    for (int a = 0; a < d; ++a) {
                        dm[a] = wrap_index(xm[a] - en[a] + N / 2, N);
                        ph *= phase[static_cast<std::size_t>(yj[a])][static_cast<std::size_t>(wrap_index(xm[a] - en[a], N))];
                    }
                    acc += F.at(fy, axis_join(dm)) * G.at(yf, nf) * ph;
                }
            }
            out.at(xf, mf) = acc * c;
        }
    }
    return out;
}

struct MoyalResult {
    cd lhs;  // (V_phi f, V_psi g)_{L2(R^{2d})}
    cd rhs;  // (psi, phi)_{L2} (f, g)_{L2}
};

inline MoyalResult moyal(const Field& f, const Field& g, const Field& phi, const Field& psi) {
    MoyalResult r;
    r.lhs = inner(stft(f, phi), stft(g, psi));
    r.rhs = inner(psi, phi) * inner(f, g);
    return r;
}

}  // namespace gaborlab
