#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "gaborlab/fourier.hpp"
#include "gaborlab/gabor.hpp"
#include "gaborlab/grid.hpp"
#include "gaborlab/mixed_norm.hpp"
#include "gaborlab/stft.hpp"

namespace gaborlab {

// Gabor product
//   (F1 natural_phi F2)(x,xi) = (2pi)^{-d} e^{-i<x,xi>}
//       sum_{zeta} conj(phihat(zeta-xi)) e^{i<x,zeta>} g(zeta) dxi^d,
// evaluated through the factorization of the windowed-product proof:
//   G(y,zeta) = sum_eta F1(y,eta) F2(y,zeta-eta) dxi^d   (per-y frequency convolution)
//   g(zeta)   = h^d sum_y G(y,zeta)
// The y variable never meets (x,xi), so the product costs O(N^3) for d=1.
inline PhaseField gabor_product(const PhaseField& F1, const PhaseField& F2, const Field& window,
                                bool allow_large = false) {
    if (F1.space.d != 1)
        throw precondition_error("gabor-product-dimension", "gabor_product implemented for d=1 phase fields");
    if (!F1.space.compatible(F2.space) || F1.space.N != window.grid.N || !F1.space.compatible(window.grid))
        throw precondition_error("grid-mismatch", "gabor_product operands");
    const int N = F1.space.N;
    if (!allow_large && N > 128)
        throw precondition_error("size-limit", "gabor_product guarded at N <= 128; pass allow_large to override");
    detail::require_window(window);

    const Grid& gx = F1.space;
    const Grid& gxi = F1.freq;
    const double dxi = gx.dxi();

    // stage 1+2: g(zeta) = h sum_y (F1(y,.) conv F2(y,.))(zeta)
    std::vector<cd> gz(static_cast<std::size_t>(N), cd{0.0, 0.0});
    for (int y = 0; y < N; ++y) {
        for (int z = 0; z < N; ++z) {
            cd acc{0.0, 0.0};
            for (int e = 0; e < N; ++e)
                acc += F1.at(static_cast<std::size_t>(y), static_cast<std::size_t>(e)) *
                       F2.at(static_cast<std::size_t>(y), static_cast<std::size_t>(wrap_index(z - e + N / 2, N)));
            gz[static_cast<std::size_t>(z)] += acc;
        }
    }
    const double stage_scale = dxi * gx.h();
    for (auto& v : gz) v *= stage_scale;

    // stage 3: modulate against the window spectrum
    Field what = fourier(window);
    std::vector<std::vector<cd>> phase(static_cast<std::size_t>(N), std::vector<cd>(static_cast<std::size_t>(N)));
    for (int x = 0; x < N; ++x)
        for (int z = 0; z < N; ++z)
            phase[static_cast<std::size_t>(x)][static_cast<std::size_t>(z)] = std::polar(1.0, gx.x(x) * gxi.x(z));

    PhaseField out(gx, gxi);
    const double c = 1.0 / (2.0 * std::numbers::pi) * dxi;
    for (int x = 0; x < N; ++x) {
        const auto& px = phase[static_cast<std::size_t>(x)];
        for (int m = 0; m < N; ++m) {
            cd acc{0.0, 0.0};
            for (int z = 0; z < N; ++z)
                acc += std::conj(what.values[static_cast<std::size_t>(wrap_index(z - m + N / 2, N))]) *
                       px[static_cast<std::size_t>(z)] * gz[static_cast<std::size_t>(z)];
            out.at(static_cast<std::size_t>(x), static_cast<std::size_t>(m)) =
                acc * c * std::conj(px[static_cast<std::size_t>(m)]);
        }
    }
    return out;
}

// F~(x,xi) = conj(F(x,-xi)); the -N/2 frequency index reflects to itself.
inline PhaseField involution(const PhaseField& F) {
    const int N = F.freq.N;
    PhaseField out(F.space, F.freq);
    for (std::size_t x = 0; x < F.xpoints(); ++x)
        for (int m = 0; m < N; ++m)
            out.at(x, static_cast<std::size_t>(m)) = std::conj(F.at(x, static_cast<std::size_t>(wrap_index(N - m, N))));
    return out;
}

struct ProductBoundReport {
    double ratio = 0.0;        // ||V f1 nat V f2||_{L*^{p0,q0}} / (||f1||_W ||f2||_W)
    double equality_band = 0.0;// phase-space norm vs lattice W-norm of f1 f2 (ratio)
    double weight_cond = 0.0;
};

// Boundedness of the Gabor product on STFT ranges, W-flavor exponents:
// numerator is the continuous star mixed norm of (V_phi f1) nat_phi (V_phi f2)
// with ||phi||_2 = 1 and phi real, denominators are W-flavor modulation norms.
inline ProductBoundReport product_bound(const Field& f1, const Field& f2, const Field& window,
                                        const std::array<Exponent, 3>& p, const std::array<Exponent, 3>& q,
                                        const std::array<Weight, 3>& w, const Field& norm_window,
                                        bool allow_large = false) {
    if (!mult_exponents_ok(SpaceFamily::W, p, q))
        throw precondition_error("mult-exponents", "W-multiplication exponent system fails");
    ProductBoundReport rep;
    const auto pts = moderate_samples(f1.grid.d, 6.0, 1.0, 20, 1234);
    rep.weight_cond = weight_cond_mult(w[0], w[1], w[2], f1.grid.d, pts);
    if (rep.weight_cond > 1.0 + 1e-9)
        throw precondition_error("mult-weights", "sampled weight condition exceeds 1");

    Field phi = window;
    const double n = l2_norm(phi);
    for (auto& v : phi.values) v /= n;

    PhaseField prod = gabor_product(stft(f1, phi), stft(f2, phi), phi, allow_large);
    const double numerator = mixed_norm(prod, p[0], q[0], w[0], NormVariant::star);
    const double n1 = mod_norm(f1, p[1], q[1], w[1], ModFlavor::W, norm_window);
    const double n2 = mod_norm(f2, p[2], q[2], w[2], ModFlavor::W, norm_window);
    rep.ratio = (n1 > 0.0 && n2 > 0.0) ? numerator / (n1 * n2) : 0.0;

    Field f12(f1.grid);
    for (std::size_t i = 0; i < f12.values.size(); ++i) f12.values[i] = f1.values[i] * f2.values[i];
    const double lattice = mod_norm(f12, p[0], q[0], w[0], ModFlavor::W, norm_window);
    rep.equality_band = lattice > 0.0 ? numerator / lattice : 0.0;
    return rep;
}

}  // namespace gaborlab
