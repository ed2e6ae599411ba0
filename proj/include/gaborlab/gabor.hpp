#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "gaborlab/fourier.hpp"
#include "gaborlab/grid.hpp"
#include "gaborlab/lattice_seq.hpp"
#include "gaborlab/mixed_norm.hpp"
#include "gaborlab/stft.hpp"
#include "gaborlab/window.hpp"

namespace gaborlab {

// Gabor lattice Z^d x (pi Z^d). Lattice points land exactly on grid points
// when L is a positive integer and 2L divides N: then 1/h = N/(2L) is an
// integer (position j sits at sample j/h) and pi*m = (m*L)*dxi is a dual-grid
// frequency.
inline int samples_per_unit(const Grid& g) {
    const double L = g.L;
    if (std::floor(L) != L || L <= 0.0 || g.N % (2 * static_cast<int>(L)) != 0)
        throw precondition_error("lattice-commensurability",
                                 "Gabor lattice needs integer L with 2L dividing N");
    return g.N / (2 * static_cast<int>(L));
}

inline int default_position_radius(const Grid& g) { return static_cast<int>(g.L) - 1; }
inline int default_frequency_radius(const Grid& g) { return (g.N / 2 - 1) / static_cast<int>(g.L); }

// Gabor coefficients c(j,m) = V_w f(j, pi m) on the truncated lattice
// |j|_inf <= J, |m|_inf <= M, stored as a LatticeSeq with per-axis scales
// (1,...,1, pi,...,pi).
struct GaborCoeffs {
    LatticeSeq seq;
    int J = 0, M = 0;
    std::string window_id;
};

inline GaborCoeffs gabor_coeffs(const Field& f, const Field& window, int J = -1, int M = -1,
                                std::string window_id = "custom") {
    require_same_grid(f.grid, window.grid, "gabor_coeffs operands");
    const Grid& g = f.grid;
    const int spu = samples_per_unit(g);
    const int Lint = static_cast<int>(g.L);
    if (J < 0) J = default_position_radius(g);
    if (M < 0) M = default_frequency_radius(g);
    if (J >= Lint || M * Lint > g.N / 2 - 1)
        throw precondition_error("lattice-range", "lattice radii exceed the grid/Nyquist range");

    const int d = g.d;
    std::vector<int> lo(static_cast<std::size_t>(2 * d)), hi(static_cast<std::size_t>(2 * d));
    for (int a = 0; a < d; ++a) { lo[a] = -J; hi[a] = J; }
    for (int a = d; a < 2 * d; ++a) { lo[a] = -M; hi[a] = M; }
    GaborCoeffs out;
    out.seq = LatticeSeq(d, d, lo, hi);
    for (int a = d; a < 2 * d; ++a) out.seq.scale[static_cast<std::size_t>(a)] = std::numbers::pi;
    out.J = J;
    out.M = M;
    out.window_id = std::move(window_id);

    const int N = g.N;
    Field masked(g);
    if (d == 1) {
        Field row(g.dual());
        for (int j = -J; j <= J; ++j) {
            const int kj = j * spu + N / 2;  // sample index of position j
            for (int y = 0; y < N; ++y)
                masked.values[static_cast<std::size_t>(y)] =
                    f.values[static_cast<std::size_t>(y)] *
                    std::conj(window.values[static_cast<std::size_t>(wrap_index(y - kj + N / 2, N))]);
            row = fourier(masked);
            for (int m = -M; m <= M; ++m)
                out.seq.at({j, m}) = row.values[static_cast<std::size_t>(m * Lint + N / 2)];
        }
    } else {
        for (int j0 = -J; j0 <= J; ++j0)
            for (int j1 = -J; j1 <= J; ++j1) {
                const int k0 = j0 * spu + N / 2, k1 = j1 * spu + N / 2;
                for (int y0 = 0; y0 < N; ++y0)
                    for (int y1 = 0; y1 < N; ++y1)
                        masked.at(y0, y1) = f.at(y0, y1) * std::conj(window.at(wrap_index(y0 - k0 + N / 2, N),
                                                                               wrap_index(y1 - k1 + N / 2, N)));
                Field row = fourier(masked);
                for (int m0 = -M; m0 <= M; ++m0)
                    for (int m1 = -M; m1 <= M; ++m1)
                        out.seq.at({j0, j1, m0, m1}) = row.at(m0 * Lint + N / 2, m1 * Lint + N / 2);
            }
    }
    return out;
}

// Gabor expansion f(x) = (pi/2)^{d/2} sum_{(j,m)} c(j,m) dual(x-j) e^{i<x, pi m>}.
inline Field gabor_synthesize(const GaborCoeffs& c, const Field& dual_window) {
    const Grid& g = dual_window.grid;
    const int spu = samples_per_unit(g);
    const int N = g.N, d = g.d;
    const double scale = std::pow(std::numbers::pi / 2.0, 0.5 * d);
    Field out(g);
    std::vector<int> idx;
    if (d == 1) {
        for (std::size_t fidx = 0; fidx < c.seq.values.size(); ++fidx) {
            const cd coeff = c.seq.values[fidx];
            if (coeff == cd{0.0, 0.0}) continue;
            c.seq.unflat(fidx, idx);
            const int j = idx[0], m = idx[1];
            const int kj = j * spu + N / 2;
            const double iota = std::numbers::pi * m;
            for (int x = 0; x < N; ++x) {
                const cd atom = dual_window.values[static_cast<std::size_t>(wrap_index(x - kj + N / 2, N))] *
                                std::polar(1.0, g.x(x) * iota);
                out.values[static_cast<std::size_t>(x)] += coeff * atom;
            }
        }
    } else {
        for (std::size_t fidx = 0; fidx < c.seq.values.size(); ++fidx) {
            const cd coeff = c.seq.values[fidx];
            if (coeff == cd{0.0, 0.0}) continue;
            c.seq.unflat(fidx, idx);
            const int k0 = idx[0] * spu + N / 2, k1 = idx[1] * spu + N / 2;
            const double i0 = std::numbers::pi * idx[2], i1 = std::numbers::pi * idx[3];
            for (int x0 = 0; x0 < N; ++x0)
                for (int x1 = 0; x1 < N; ++x1) {
                    const cd atom = dual_window.at(wrap_index(x0 - k0 + N / 2, N), wrap_index(x1 - k1 + N / 2, N)) *
                                    std::polar(1.0, g.x(x0) * i0 + g.x(x1) * i1);
                    out.at(x0, x1) += coeff * atom;
                }
        }
    }
    for (auto& v : out.values) v *= scale;
    return out;
}

enum class ModFlavor { M, W };

struct ModNormReport {
    double norm = 0.0;
    std::string window_id;
    int J = 0, M = 0;
    double boundary_mass = 0.0;
    double window_wrap = 0.0;
    bool weight_class_warning = false;  // classify(w) beyond P_BD: norm equivalence not covered
};

// Gabor-lattice modulation quasi-norm: flavor M uses ell^{p,q}_{(w)}, flavor W
// the star variant, coefficients against the given analysis window.
inline ModNormReport mod_norm_report(const Field& f, const Exponent& p, const Exponent& q, const Weight& w,
                                     ModFlavor flavor, const Field& window, const std::string& window_id = "custom",
                                     int J = -1, int M = -1) {
    GaborCoeffs c = gabor_coeffs(f, window, J, M, window_id);
    ModNormReport r;
    r.norm = seq_norm(c.seq, p, q, w, flavor == ModFlavor::M ? NormVariant::standard : NormVariant::star);
    r.window_id = window_id;
    r.J = c.J;
    r.M = c.M;
    r.boundary_mass = boundary_mass(f);
    r.window_wrap = window_wrap_mass(window);
    const WeightClass cls = classify(w);
    r.weight_class_warning = cls == WeightClass::P_E0 || cls == WeightClass::P_E;
    return r;
}

inline double mod_norm(const Field& f, const Exponent& p, const Exponent& q, const Weight& w, ModFlavor flavor,
                       const Field& window, int J = -1, int M = -1) {
    return mod_norm_report(f, p, q, w, flavor, window, "custom", J, M).norm;
}

namespace detail {

// Per-axis split of sample rectangles across unit cells. Each sample [a, a+delta)
// contributes to one or two cells with weights equal to the overlap measure, so
// interior cells carry total measure exactly 1 and the r-monotonicity of the
// cell norms survives discretization.
struct CellParts {
    // per sample: (cell, weight) pairs, second weight 0 when not straddling
    std::vector<std::array<std::pair<int, double>, 2>> parts;
    int cell_lo = 0, cell_hi = 0;
};

inline CellParts cell_split(double start, double delta, int n) {
    CellParts cp;
    cp.parts.resize(static_cast<std::size_t>(n));
    cp.cell_lo = static_cast<int>(std::floor(start));
    cp.cell_hi = static_cast<int>(std::ceil(start + n * delta)) - 1;
    for (int i = 0; i < n; ++i) {
        const double a = start + i * delta;
        int c = std::clamp(static_cast<int>(std::floor(a)), cp.cell_lo, cp.cell_hi);
        const double boundary = c + 1.0;
        double w1 = std::max(std::min(a + delta, boundary) - a, 0.0);
        double w2 = (a + delta) - boundary;
        if (w2 <= 1e-15) w2 = 0.0;
        // rounding can push the tail of the last rectangle past the final
        // cell; fold that sliver back so no out-of-box cell is referenced
        if (c + 1 > cp.cell_hi) {
            w1 += w2;
            w2 = 0.0;
        }
        cp.parts[static_cast<std::size_t>(i)] = {{{c, w1}, {c + 1, w2}}};
    }
    return cp;
}

}  // namespace detail

// Wiener amalgam quasi-norm: a(j,iota) = ||F.w||_{L^r((j,iota)+Q_{2d})} by
// per-cell quadrature (r = inf takes the cell sup), then the mixed sequence
// norm over the cell lattice.
inline double wiener_norm(const PhaseField& F, const Exponent& r, const Exponent& p, const Exponent& q,
                          const Weight& w, NormVariant variant) {
    const Grid& gx = F.space;
    const Grid& gxi = F.freq;
    if (gx.d != 1)
        throw precondition_error("wiener-dimension", "wiener_norm implemented for d=1 phase fields");
    const auto cx = detail::cell_split(-gx.L, gx.h(), gx.N);
    const auto cxi = detail::cell_split(-gxi.L, gxi.h(), gxi.N);

    LatticeSeq cells(1, 1, {cx.cell_lo, cxi.cell_lo}, {cx.cell_hi, cxi.cell_hi});
    const bool rinf = r.is_inf();
    const double rv = rinf ? 0.0 : r.value();
    std::vector<double> acc(cells.values.size(), 0.0);

    for (int i = 0; i < gx.N; ++i) {
        for (int m = 0; m < gxi.N; ++m) {
            const double mag = std::abs(F.at(static_cast<std::size_t>(i), static_cast<std::size_t>(m))) *
                               w(gx.x(i), gxi.x(m));
            for (const auto& [cellx, wx] : cx.parts[static_cast<std::size_t>(i)]) {
                if (wx <= 0.0) continue;
                for (const auto& [cellxi, wxi] : cxi.parts[static_cast<std::size_t>(m)]) {
                    if (wxi <= 0.0) continue;
                    const std::size_t f = cells.flat({cellx, cellxi});
                    if (rinf)
                        acc[f] = std::max(acc[f], mag);
                    else
                        acc[f] += std::pow(mag, rv) * wx * wxi;
                }
            }
        }
    }
    for (std::size_t f = 0; f < acc.size(); ++f)
        cells.values[f] = cd{rinf ? acc[f] : std::pow(acc[f], 1.0 / rv), 0.0};
    return seq_norm(cells, p, q, Weight::one(), variant);
}

// ||P_phi F|| / ||F|| in the Wiener norm with r = min(p,q), which collapses to
// the exact L^p quasi-norm when p = q.
inline double projection_bound(const PhaseField& F, const Field& window, const Exponent& p, const Exponent& q,
                               NormVariant variant) {
    const Exponent r = p.le(q) ? p : q;
    const double denom = wiener_norm(F, r, p, q, Weight::one(), variant);
    if (denom == 0.0) return 0.0;
    return wiener_norm(project(F, window), r, p, q, Weight::one(), variant) / denom;
}

// ---- operator Gabor matrix (space dimension 1; kernel sampled on Grid(2,L,N)) ----

struct GaborMatrix {
    int J = 0, M = 0;
    int side = 0;           // (2J+1)(2M+1)
    std::vector<cd> a;      // row-major; row = output (k,kappa), col = input (j,iota)

    int index(int pos, int freq) const { return (pos + J) * (2 * M + 1) + (freq + M); }
};

inline Field apply_kernel(const Field& kernel, const Field& f) {
    if (kernel.grid.d != 2 || f.grid.d != 1 || kernel.grid.N != f.grid.N)
        throw precondition_error("kernel-shape", "kernel must be Grid(2,L,N) against a d=1 field");
    const int N = f.grid.N;
    Field out(f.grid);
    for (int i = 0; i < N; ++i) {
        cd acc{0.0, 0.0};
        for (int j = 0; j < N; ++j) acc += kernel.at(i, j) * f.values[static_cast<std::size_t>(j)];
        out.values[static_cast<std::size_t>(i)] = acc * f.grid.h();
    }
    return out;
}

// a(k,kappa; j,iota) = 2^{-d} (T psi_{j,iota}, phi_{k,kappa})_{L^2}: the matrix
// of T in the Gabor expansion, so synthesize(A . coeffs(f,phi), psi) == Tf.
inline GaborMatrix operator_gabor_matrix(const Field& kernel, const WindowPair& pair, int J = -1, int M = -1) {
    const Grid& g = pair.phi.grid;
    const int spu = samples_per_unit(g);
    const int N = g.N;
    if (J < 0) J = default_position_radius(g);
    if (M < 0) M = default_frequency_radius(g);
    GaborMatrix A;
    A.J = J;
    A.M = M;
    A.side = (2 * J + 1) * (2 * M + 1);
    if (static_cast<long long>(A.side) * A.side > 1'000'000LL)
        throw precondition_error("size-limit", "operator matrix would exceed 1e6 entries");
    A.a.assign(static_cast<std::size_t>(A.side) * A.side, cd{0.0, 0.0});

    // modulation table: mod[m+M][x] = e^{i x pi m}
    std::vector<std::vector<cd>> mod(static_cast<std::size_t>(2 * M + 1), std::vector<cd>(static_cast<std::size_t>(N)));
    for (int m = -M; m <= M; ++m)
        for (int x = 0; x < N; ++x)
            mod[static_cast<std::size_t>(m + M)][static_cast<std::size_t>(x)] =
                std::polar(1.0, g.x(x) * std::numbers::pi * m);

    Field atom(g), image(g);
    std::vector<cd> tested(static_cast<std::size_t>(N));
    for (int j = -J; j <= J; ++j) {
        const int kj = j * spu + N / 2;
        for (int m = -M; m <= M; ++m) {
            const auto& mj = mod[static_cast<std::size_t>(m + M)];
            for (int x = 0; x < N; ++x)
                atom.values[static_cast<std::size_t>(x)] =
                    pair.psi.values[static_cast<std::size_t>(wrap_index(x - kj + N / 2, N))] * mj[static_cast<std::size_t>(x)];
            image = apply_kernel(kernel, atom);
            for (int k = -J; k <= J; ++k) {
                const int kk = k * spu + N / 2;
                for (int x = 0; x < N; ++x)
                    tested[static_cast<std::size_t>(x)] =
                        image.values[static_cast<std::size_t>(x)] *
                        std::conj(pair.phi.values[static_cast<std::size_t>(wrap_index(x - kk + N / 2, N))]);
                for (int mu = -M; mu <= M; ++mu) {
                    const auto& mk = mod[static_cast<std::size_t>(mu + M)];
                    cd acc{0.0, 0.0};
                    for (int x = 0; x < N; ++x) acc += tested[static_cast<std::size_t>(x)] * std::conj(mk[static_cast<std::size_t>(x)]);
                    A.a[static_cast<std::size_t>(A.index(k, mu)) * A.side + A.index(j, m)] =
                        acc * g.h() * 0.5;  // 2^{-d}, d = 1
                }
            }
        }
    }
    return A;
}

inline GaborCoeffs matrix_apply(const GaborMatrix& A, const GaborCoeffs& c) {
    if (c.J != A.J || c.M != A.M)
        throw precondition_error("lattice-range", "matrix and coefficient radii differ");
    GaborCoeffs out = c;
    for (int k = -A.J; k <= A.J; ++k)
        for (int mu = -A.M; mu <= A.M; ++mu) {
            cd acc{0.0, 0.0};
            for (int j = -A.J; j <= A.J; ++j)
                for (int m = -A.M; m <= A.M; ++m)
                    acc += A.a[static_cast<std::size_t>(A.index(k, mu)) * A.side + A.index(j, m)] *
                           c.seq.at({j, m});
            out.seq.at({k, mu}) = acc;
        }
    return out;
}

// ---- multiplication / convolution theorem verification ----

struct TheoremReport {
    Exponent p0, q0;
    double ratio = 0.0;         // target norm / product of factor norms
    double identity_rel = -1.0; // STFT-level reformulation residual
    double extract_rel = -1.0;  // f0 recovery residual
    double weight_cond = 0.0;   // sampled weight-condition constant
    double boundary = 0.0;      // worst boundary magnitude among the fields involved
};

namespace detail {

// frequency-side circular convolution of phase-field rows:
// out(x,xi) = dxi^d sum_eta F1(x,eta) F2(x, xi-eta)
inline PhaseField conv_rows_freq(const PhaseField& F1, const PhaseField& F2) {
    const int N = F1.freq.N;
    PhaseField out(F1.space, F1.freq);
    for (std::size_t x = 0; x < F1.xpoints(); ++x)
        for (int m = 0; m < N; ++m) {
            cd acc{0.0, 0.0};
            for (int n = 0; n < N; ++n)
                acc += F1.at(x, static_cast<std::size_t>(n)) *
                       F2.at(x, static_cast<std::size_t>(wrap_index(m - n + N / 2, N)));
            out.at(x, static_cast<std::size_t>(m)) = acc * F1.freq.h();
        }
    return out;
}

// position-side circular convolution of phase-field columns:
// out(x,xi) = h^d sum_y F1(y,xi) F2(x-y, xi)
inline PhaseField conv_cols_space(const PhaseField& F1, const PhaseField& F2) {
    const int N = F1.space.N;
    PhaseField out(F1.space, F1.freq);
    for (int x = 0; x < N; ++x)
        for (std::size_t m = 0; m < F1.xipoints(); ++m) {
            cd acc{0.0, 0.0};
            for (int y = 0; y < N; ++y)
                acc += F1.at(static_cast<std::size_t>(y), m) *
                       F2.at(static_cast<std::size_t>(wrap_index(x - y + N / 2, N)), m);
            out.at(static_cast<std::size_t>(x), m) = acc * F1.space.h();
        }
    return out;
}

}  // namespace detail

// Multiplication theorem, empirically: checks the exponent system and the
// sampled weight condition, forms f1 f2, and returns the modulation-norm
// ratio. With check_identity the STFT reformulation is verified:
// phi0 = (2pi)^{d/2} phi1 phi2 makes F0(x,.) = (F1(x,.) * F2(x,.)) hold
// exactly, and f0 is recovered through the adjoint.
inline TheoremReport verify_mult(const Field& f1, const Field& f2, const std::array<Exponent, 3>& p,
                                 const std::array<Exponent, 3>& q, const std::array<Weight, 3>& w,
                                 ModFlavor flavor, const Field& norm_window, bool check_identity = false) {
    const SpaceFamily fam = flavor == ModFlavor::M ? SpaceFamily::M : SpaceFamily::W;
    if (!mult_exponents_ok(fam, p, q))
        throw precondition_error("mult-exponents", "multiplication exponent system fails");
    const auto pts = moderate_samples(f1.grid.d, 6.0, 1.0, 20, 1234);
    TheoremReport rep{p[0], q[0]};
    rep.weight_cond = weight_cond_mult(w[0], w[1], w[2], f1.grid.d, pts);
    if (rep.weight_cond > 1.0 + 1e-9)
        throw precondition_error("mult-weights", "sampled weight condition exceeds 1");

    Field prod(f1.grid);
    for (std::size_t i = 0; i < prod.values.size(); ++i) prod.values[i] = f1.values[i] * f2.values[i];
    const double n0 = mod_norm(prod, p[0], q[0], w[0], flavor, norm_window);
    const double n1 = mod_norm(f1, p[1], q[1], w[1], flavor, norm_window);
    const double n2 = mod_norm(f2, p[2], q[2], w[2], flavor, norm_window);
    rep.ratio = (n1 > 0.0 && n2 > 0.0) ? n0 / (n1 * n2) : 0.0;
    rep.boundary = std::max({boundary_mass(f1), boundary_mass(f2), boundary_mass(prod)});

    if (check_identity) {
        const Grid& g = f1.grid;
        Field phi1 = gaussian_window(g);
        Field phi2(g);
        for (int k = 0; k < g.N; ++k) phi2.values[static_cast<std::size_t>(k)] = cd{std::exp(-0.4 * g.x(k) * g.x(k)), 0.0};
        Field phi0(g);
        const double c = std::pow(2.0 * std::numbers::pi, 0.5 * g.d);
        for (std::size_t i = 0; i < phi0.values.size(); ++i) phi0.values[i] = c * phi1.values[i] * phi2.values[i];

        PhaseField F0 = stft(prod, phi0);
        PhaseField conv = detail::conv_rows_freq(stft(f1, phi1), stft(f2, phi2));
        double num = 0.0, den = 0.0;
        for (std::size_t i = 0; i < F0.values.size(); ++i) {
            num += std::norm(F0.values[i] - conv.values[i]);
            den += std::norm(F0.values[i]);
        }
        rep.identity_rel = std::sqrt(num / den);

        Field back = stft_adjoint(conv, phi0);
        const double nn = l2_norm(phi0);
        for (auto& v : back.values) v /= nn * nn;
        double bn = 0.0, bd = 0.0;
        for (std::size_t i = 0; i < back.values.size(); ++i) {
            bn += std::norm(back.values[i] - prod.values[i]);
            bd += std::norm(prod.values[i]);
        }
        rep.extract_rel = std::sqrt(bn / bd);
    }
    return rep;
}

// Convolution theorem, same contract; phi0 = (2pi)^{-d/2} phi1 * phi2 makes
// F0(.,xi) = (F1(.,xi) * F2(.,xi)) hold exactly.
inline TheoremReport verify_conv(const Field& f1, const Field& f2, const std::array<Exponent, 3>& p,
                                 const std::array<Exponent, 3>& q, const std::array<Weight, 3>& w,
                                 ModFlavor flavor, const Field& norm_window, bool check_identity = false) {
    const SpaceFamily fam = flavor == ModFlavor::M ? SpaceFamily::M : SpaceFamily::W;
    if (!conv_exponents_ok(fam, p, q))
        throw precondition_error("conv-exponents", "convolution exponent system fails");
    const auto pts = moderate_samples(f1.grid.d, 6.0, 1.0, 20, 1234);
    TheoremReport rep{p[0], q[0]};
    rep.weight_cond = weight_cond_conv(w[0], w[1], w[2], f1.grid.d, pts);
    if (rep.weight_cond > 1.0 + 1e-9)
        throw precondition_error("conv-weights", "sampled weight condition exceeds 1");

    Field conv_f = convolve(f1, f2);
    const double n0 = mod_norm(conv_f, p[0], q[0], w[0], flavor, norm_window);
    const double n1 = mod_norm(f1, p[1], q[1], w[1], flavor, norm_window);
    const double n2 = mod_norm(f2, p[2], q[2], w[2], flavor, norm_window);
    rep.ratio = (n1 > 0.0 && n2 > 0.0) ? n0 / (n1 * n2) : 0.0;
    rep.boundary = std::max({boundary_mass(f1), boundary_mass(f2), boundary_mass(conv_f)});

    if (check_identity) {
        const Grid& g = f1.grid;
        Field phi1 = gaussian_window(g);
        Field phi2(g);
        for (int k = 0; k < g.N; ++k) phi2.values[static_cast<std::size_t>(k)] = cd{std::exp(-0.4 * g.x(k) * g.x(k)), 0.0};
        Field phi0 = convolve(phi1, phi2);
        const double c = std::pow(2.0 * std::numbers::pi, -0.5 * g.d);
        for (auto& v : phi0.values) v *= c;

        PhaseField F0 = stft(conv_f, phi0);
        PhaseField conv = detail::conv_cols_space(stft(f1, phi1), stft(f2, phi2));
        double num = 0.0, den = 0.0;
        for (std::size_t i = 0; i < F0.values.size(); ++i) {
            num += std::norm(F0.values[i] - conv.values[i]);
            den += std::norm(F0.values[i]);
        }
        rep.identity_rel = std::sqrt(num / den);

        Field back = stft_adjoint(conv, phi0);
        const double nn = l2_norm(phi0);
        for (auto& v : back.values) v /= nn * nn;
        double bn = 0.0, bd = 0.0;
        for (std::size_t i = 0; i < back.values.size(); ++i) {
            bn += std::norm(back.values[i] - conv_f.values[i]);
            bd += std::norm(conv_f.values[i]);
        }
        rep.extract_rel = std::sqrt(bn / bd);
    }
    return rep;
}

}  // namespace gaborlab
