#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "gaborlab/stft.hpp"

#include "test_fields.hpp"

using namespace gaborlab;
using std::numbers::pi;

namespace {

Field unit_gaussian(const Grid& g) {
    return testfields::sampled(g, [](double x) { return cd{std::pow(pi, -0.25) * std::exp(-0.5 * x * x), 0.0}; });
}

// direct quadrature oracle: V_phi f(x,xi) = (2pi)^{-1/2} h sum_y f(y) conj(phi(y-x)) e^{-i y xi},
// evaluated without shifts or transforms (window read off a callable)
cd stft_oracle_point(const Field& f, const std::function<cd(double)>& window, double x, double xi) {
    const Grid& g = f.grid;
    cd acc{0.0, 0.0};
    for (int j = 0; j < g.N; ++j) {
        const double y = g.x(j);
        acc += f.values[j] * std::conj(window(y - x)) * std::polar(1.0, -y * xi);
    }
    return acc * g.h() / std::sqrt(2.0 * pi);
}

}  // namespace

TEST(Stft, WindowAutocorrelationAtOrigin) {
    Grid g(1, 12.0, 256);
    Field phi = unit_gaussian(g);
    PhaseField V = stft(phi, phi);
    const double n = l2_norm(phi);
    const cd got = V.at(g.N / 2, g.N / 2);  // (x,xi) = (0,0)
    EXPECT_NEAR(got.real(), n * n / std::sqrt(2.0 * pi), 1e-12);
    EXPECT_NEAR(got.imag(), 0.0, 1e-12);
}

TEST(Stft, GaussianClosedFormAndOracle) {
    // |V_phi phi(x,xi)| = (2pi)^{-1/2} e^{-(x^2+xi^2)/4} for the unit Gaussian
    Grid g(1, 12.0, 256);
    Field phi = unit_gaussian(g);
    PhaseField V = stft(phi, phi);
    double worst_closed = 0.0, worst_oracle = 0.0;
    // 64 sample points across the region where V is not vanishingly small
    const int koff[8] = {-45, -32, -19, -6, 6, 19, 32, 45};   // x in [-4.2, 4.2]
    const int moff[8] = {-16, -11, -7, -2, 2, 7, 11, 16};     // xi in [-4.2, 4.2]
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            const int k = g.N / 2 + koff[i];
            const int m = g.N / 2 + moff[j];
            const double x = g.x(k), xi = g.dual().x(m);
            const double want = std::exp(-(x * x + xi * xi) / 4.0) / std::sqrt(2.0 * pi);
            const cd got = V.at(k, m);
            worst_closed = std::max(worst_closed, std::abs(std::abs(got) - want) / want);
            const cd oracle = stft_oracle_point(
                phi, [](double t) { return cd{std::pow(pi, -0.25) * std::exp(-0.5 * t * t), 0.0}; }, x, xi);
            worst_oracle = std::max(worst_oracle, std::abs(got - oracle) / std::abs(oracle));
        }
    EXPECT_LE(worst_closed, 1e-8);
    EXPECT_LE(worst_oracle, 1e-11);
}

TEST(Stft, DecompositionRoute) {
    // F2 o U o T with T(f,phi) = f (x) conj(phi), (UF)(x,y) = F(y, y-x),
    // partial transform in the second variable: reproduces stft
    Grid g(1, 8.0, 64);
    CounterRng rng(67);
    Field f = testfields::random_smooth(g, rng);
    Field phi = unit_gaussian(g);
    const int N = g.N;

    std::vector<cd> tensor(static_cast<std::size_t>(N) * N);  // T[x][y] = f(x) conj(phi(y))
    for (int x = 0; x < N; ++x)
        for (int y = 0; y < N; ++y) tensor[static_cast<std::size_t>(x) * N + y] = f.values[x] * std::conj(phi.values[y]);

    std::vector<cd> pulled(static_cast<std::size_t>(N) * N);  // (UF)(x,y) = F(y, y-x)
    for (int x = 0; x < N; ++x)
        for (int y = 0; y < N; ++y)
            pulled[static_cast<std::size_t>(x) * N + y] =
                tensor[static_cast<std::size_t>(y) * N + wrap_index(y - x + N / 2, N)];

    PhaseField direct = stft(f, phi);
    Field line(g);
    double worst = 0.0;
    for (int x = 0; x < N; ++x) {
        for (int y = 0; y < N; ++y) line.values[y] = pulled[static_cast<std::size_t>(x) * N + y];
        Field row = fourier(line);  // partial transform in y
        for (int m = 0; m < N; ++m) worst = std::max(worst, std::abs(row.values[m] - direct.at(x, m)));
    }
    EXPECT_LE(worst, 1e-13);
}

TEST(Stft, MoyalIdentity) {
    Grid g(1, 12.0, 256);
    Field gauss = unit_gaussian(g);
    {
        MoyalResult r = moyal(gauss, gauss, gauss, gauss);
        EXPECT_NEAR(std::abs(r.lhs - r.rhs), 0.0, 1e-10);
        EXPECT_NEAR(r.rhs.real(), 1.0, 1e-10);
    }
    {
        // orthogonal odd/even pair: both sides vanish
        Field odd = testfields::sampled(g, [](double x) { return cd{x * std::exp(-0.5 * x * x), 0.0}; });
        MoyalResult r = moyal(gauss, odd, gauss, gauss);
        EXPECT_LE(std::abs(r.lhs), 1e-12);
        EXPECT_LE(std::abs(r.rhs), 1e-12);
    }
    for (std::uint64_t s = 0; s < 20; ++s) {
        CounterRng rng(700 + s);
        Field f = testfields::random_smooth(g, rng);
        Field h = testfields::random_smooth(g, rng);
        Field phi = testfields::random_smooth(g, rng);
        Field psi = testfields::random_smooth(g, rng);
        MoyalResult r = moyal(f, h, phi, psi);
        EXPECT_LE(std::abs(r.lhs - r.rhs), 1e-8 * (1.0 + std::abs(r.rhs)));
    }
}

TEST(Stft, NormPreservation) {
    Grid g(1, 12.0, 256);
    Field phi = unit_gaussian(g);
    CounterRng rng(71);
    Field f = testfields::random_smooth(g, rng);
    EXPECT_NEAR(l2_norm(stft(f, phi)), l2_norm(phi) * l2_norm(f), 1e-10);
}

TEST(Stft, LinearInSignalConjugateLinearInWindow) {
    Grid g(1, 8.0, 64);
    CounterRng rng(73);
    Field f = testfields::random_smooth(g, rng);
    Field phi = testfields::random_smooth(g, rng);
    const cd c{1.3, -0.7};

    Field cf = f;
    for (auto& v : cf.values) v *= c;
    PhaseField lhs = stft(cf, phi), base = stft(f, phi);
    double worst = 0.0;
    for (std::size_t i = 0; i < lhs.values.size(); ++i)
        worst = std::max(worst, std::abs(lhs.values[i] - c * base.values[i]));
    EXPECT_LE(worst, 1e-13);

    Field cphi = phi;
    for (auto& v : cphi.values) v *= c;
    PhaseField wlhs = stft(f, cphi);
    worst = 0.0;
    for (std::size_t i = 0; i < wlhs.values.size(); ++i)
        worst = std::max(worst, std::abs(wlhs.values[i] - std::conj(c) * base.values[i]));
    EXPECT_LE(worst, 1e-13);
}

TEST(StftAdjoint, InversionAndPairing) {
    Grid g(1, 12.0, 256);
    Field phi = unit_gaussian(g);
    for (std::uint64_t s = 0; s < 10; ++s) {
        CounterRng rng(800 + s);
        Field f = testfields::random_smooth(g, rng);
        Field rec = stft_adjoint(stft(f, phi), phi);
        const double n2 = l2_norm(phi) * l2_norm(phi);
        for (auto& v : rec.values) v /= n2;
        EXPECT_LE(testfields::rel_l2_diff(rec, f), 1e-8);
    }
    // adjoint pairing (V* F, g) = (F, V g) on random F, g
    CounterRng rng(77);
    PhaseField F(g, g.dual());
    for (auto& v : F.values) v = rng.next_complex_gaussian();
    Field h = testfields::random_smooth(g, rng);
    const cd lhs = inner(stft_adjoint(F, phi), h);
    const cd rhs = inner(F, stft(h, phi));
    EXPECT_LE(std::abs(lhs - rhs), 1e-10 * (1.0 + std::abs(rhs)));

    PhaseField zero(g, g.dual());
    Field z = stft_adjoint(zero, phi);
    for (const auto& v : z.values) EXPECT_EQ(v, (cd{0.0, 0.0}));
}

TEST(Projection, IdempotentSelfAdjointFixesRange) {
    Grid g(1, 12.0, 256);
    Field phi = unit_gaussian(g);
    CounterRng rng(79);

    PhaseField F(g, g.dual());
    for (auto& v : F.values) v = rng.next_complex_gaussian();
    PhaseField PF = project(F, phi);
    PhaseField PPF = project(PF, phi);
    EXPECT_LE(testfields::rel_l2_diff(PPF, PF), 1e-8);

    PhaseField G(g, g.dual());
    for (auto& v : G.values) v = rng.next_complex_gaussian();
    const cd lhs = inner(PF, G);
    const cd rhs = inner(F, project(G, phi));
    EXPECT_LE(std::abs(lhs - rhs), 1e-10 * (1.0 + std::abs(rhs)));

    // range characterization both ways
    Field f = testfields::random_smooth(g, rng);
    PhaseField V = stft(f, phi);
    EXPECT_LE(testfields::rel_l2_diff(project(V, phi), V), 1e-10);
    double drop = testfields::rel_l2_diff(PF, F);  // generic F is far from the range
    EXPECT_GE(drop, 1e-3);
}

TEST(TwistedConv, ReproducingFormula) {
    // (V_{phi2} phi3) *_V (V_{phi1} f) = (phi3, phi1) V_{phi2} f
    Grid g(1, 8.0, 64);
    CounterRng rng(83);
    Field phi1 = unit_gaussian(g);
    Field phi2 = testfields::sampled(g, [](double x) { return cd{std::exp(-0.4 * x * x), 0.0}; });
    Field phi3 = testfields::random_smooth(g, rng);
    Field f = testfields::random_smooth(g, rng);

    PhaseField lhs = twisted_convolve(stft(phi3, phi2), stft(f, phi1));
    PhaseField rhs = stft(f, phi2);
    const cd c = inner(phi3, phi1);
    for (auto& v : rhs.values) v *= c;
    EXPECT_LE(testfields::rel_l2_diff(lhs, rhs), 1e-6);
}

TEST(TwistedConv, SelfReproducing) {
    // phi1 = phi2 = phi3 = phi: (V_phi phi) *_V (V_phi f) = ||phi||^2 V_phi f
    Grid g(1, 8.0, 64);
    CounterRng rng(89);
    Field phi = unit_gaussian(g);
    Field f = testfields::random_smooth(g, rng);
    PhaseField lhs = twisted_convolve(stft(phi, phi), stft(f, phi));
    PhaseField rhs = stft(f, phi);
    const double n2 = l2_norm(phi) * l2_norm(phi);
    for (auto& v : rhs.values) v *= n2;
    EXPECT_LE(testfields::rel_l2_diff(lhs, rhs), 1e-6);
}

TEST(TwistedConv, Associativity) {
    Grid g(1, 4.0, 24);
    CounterRng rng(97);
    auto random_pf = [&](std::uint64_t s) {
        CounterRng r(s);
        PhaseField F(g, g.dual());
        for (auto& v : F.values) v = r.next_complex_gaussian();
        return F;
    };
    for (std::uint64_t s = 0; s < 3; ++s) {
        PhaseField F = random_pf(200 + s), G = random_pf(300 + s), H = random_pf(400 + s);
        PhaseField left = twisted_convolve(twisted_convolve(F, G), H);
        PhaseField right = twisted_convolve(F, twisted_convolve(G, H));
        EXPECT_LE(testfields::rel_l2_diff(left, right), 1e-8);
    }
}

TEST(TwistedConv, ProjectionLink) {
    // P_phi F = ||phi||^{-2} (V_phi phi) *_V F
    Grid g(1, 8.0, 64);
    CounterRng rng(101);
    Field phi = unit_gaussian(g);
    PhaseField F(g, g.dual());
    for (auto& v : F.values) v = rng.next_complex_gaussian();
    PhaseField rhs = twisted_convolve(stft(phi, phi), F);
    const double n2 = l2_norm(phi) * l2_norm(phi);
    for (auto& v : rhs.values) v /= n2;
    PhaseField lhs = project(F, phi);
    EXPECT_LE(testfields::rel_l2_diff(lhs, rhs), 1e-6);
}

TEST(TwistedConv, SizeGuard) {
    Grid g(1, 12.0, 256);
    PhaseField F(g, g.dual());
    EXPECT_THROW(twisted_convolve(F, F), precondition_error);
}

TEST(Stft, ZeroWindowRejected) {
    Grid g(1, 8.0, 64);
    Field f = unit_gaussian(g), zero(g);
    EXPECT_THROW(stft(f, zero), precondition_error);
}

TEST(Stft, TwoDimensionalMoyal) {
    Grid g(2, 5.0, 32);
    Field phi(g);
    for (int k0 = 0; k0 < g.N; ++k0)
        for (int k1 = 0; k1 < g.N; ++k1)
            phi.at(k0, k1) = cd{std::exp(-0.5 * (g.x(k0) * g.x(k0) + g.x(k1) * g.x(k1))), 0.0};
    Field f(g);
    for (int k0 = 0; k0 < g.N; ++k0)
        for (int k1 = 0; k1 < g.N; ++k1)
            f.at(k0, k1) = cd{g.x(k0) * std::exp(-0.6 * (g.x(k0) * g.x(k0) + g.x(k1) * g.x(k1))), 0.2};
    // taper the constant offset so the field decays
    for (int k0 = 0; k0 < g.N; ++k0)
        for (int k1 = 0; k1 < g.N; ++k1)
            f.at(k0, k1) *= std::exp(-0.1 * (g.x(k0) * g.x(k0) + g.x(k1) * g.x(k1)));

    EXPECT_NEAR(l2_norm(stft(f, phi)), l2_norm(phi) * l2_norm(f), 1e-10);
    Field rec = stft_adjoint(stft(f, phi), phi);
    const double n2 = l2_norm(phi) * l2_norm(phi);
    for (auto& v : rec.values) v /= n2;
    EXPECT_LE(testfields::rel_l2_diff(rec, f), 1e-10);
}
