#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "gaborlab/fourier.hpp"
#include "gaborlab/grid.hpp"
#include "gaborlab/mixed_norm.hpp"
#include "gaborlab/rng.hpp"

#include "test_fields.hpp"

using namespace gaborlab;
using std::numbers::pi;

namespace {

// O(N^2) reference transform: direct evaluation of the quadrature sum,
// independent of the FFT path.
Field direct_fourier(const Field& f) {
    Field out(f.grid.dual());
    const int N = f.grid.N;
    const double c = std::pow(2.0 * pi, -0.5 * f.grid.d) * std::pow(f.grid.h(), f.grid.d);
    if (f.grid.d == 1) {
        for (int m = 0; m < N; ++m) {
            cd acc{0.0, 0.0};
            for (int k = 0; k < N; ++k)
                acc += f.values[k] * std::polar(1.0, -f.grid.x(k) * f.grid.xi(m));
            out.values[m] = acc * c;
        }
    } else {
        for (int m0 = 0; m0 < N; ++m0)
            for (int m1 = 0; m1 < N; ++m1) {
                cd acc{0.0, 0.0};
                for (int k0 = 0; k0 < N; ++k0)
                    for (int k1 = 0; k1 < N; ++k1)
                        acc += f.at(k0, k1) * std::polar(1.0, -(f.grid.x(k0) * f.grid.xi(m0) +
                                                                f.grid.x(k1) * f.grid.xi(m1)));
                out.at(m0, m1) = acc * c;
            }
    }
    return out;
}

}  // namespace

TEST(Grid, InvariantsAndDual) {
    Grid g(1, 12.0, 256);
    EXPECT_DOUBLE_EQ(g.h() * g.N, 2.0 * g.L);
    EXPECT_NEAR(g.h() * g.dxi(), 2.0 * pi / g.N, 1e-15);
    Grid dd = g.dual().dual();
    EXPECT_TRUE(dd.compatible(g));
    EXPECT_THROW(Grid(1, 12.0, 100), precondition_error);   // 100 = 2^2 * 5^2
    EXPECT_THROW(Grid(3, 12.0, 256), precondition_error);
    EXPECT_NO_THROW(Grid(1, 8.0, 96));
}

TEST(Fourier, GaussianFixedPoint) {
    Grid g(1, 12.0, 256);
    Field f = testfields::sampled(g, [](double x) { return cd{std::exp(-0.5 * x * x), 0.0}; });
    Field fh = fourier(f);
    double worst = 0.0;
    for (int m = 0; m < g.N; ++m) {
        const double want = std::exp(-0.5 * g.xi(m) * g.xi(m));
        worst = std::max(worst, std::abs(fh.values[m] - cd{want, 0.0}));
    }
    EXPECT_LE(worst, 1e-10);
}

TEST(Fourier, MatchesDirectQuadrature) {
    Grid g(1, 12.0, 96);
    CounterRng rng(31);
    Field f = testfields::random_smooth(g, rng);
    Field a = fourier(f), b = direct_fourier(f);
    EXPECT_LE(testfields::rel_l2_diff(a, b), 1e-12);
}

TEST(Fourier, RoundTripAndParseval) {
    Grid g(1, 12.0, 256);
    for (std::uint64_t s = 0; s < 10; ++s) {
        CounterRng rng(900 + s);
        Field f = testfields::random_smooth(g, rng);
        Field back = inverse_fourier(fourier(f));
        EXPECT_LE(testfields::rel_l2_diff(back, f), 1e-12);
        EXPECT_NEAR(l2_norm(fourier(f)), l2_norm(f), 1e-12 * l2_norm(f));
    }
}

TEST(Fourier, RoundTrip2D) {
    Grid g(2, 6.0, 24);
    CounterRng rng(5);
    Field f(g);
    for (auto& v : f.values) v = rng.next_complex_gaussian();
    // taper so the field decays at the box edge
    for (int k0 = 0; k0 < g.N; ++k0)
        for (int k1 = 0; k1 < g.N; ++k1)
            f.at(k0, k1) *= std::exp(-0.25 * (g.x(k0) * g.x(k0) + g.x(k1) * g.x(k1)));
    Field back = inverse_fourier(fourier(f));
    EXPECT_LE(testfields::rel_l2_diff(back, f), 1e-12);
    Field direct = direct_fourier(f);
    EXPECT_LE(testfields::rel_l2_diff(fourier(f), direct), 1e-11);
}

TEST(Convolve, DeltaIsIdentityAndShift) {
    Grid g(1, 12.0, 128);
    Field delta(g);
    delta.values[g.N / 2] = cd{1.0 / g.h(), 0.0};  // quadrature-normalized peak at x=0
    CounterRng rng(7);
    Field f = testfields::random_smooth(g, rng);
    Field conv = convolve(delta, f);
    EXPECT_LE(testfields::rel_l2_diff(conv, f), 1e-12);

    // peak at x0 shifts the other factor by x0 (circularly)
    const int shift = 16;
    Field delta_shift(g);
    delta_shift.values[g.N / 2 + shift] = cd{1.0 / g.h(), 0.0};
    Field conv2 = convolve(delta_shift, f);
    double worst = 0.0;
    for (int i = 0; i < g.N; ++i)
        worst = std::max(worst, std::abs(conv2.values[i] - f.values[wrap_index(i - shift, g.N)]));
    EXPECT_LE(worst, 1e-12);
}

TEST(Convolve, GaussianClosedForm) {
    // e^{-x^2/(2 s1^2)} * e^{-x^2/(2 s2^2)}
    //   = sqrt(2 pi s1^2 s2^2 / (s1^2+s2^2)) e^{-x^2 / (2 (s1^2+s2^2))}
    Grid g(1, 12.0, 256);
    const double s1 = 0.8, s2 = 1.3;
    Field f = testfields::sampled(g, [&](double x) { return cd{std::exp(-0.5 * x * x / (s1 * s1)), 0.0}; });
    Field h = testfields::sampled(g, [&](double x) { return cd{std::exp(-0.5 * x * x / (s2 * s2)), 0.0}; });
    Field conv = convolve(f, h);
    const double svar = s1 * s1 + s2 * s2;
    const double amp = std::sqrt(2.0 * pi * s1 * s1 * s2 * s2 / svar);
    Field want = testfields::sampled(g, [&](double x) { return cd{amp * std::exp(-0.5 * x * x / svar), 0.0}; });
    EXPECT_LE(testfields::rel_l2_diff(conv, want), 1e-10);
}

TEST(Convolve, FourierIdentity) {
    Grid g(1, 12.0, 256);
    for (std::uint64_t s = 0; s < 5; ++s) {
        CounterRng rng(100 + s);
        Field f = testfields::random_smooth(g, rng);
        Field h = testfields::random_smooth(g, rng);
        Field lhs = fourier(convolve(f, h));
        Field fh = fourier(f), hh = fourier(h);
        Field rhs(fh.grid);
        for (std::size_t i = 0; i < rhs.values.size(); ++i)
            rhs.values[i] = std::sqrt(2.0 * pi) * fh.values[i] * hh.values[i];
        EXPECT_LE(testfields::rel_l2_diff(lhs, rhs), 1e-8);
    }
}

TEST(MixedNorm, ConstantField) {
    // F == 1, p=q=1, w == 1 on the product box [-1,1) x [-1,1): (2L)^2 = 4.
    // PhaseField accepts any frequency grid with matching d and N, so the
    // unit box is expressible directly.
    Grid g(1, 1.0, 8);
    PhaseField F(g, g);
    for (auto& v : F.values) v = cd{1.0, 0.0};
    const double got = mixed_norm(F, Exponent::integer(1), Exponent::integer(1), Weight::one(),
                                  NormVariant::standard);
    EXPECT_NEAR(got, 4.0, 1e-12 * got);

    // on the FFT-dual pairing the frequency mass is N*dxi instead
    PhaseField Fd(g, g.dual());
    for (auto& v : Fd.values) v = cd{1.0, 0.0};
    const double got_dual = mixed_norm(Fd, Exponent::integer(1), Exponent::integer(1), Weight::one(),
                                       NormVariant::standard);
    EXPECT_NEAR(got_dual, 2.0 * g.L * g.N * g.dxi(), 1e-12 * got_dual);
}

TEST(MixedNorm, L2MatchesFlatScaled) {
    Grid g(1, 6.0, 48);
    CounterRng rng(11);
    PhaseField F(g, g.dual());
    for (auto& v : F.values) v = rng.next_complex_gaussian();
    const double got = mixed_norm(F, Exponent::integer(2), Exponent::integer(2), Weight::one(),
                                  NormVariant::standard);
    double flat = 0.0;
    for (const auto& v : F.values) flat += std::norm(v);
    flat = std::sqrt(flat * g.h() * g.dual().h());
    EXPECT_NEAR(got, flat, 1e-12 * flat);
    EXPECT_NEAR(got, l2_norm(F), 1e-12 * got);
}

TEST(MixedNorm, SplitWeightFactorizes) {
    // F(x,xi) = a(x) b(xi) with split weight w = u(x) v(xi):
    // both variants factor into ||a u||_p * ||b v||_q
    Grid g(1, 4.0, 16);
    Field a = testfields::sampled(g, [](double x) { return cd{1.0 / (1.0 + x * x), 0.0}; });
    Grid dg = g.dual();
    Field b = testfields::sampled(dg, [](double t) { return cd{std::exp(-std::abs(t)), 0.0}; });
    PhaseField F(g, dg);
    for (int k = 0; k < g.N; ++k)
        for (int m = 0; m < g.N; ++m) F.at(k, m) = a.values[k] * b.values[m];
    Weight w = Weight::split(Weight::bracket(1.0), Weight::poly(0.5));
    const Exponent p = Exponent::integer(2), q = Exponent::integer(3);

    // brute-force nested quadrature on the small grid
    double na = 0.0, nb = 0.0;
    for (int k = 0; k < g.N; ++k) na += std::pow(std::abs(a.values[k]) * Weight::bracket(1.0)(g.x(k)), 2.0) * g.h();
    for (int m = 0; m < g.N; ++m) nb += std::pow(std::abs(b.values[m]) * Weight::poly(0.5)(dg.x(m)), 3.0) * dg.h();
    const double want = std::pow(na, 0.5) * std::pow(nb, 1.0 / 3.0);

    const double standard = mixed_norm(F, p, q, w, NormVariant::standard);
    const double star = mixed_norm(F, p, q, w, NormVariant::star);
    EXPECT_NEAR(standard, want, 1e-12 * want);
    EXPECT_NEAR(star, want, 1e-12 * want);
}

TEST(MixedNorm, HomogeneityAndTriangle) {
    Grid g(1, 4.0, 16);
    CounterRng rng(13);
    PhaseField F(g, g.dual()), G(g, g.dual());
    for (auto& v : F.values) v = rng.next_complex_gaussian();
    for (auto& v : G.values) v = rng.next_complex_gaussian();
    const Exponent ps[] = {Exponent::integer(1), Exponent::integer(2), Exponent::ratio(5, 2)};
    for (const auto& p : ps)
        for (const auto& q : ps) {
            const double nf = mixed_norm(F, p, q, Weight::one(), NormVariant::standard);
            PhaseField cF = F;
            for (auto& v : cF.values) v *= cd{3.0, -4.0};  // |c| = 5
            EXPECT_NEAR(mixed_norm(cF, p, q, Weight::one(), NormVariant::standard), 5.0 * nf, 1e-12 * nf);

            PhaseField S = F;
            for (std::size_t i = 0; i < S.values.size(); ++i) S.values[i] += G.values[i];
            const double ns = mixed_norm(S, p, q, Weight::one(), NormVariant::standard);
            const double ng = mixed_norm(G, p, q, Weight::one(), NormVariant::standard);
            EXPECT_LE(ns, nf + ng + 1e-12 * (nf + ng));
        }
}

TEST(BoundaryMass, ReportsEdgeMagnitude) {
    Grid g(1, 12.0, 64);
    Field f = testfields::sampled(g, [](double x) { return cd{std::exp(-0.5 * x * x), 0.0}; });
    EXPECT_LE(boundary_mass(f), 1e-14);
    f.values[0] = cd{0.5, 0.0};
    EXPECT_DOUBLE_EQ(boundary_mass(f), 0.5);
}
