#include <gtest/gtest.h>

#include <cmath>

#include "gaborlab/exponent.hpp"
#include "gaborlab/weight.hpp"

using namespace gaborlab;

TEST(Exponent, ParseAndRecip) {
    EXPECT_TRUE(Exponent::parse("inf").is_inf());
    EXPECT_DOUBLE_EQ(Exponent::parse("2").value(), 2.0);
    EXPECT_DOUBLE_EQ(Exponent::parse("0.5").value(), 0.5);
    EXPECT_DOUBLE_EQ(Exponent::parse("2/3").value(), 2.0 / 3.0);
    EXPECT_THROW(Exponent::parse("-1"), precondition_error);

    // recip is involutive on (0, inf]
    const Exponent cases[] = {Exponent::integer(1), Exponent::integer(7), Exponent::ratio(2, 3),
                              Exponent::ratio(1, 2), Exponent::inf()};
    for (const auto& p : cases) {
        EXPECT_TRUE(Exponent::from_recip(Exponent::from_recip(p.recip()).recip()) == p);
    }
    EXPECT_DOUBLE_EQ(Exponent::inf().recip().value(), 0.0);
}

TEST(Exponent, HolderYoungConditions) {
    auto E = [](long long n) { return Exponent::integer(n); };
    auto H = [](long long n, long long d) { return Exponent::ratio(n, d); };

    EXPECT_TRUE(holder_ok(E(1), E(2), E(2)));
    EXPECT_FALSE(holder_ok(H(1, 2), E(2), E(2)));

    // equality case 1/inf = 1/2 + 1/2 - 1
    EXPECT_TRUE(young_ok(Exponent::inf(), E(2), E(2)));
    // p_j < 1 branch collapses to p0 >= max(p1,p2)
    EXPECT_TRUE(young_ok(H(1, 2), H(1, 2), H(1, 2)));
    EXPECT_FALSE(young_ok(H(1, 3), H(1, 2), H(1, 2)));
}

TEST(Exponent, TheoremExponentSystems) {
    auto E = [](long long n) { return Exponent::integer(n); };
    const std::array<Exponent, 3> p222 = {Exponent::inf(), E(2), E(2)};
    const std::array<Exponent, 3> q222 = {E(1), E(2), E(2)};
    // M-convolution with all p_j = q_j = 2 admits (p0,q0) = (inf,1)
    EXPECT_TRUE(conv_exponents_ok(SpaceFamily::M, p222, q222));

    // M-multiplication p1=p2=q1=q2=2, p0=1: theta = 1 forces q0 = inf
    const std::array<Exponent, 3> pm = {E(1), E(2), E(2)};
    const std::array<Exponent, 3> qm = {Exponent::inf(), E(2), E(2)};
    EXPECT_TRUE(mult_exponents_ok(SpaceFamily::M, pm, qm));
    const std::array<Exponent, 3> qm_bad = {E(4), E(2), E(2)};
    EXPECT_FALSE(mult_exponents_ok(SpaceFamily::M, pm, qm_bad));

    // W-multiplication with q1=q2=1 allows any q0 >= 1
    const std::array<Exponent, 3> pw = {E(1), E(2), E(2)};
    const std::array<Exponent, 3> qw = {E(1), E(1), E(1)};
    EXPECT_TRUE(mult_exponents_ok(SpaceFamily::W, pw, qw));
}

TEST(Exponent, IntroSolve) {
    auto E = [](long long n) { return Exponent::integer(n); };
    {
        auto r = intro_solve(E(2), E(2), E(2), E(2));
        EXPECT_TRUE(r.mult_p0 == E(1));
        EXPECT_TRUE(r.mult_q0.is_inf());
        EXPECT_TRUE(r.conv_p0.is_inf());
        EXPECT_TRUE(r.conv_q0 == E(1));
        // solutions satisfy the admissibility systems with equality binding
        EXPECT_TRUE(mult_exponents_ok(SpaceFamily::M, {r.mult_p0, E(2), E(2)}, {r.mult_q0, E(2), E(2)}));
        EXPECT_TRUE(conv_exponents_ok(SpaceFamily::M, {r.conv_p0, E(2), E(2)}, {r.conv_q0, E(2), E(2)}));
    }
    {
        auto r = intro_solve(E(1), E(1), E(1), E(1));
        EXPECT_DOUBLE_EQ(r.theta1.value(), 2.0);
        EXPECT_TRUE(r.mult_p0 == Exponent::ratio(1, 2));
        EXPECT_TRUE(r.mult_q0.is_inf());
        EXPECT_TRUE(r.conv_p0 == E(1));
        EXPECT_TRUE(r.conv_q0 == Exponent::ratio(1, 2));
    }
    EXPECT_THROW(intro_solve(Exponent::inf(), E(1), Exponent::inf(), E(1)), precondition_error);
}

TEST(Weight, ClassifyFamilies) {
    EXPECT_EQ(classify(Weight::poly(3.0)), WeightClass::P);
    EXPECT_EQ(classify(Weight::bracket(2.0)), WeightClass::P);
    EXPECT_EQ(classify(Weight::subexp(2.0, 0.5)), WeightClass::P_BD);
    EXPECT_EQ(classify(Weight::logexp(1.0)), WeightClass::P_E0);
    EXPECT_EQ(classify(Weight::expw(1.0)), WeightClass::P_E);
    // composites take the weakest class of their parts
    EXPECT_EQ(classify(Weight::product(Weight::poly(1.0), Weight::expw(1.0))), WeightClass::P_E);
    EXPECT_EQ(classify(Weight::split(Weight::subexp(1.0, 0.5), Weight::poly(2.0))), WeightClass::P_BD);
    EXPECT_EQ(classify(Weight::product(Weight::subexp(1.0, 0.5), Weight::subexp(2.0, 0.7))), WeightClass::P_BD);
    EXPECT_EQ(classify(Weight::reciprocal(Weight::bracket(1.0))), WeightClass::P);
    EXPECT_THROW(classify(Weight::subexp(1.0, 2.0)), precondition_error);
}

TEST(Weight, EvaluationAndGrammar) {
    Weight w = parse_weight("split(bracket:2;poly:1)");
    // <x>^2 at x=1 times (1+|xi|) at xi=3
    EXPECT_NEAR(w(1.0, 3.0), std::pow(2.0, 1.0) * 4.0, 1e-12);
    EXPECT_NEAR(parse_weight("recip(exp:1)")(2.0), std::exp(-2.0), 1e-12);
    EXPECT_NEAR(parse_weight("prod(poly:1,poly:2)")(1.0), 8.0, 1e-12);
    EXPECT_NEAR(parse_weight("subexp:1,0.5")(4.0), std::exp(2.0), 1e-12);
    EXPECT_THROW(parse_weight("subexp:1,1.5"), precondition_error);
    EXPECT_THROW(parse_weight("frob:1"), precondition_error);
    Weight roundtrip = parse_weight(w.to_string());
    EXPECT_NEAR(roundtrip(0.3, -1.7), w(0.3, -1.7), 1e-12);
}

TEST(Weight, SubmultiplicativeFamiliesHaveConstantOne) {
    const auto pts = moderate_samples(1, 10.0, 0.5, 200, 42);
    const Weight fams[] = {Weight::poly(2.0), Weight::subexp(1.0, 0.5), Weight::logexp(1.0),
                           Weight::expw(1.0)};
    for (const auto& w : fams) {
        EXPECT_LE(check_moderate(w, w, pts), 1.0 + 1e-9) << w.to_string();
    }
    // bracket obeys Peetre's inequality <x+y> <= sqrt(2) <x><y>; the sampled
    // constant for <.>^s sits at (2/sqrt(3))^s, attained near x = y = 1/sqrt(2)
    const double s = 1.5;
    const double got = check_moderate(Weight::bracket(s), Weight::bracket(s), pts);
    EXPECT_LE(got, std::pow(2.0 / std::sqrt(3.0), s) + 1e-9);
    EXPECT_GE(got, std::pow(2.0 / std::sqrt(3.0), s) - 1e-2);
}

TEST(Weight, GaussianGrowthIsNotModerate) {
    // e^{|x|^2} against v = e^{|x|}: the sampled constant blows up as the box grows
    Weight w = Weight::subexp(1.0, 2.0);
    Weight v = Weight::expw(1.0);
    const double c2 = check_moderate(w, v, moderate_samples(1, 2.0, 0.5, 0, 1));
    const double c8 = check_moderate(w, v, moderate_samples(1, 8.0, 0.5, 0, 1));
    EXPECT_GE(c8, 1e6 * c2);
}

TEST(Weight, BeurlingDomarProbe) {
    // subexponential: partial sums settle; exp: partial sums keep growing like log n
    const double sub_short = bd_partial_sum(Weight::subexp(1.0, 0.5), 1, 1000);
    const double sub_long = bd_partial_sum(Weight::subexp(1.0, 0.5), 1, 10000);
    EXPECT_LE(sub_long - sub_short, 0.1);
    const double exp_short = bd_partial_sum(Weight::expw(1.0), 1, 1000);
    const double exp_long = bd_partial_sum(Weight::expw(1.0), 1, 10000);
    EXPECT_GE(exp_long - exp_short, 1.0);
}

TEST(Weight, ModerateExamples) {
    const auto pts = moderate_samples(1, 5.0, 0.5, 100, 9);
    EXPECT_LE(check_moderate(Weight::expw(1.0), Weight::expw(1.0), pts), 1.0 + 1e-9);
    EXPECT_LE(check_moderate(Weight::poly(2.5), Weight::poly(2.5), pts), 1.0 + 1e-9);
}

TEST(Weight, WeightCondSamplers) {
    const auto pts = moderate_samples(1, 4.0, 1.0, 50, 3);
    const Weight one = Weight::one();
    EXPECT_NEAR(weight_cond_mult(one, one, one, 1, pts), 1.0, 1e-12);
    EXPECT_NEAR(weight_cond_conv(one, one, one, 1, pts), 1.0, 1e-12);

    // split bracket weights with s0 <= min(s1,s2): sampled estimate bounded by
    // Peetre's constant sqrt(2)^{s0} and stable as the box grows
    Weight w0 = Weight::split(Weight::one(), Weight::bracket(1.0));
    Weight w1 = Weight::split(Weight::one(), Weight::bracket(1.0));
    Weight w2 = Weight::split(Weight::one(), Weight::bracket(1.0));
    const double est = weight_cond_mult(w0, w1, w2, 1, pts);
    EXPECT_LE(est, std::sqrt(2.0));
    const double est_large = weight_cond_mult(w0, w1, w2, 1, moderate_samples(1, 8.0, 1.0, 50, 3));
    EXPECT_LE(est_large, std::sqrt(2.0));

    // exponential target against constant factors blows up with the box
    Weight e0 = Weight::split(Weight::one(), Weight::expw(1.0));
    const double small = weight_cond_mult(e0, one, one, 1, moderate_samples(1, 1.0, 0.5, 0, 1));
    const double large = weight_cond_mult(e0, one, one, 1, moderate_samples(1, 6.0, 0.5, 0, 1));
    EXPECT_GE(large, 50.0 * small);
}
