#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "gaborlab/grid.hpp"

namespace gaborlab {

// Rational with a float fallback. Exponent arithmetic runs on reciprocals
// (1/inf = 0), and the theta conditions of the multiplication/convolution
// theorems involve equalities, so reciprocals stay exact whenever the inputs
// were integers, fractions or decimal literals.
struct Rat {
    bool exact = true;
    long long num = 0;
    long long den = 1;
    double approx = 0.0;

    static Rat of(long long n, long long d) {
        if (d == 0) throw precondition_error("rational", "zero denominator");
        if (d < 0) { n = -n; d = -d; }
        const long long g = std::gcd(n < 0 ? -n : n, d);
        Rat r;
        r.num = g ? n / g : n;
        r.den = g ? d / g : d;
        r.approx = static_cast<double>(r.num) / static_cast<double>(r.den);
        return r;
    }
    static Rat zero() { return of(0, 1); }
    static Rat one() { return of(1, 1); }
    static Rat inexact(double v) {
        Rat r;
        r.exact = false;
        r.approx = v;
        return r;
    }

    double value() const { return exact ? static_cast<double>(num) / static_cast<double>(den) : approx; }

    friend Rat operator+(const Rat& a, const Rat& b) {
        if (a.exact && b.exact) {
            const __int128 n = static_cast<__int128>(a.num) * b.den + static_cast<__int128>(b.num) * a.den;
            const __int128 d = static_cast<__int128>(a.den) * b.den;
            if (n > std::numeric_limits<long long>::max() || n < std::numeric_limits<long long>::min() ||
                d > std::numeric_limits<long long>::max())
                return inexact(a.value() + b.value());
            return of(static_cast<long long>(n), static_cast<long long>(d));
        }
        return inexact(a.value() + b.value());
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        Rat nb = b;
        if (nb.exact) nb = of(-b.num, b.den); else nb.approx = -nb.approx;
        return a + nb;
    }

    // three-way compare; exact when both sides are exact
    int cmp(const Rat& b) const {
        if (exact && b.exact) {
            const __int128 l = static_cast<__int128>(num) * b.den;
            const __int128 r = static_cast<__int128>(b.num) * den;
            return l < r ? -1 : (l > r ? 1 : 0);
        }
        const double l = value(), r = b.value();
        const double tol = 1e-12 * std::max({1.0, std::abs(l), std::abs(r)});
        if (l < r - tol) return -1;
        if (l > r + tol) return 1;
        return 0;
    }
    bool le(const Rat& b) const { return cmp(b) <= 0; }
    bool lt(const Rat& b) const { return cmp(b) < 0; }
    bool eq(const Rat& b) const { return cmp(b) == 0; }

    static Rat max(const Rat& a, const Rat& b) { return a.cmp(b) >= 0 ? a : b; }
    static Rat max3(const Rat& a, const Rat& b, const Rat& c) { return max(max(a, b), c); }
    static Rat max4(const Rat& a, const Rat& b, const Rat& c, const Rat& d) { return max(max(a, b), max(c, d)); }
};

// Lebesgue exponent in (0, inf]; stored through its reciprocal in [0, inf),
// with recip(inf) = 0 and recip involutive.
class Exponent {
public:
    static Exponent inf() { return Exponent(Rat::zero()); }
    static Exponent integer(long long p) {
        if (p <= 0) throw precondition_error("exponent-range", "exponent must be positive");
        return Exponent(Rat::of(1, p));
    }
    static Exponent ratio(long long num, long long den) {
        if (num <= 0 || den <= 0) throw precondition_error("exponent-range", "exponent must be positive");
        return Exponent(Rat::of(den, num));
    }
    static Exponent from_double(double p) {
        if (std::isinf(p)) return inf();
        if (!(p > 0.0)) throw precondition_error("exponent-range", "exponent must be positive");
        return Exponent(Rat::inexact(1.0 / p));
    }
    static Exponent from_recip(const Rat& r) {
        if (r.value() < 0.0) throw precondition_error("exponent-range", "no admissible exponent");
        return Exponent(r);
    }
    // "inf", "2", "0.5", "2/3"
    static Exponent parse(const std::string& s);

    Rat recip() const { return r_; }
    bool is_inf() const { return r_.exact ? r_.num == 0 : r_.approx == 0.0; }
    double value() const { return is_inf() ? std::numeric_limits<double>::infinity() : 1.0 / r_.value(); }

    bool operator==(const Exponent& o) const { return r_.eq(o.r_); }
    // p <= q as exponents (reciprocals reverse the order)
    bool le(const Exponent& o) const { return o.r_.le(r_); }

    std::string to_string() const;

private:
    explicit Exponent(const Rat& r) : r_(r) {}
    Rat r_;
};

inline Exponent Exponent::parse(const std::string& s) {
    if (s == "inf" || s == "Inf" || s == "INF") return inf();
    const auto slash = s.find('/');
    if (slash != std::string::npos) {
        const long long n = std::stoll(s.substr(0, slash));
        const long long d = std::stoll(s.substr(slash + 1));
        return ratio(n, d);
    }
    const auto dot = s.find('.');
    if (dot == std::string::npos) return integer(std::stoll(s));
    const std::string head = s.substr(0, dot), tail = s.substr(dot + 1);
    if (tail.size() > 15) return from_double(std::stod(s));
    long long den = 1;
    for (std::size_t i = 0; i < tail.size(); ++i) den *= 10;
    const long long num = (head.empty() ? 0 : std::stoll(head)) * den + (tail.empty() ? 0 : std::stoll(tail));
    return ratio(num, den);
}

inline std::string Exponent::to_string() const {
    if (is_inf()) return "inf";
    if (r_.exact) {
        if (r_.num == 1) return std::to_string(r_.den);
        return std::to_string(r_.den) + "/" + std::to_string(r_.num);
    }
    return std::to_string(value());
}

// 1/q0 <= 1/q1 + 1/q2
inline bool holder_ok(const Exponent& q0, const Exponent& q1, const Exponent& q2) {
    return q0.recip().le(q1.recip() + q2.recip());
}

// 1/p0 <= 1/p1 + 1/p2 - max(1, 1/p1, 1/p2)
inline bool young_ok(const Exponent& p0, const Exponent& p1, const Exponent& p2) {
    const Rat r1 = p1.recip(), r2 = p2.recip();
    return p0.recip().le(r1 + r2 - Rat::max3(Rat::one(), r1, r2));
}

enum class SpaceFamily { M, W };

// Exponent systems of the four multiplication/convolution theorems.
// vectors are (index 0, 1, 2) = (target, factor 1, factor 2).
inline bool mult_exponents_ok(SpaceFamily fam, const std::array<Exponent, 3>& p, const std::array<Exponent, 3>& q) {
    const Rat rp0 = p[0].recip(), rp1 = p[1].recip(), rp2 = p[2].recip();
    const Rat rq0 = q[0].recip(), rq1 = q[1].recip(), rq2 = q[2].recip();
    if (!rp0.le(rp1 + rp2)) return false;
    const Rat theta = fam == SpaceFamily::M ? Rat::max4(Rat::one(), rp0, rq1, rq2)
                                            : Rat::max3(Rat::one(), rq1, rq2);
    return rq0.le(rq1 + rq2 - theta);
}

inline bool conv_exponents_ok(SpaceFamily fam, const std::array<Exponent, 3>& p, const std::array<Exponent, 3>& q) {
    const Rat rp0 = p[0].recip(), rp1 = p[1].recip(), rp2 = p[2].recip();
    const Rat rq0 = q[0].recip(), rq1 = q[1].recip(), rq2 = q[2].recip();
    if (!rq0.le(rq1 + rq2)) return false;
    const Rat theta = fam == SpaceFamily::M ? Rat::max3(Rat::one(), rp1, rp2)
                                            : Rat::max4(Rat::one(), rq0, rp1, rp2);
    return rp0.le(rp1 + rp2 - theta);
}

struct IntroSolveResult {
    Exponent mult_p0, mult_q0;
    Exponent conv_p0, conv_q0;
    Rat theta1, theta2;
};

// Sharpest (p0,q0) targets for unweighted M-space multiplication/convolution:
//   mult: 1/p0 = 1/p1+1/p2,               1/q1+1/q2 = theta1 + 1/q0
//   conv: 1/p1+1/p2 = theta2 + 1/p0,      1/q0 = 1/q1+1/q2
// with theta1 = max(1, 1/p0, 1/q1, 1/q2), theta2 = max(1, 1/p1, 1/p2).
inline IntroSolveResult intro_solve(const Exponent& p1, const Exponent& q1, const Exponent& p2, const Exponent& q2) {
    const Rat rp0 = p1.recip() + p2.recip();
    const Rat theta1 = Rat::max4(Rat::one(), rp0, q1.recip(), q2.recip());
    const Rat rq0_mult = q1.recip() + q2.recip() - theta1;
    const Rat theta2 = Rat::max3(Rat::one(), p1.recip(), p2.recip());
    const Rat rp0_conv = p1.recip() + p2.recip() - theta2;
    const Rat rq0_conv = q1.recip() + q2.recip();
    if (rq0_mult.value() < 0.0 || rp0_conv.value() < 0.0)
        throw precondition_error("no-admissible-exponent", "reciprocal came out negative");
    return IntroSolveResult{Exponent::from_recip(rp0), Exponent::from_recip(rq0_mult),
                            Exponent::from_recip(rp0_conv), Exponent::from_recip(rq0_conv),
                            theta1, theta2};
}

}  // namespace gaborlab
