#pragma once

#include <algorithm>
#include <cctype>
#include <cmath>
#include <memory>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "gaborlab/grid.hpp"
#include "gaborlab/rng.hpp"

namespace gaborlab {

// Growth classes of moderate weights, ordered P < P_BD < P_E0 < P_E by inclusion.
enum class WeightClass { P = 0, P_BD = 1, P_E0 = 2, P_E = 3 };

inline std::string to_string(WeightClass c) {
    switch (c) {
        case WeightClass::P: return "P";
        case WeightClass::P_BD: return "P_BD";
        case WeightClass::P_E0: return "P_E0";
        case WeightClass::P_E: return "P_E";
    }
    return "?";
}

// Symbolic moderate-weight family with pointwise evaluation. Immutable
// expression tree behind value semantics.
//
//   poly(r)      (1+|z|)^r
//   bracket(s)   <z>^s = (1+|z|^2)^{s/2}
//   subexp(r,t)  e^{r|z|^t}, t in (0,1) for the classified family
//   expw(r)      e^{r|z|}
//   logexp(r)    e^{r|z|/log(e+|z|)}
//   split(u,v)   u on the first half of the coordinates, v on the second
//   product, power, reciprocal
class Weight {
    enum class Kind { Poly, Bracket, Subexp, Exp, Logexp, Split, Product, Power, Reciprocal };

    struct Node {
        Kind kind;
        double a = 0.0, b = 0.0;
        std::shared_ptr<const Node> left, right;
    };

public:
    static Weight one() { return poly(0.0); }
    static Weight poly(double r) { return make(Kind::Poly, r); }
    static Weight bracket(double s) { return make(Kind::Bracket, s); }
    static Weight subexp(double r, double theta) {
        if (!(theta > 0.0) || theta > 2.0)
            throw precondition_error("weight-family", "subexp exponent theta must lie in (0,2]");
        return make(Kind::Subexp, r, theta);
    }
    static Weight expw(double r) { return make(Kind::Exp, r); }
    static Weight logexp(double r) { return make(Kind::Logexp, r); }
    static Weight split(const Weight& on_x, const Weight& on_xi) {
        return make2(Kind::Split, on_x.node_, on_xi.node_);
    }
    static Weight product(const Weight& a, const Weight& b) { return make2(Kind::Product, a.node_, b.node_); }
    static Weight power(const Weight& w, double alpha) { return make2(Kind::Power, w.node_, nullptr, alpha); }
    static Weight reciprocal(const Weight& w) { return make2(Kind::Reciprocal, w.node_, nullptr); }

    double operator()(std::span<const double> z) const {
        const double v = eval(*node_, z);
        if (!(v > 0.0) || !std::isfinite(v))
            throw precondition_error("weight-positivity", "weight evaluated to a non-positive or non-finite value");
        return v;
    }
    double operator()(double x) const { return (*this)(std::span<const double>(&x, 1)); }
    double operator()(double x, double xi) const {
        const double p[2] = {x, xi};
        return (*this)(std::span<const double>(p, 2));
    }

    // log w(z) computed without forming w(z); keeps growth probes finite.
    double log_eval(std::span<const double> z) const { return log_eval_node(*node_, z); }

    WeightClass cls() const { return classify_node(*node_); }
    std::string to_string() const { return print(*node_); }

private:
    std::shared_ptr<const Node> node_;

    static Weight make(Kind k, double a, double b = 0.0) {
        auto n = std::make_shared<Node>();
        n->kind = k;
        n->a = a;
        n->b = b;
        Weight w;
        w.node_ = n;
        return w;
    }
    static Weight make2(Kind k, std::shared_ptr<const Node> l, std::shared_ptr<const Node> r, double a = 0.0) {
        auto n = std::make_shared<Node>();
        n->kind = k;
        n->a = a;
        n->left = std::move(l);
        n->right = std::move(r);
        Weight w;
        w.node_ = n;
        return w;
    }

    static double norm_of(std::span<const double> z) {
        double s = 0.0;
        for (double c : z) s += c * c;
        return std::sqrt(s);
    }

    static double eval(const Node& n, std::span<const double> z) {
        switch (n.kind) {
            case Kind::Poly: return std::pow(1.0 + norm_of(z), n.a);
            case Kind::Bracket: {
                double s = 0.0;
                for (double c : z) s += c * c;
                return std::pow(1.0 + s, 0.5 * n.a);
            }
            case Kind::Subexp: return std::exp(n.a * std::pow(norm_of(z), n.b));
            case Kind::Exp: return std::exp(n.a * norm_of(z));
            case Kind::Logexp: {
                const double t = norm_of(z);
                return std::exp(n.a * t / std::log(std::numbers::e + t));
            }
            case Kind::Split: {
                const std::size_t half = z.size() / 2;
                return eval(*n.left, z.subspan(0, half)) * eval(*n.right, z.subspan(half));
            }
            case Kind::Product: return eval(*n.left, z) * eval(*n.right, z);
            case Kind::Power: return std::pow(eval(*n.left, z), n.a);
            case Kind::Reciprocal: return 1.0 / eval(*n.left, z);
        }
        throw precondition_error("weight-family", "unknown family");
    }

    static double log_eval_node(const Node& n, std::span<const double> z) {
        switch (n.kind) {
            case Kind::Poly: return n.a * std::log1p(norm_of(z));
            case Kind::Bracket: {
                double s = 0.0;
                for (double c : z) s += c * c;
                return 0.5 * n.a * std::log1p(s);
            }
            case Kind::Subexp: return n.a * std::pow(norm_of(z), n.b);
            case Kind::Exp: return n.a * norm_of(z);
            case Kind::Logexp: {
                const double t = norm_of(z);
                return n.a * t / std::log(std::numbers::e + t);
            }
            case Kind::Split: {
                const std::size_t half = z.size() / 2;
                return log_eval_node(*n.left, z.subspan(0, half)) + log_eval_node(*n.right, z.subspan(half));
            }
            case Kind::Product: return log_eval_node(*n.left, z) + log_eval_node(*n.right, z);
            case Kind::Power: return n.a * log_eval_node(*n.left, z);
            case Kind::Reciprocal: return -log_eval_node(*n.left, z);
        }
        throw precondition_error("weight-family", "unknown family");
    }

    static WeightClass classify_node(const Node& n) {
        switch (n.kind) {
            case Kind::Poly:
            case Kind::Bracket: return WeightClass::P;
            case Kind::Subexp:
                if (n.b < 1.0) return WeightClass::P_BD;
                if (n.b == 1.0) return WeightClass::P_E;
                throw precondition_error("weight-family",
                                         "subexp with theta > 1 is outside the moderate families");
            case Kind::Logexp: return WeightClass::P_E0;
            case Kind::Exp: return WeightClass::P_E;
            case Kind::Split:
            case Kind::Product:
                return std::max(classify_node(*n.left), classify_node(*n.right));
            case Kind::Power:
            case Kind::Reciprocal: return classify_node(*n.left);
        }
        throw precondition_error("weight-family", "unknown family");
    }

    static std::string num(double v) {
        std::string s = std::to_string(v);
        while (s.size() > 1 && s.back() == '0') s.pop_back();
        if (!s.empty() && s.back() == '.') s.pop_back();
        return s;
    }
    static std::string print(const Node& n) {
        switch (n.kind) {
            case Kind::Poly: return "poly:" + num(n.a);
            case Kind::Bracket: return "bracket:" + num(n.a);
            case Kind::Subexp: return "subexp:" + num(n.a) + "," + num(n.b);
            case Kind::Exp: return "exp:" + num(n.a);
            case Kind::Logexp: return "logexp:" + num(n.a);
            case Kind::Split: return "split(" + print(*n.left) + ";" + print(*n.right) + ")";
            case Kind::Product: return "prod(" + print(*n.left) + "," + print(*n.right) + ")";
            case Kind::Power: return "pow(" + print(*n.left) + "," + num(n.a) + ")";
            case Kind::Reciprocal: return "recip(" + print(*n.left) + ")";
        }
        return "?";
    }
};

inline WeightClass classify(const Weight& w) { return w.cls(); }

using SamplePoint = std::vector<double>;

// Deterministic lattice over [-half,half]^dim with the given step, plus
// n_random seeded points from the counter generator.
inline std::vector<SamplePoint> moderate_samples(int dim, double half, double step, int n_random,
                                                 std::uint64_t seed) {
    std::vector<SamplePoint> pts;
    const int per_axis = static_cast<int>(std::floor(2.0 * half / step)) + 1;
    std::vector<int> idx(static_cast<std::size_t>(dim), 0);
    for (;;) {
        SamplePoint p(static_cast<std::size_t>(dim));
        for (int a = 0; a < dim; ++a) p[static_cast<std::size_t>(a)] = -half + idx[static_cast<std::size_t>(a)] * step;
        pts.push_back(std::move(p));
        int a = dim - 1;
        while (a >= 0 && ++idx[static_cast<std::size_t>(a)] == per_axis) idx[static_cast<std::size_t>(a--)] = 0;
        if (a < 0) break;
    }
    CounterRng rng(seed);
    for (int i = 0; i < n_random; ++i) {
        SamplePoint p(static_cast<std::size_t>(dim));
        for (int a = 0; a < dim; ++a) p[static_cast<std::size_t>(a)] = rng.next_uniform(-half, half);
        pts.push_back(std::move(p));
    }
    return pts;
}

// max over sampled (x,y) of w(x+y) / (w(x) v(y)); "moderate with constant <= C"
// is the returned value. Purely an estimator on finite data.
inline double check_moderate(const Weight& w, const Weight& v, const std::vector<SamplePoint>& pts) {
    double worst = 0.0;
    SamplePoint sum;
    for (const auto& x : pts) {
        const double wx = w(std::span<const double>(x));
        for (const auto& y : pts) {
            sum.resize(x.size());
            for (std::size_t a = 0; a < x.size(); ++a) sum[a] = x[a] + y[a];
            const double r = w(std::span<const double>(sum)) / (wx * v(std::span<const double>(y)));
            worst = std::max(worst, r);
        }
    }
    return worst;
}

// Beurling-Domar partial sum: max over unit directions of
// sum_{n=1}^{n_max} log v(n e_a) / n^2. Informational probe only; class
// assignment is symbolic.
inline double bd_partial_sum(const Weight& v, int dim, int n_max = 10000) {
    double worst = 0.0;
    for (int a = 0; a < dim; ++a) {
        for (int sgn = -1; sgn <= 1; sgn += 2) {
            double s = 0.0;
            SamplePoint p(static_cast<std::size_t>(dim), 0.0);
            for (int n = 1; n <= n_max; ++n) {
                p[static_cast<std::size_t>(a)] = sgn * static_cast<double>(n);
                s += v.log_eval(std::span<const double>(p)) / (static_cast<double>(n) * n);
            }
            worst = std::max(worst, s);
        }
    }
    return worst;
}

// max sampled ratio w0(x, xi1+xi2) / (w1(x, xi1) w2(x, xi2)); weights on R^{2d}.
inline double weight_cond_mult(const Weight& w0, const Weight& w1, const Weight& w2, int d,
                               const std::vector<SamplePoint>& pts) {
    double worst = 0.0;
    SamplePoint a(static_cast<std::size_t>(2 * d)), b(static_cast<std::size_t>(2 * d)), c(static_cast<std::size_t>(2 * d));
    for (const auto& x : pts)
        for (const auto& x1 : pts)
            for (const auto& x2 : pts) {
                for (int i = 0; i < d; ++i) {
                    const auto ii = static_cast<std::size_t>(i), id = static_cast<std::size_t>(i + d);
                    a[ii] = x[ii]; a[id] = x1[ii] + x2[ii];
                    b[ii] = x[ii]; b[id] = x1[ii];
                    c[ii] = x[ii]; c[id] = x2[ii];
                }
                worst = std::max(worst, w0(std::span<const double>(a)) /
                                            (w1(std::span<const double>(b)) * w2(std::span<const double>(c))));
            }
    return worst;
}

// max sampled ratio w0(x1+x2, xi) / (w1(x1, xi) w2(x2, xi)).
inline double weight_cond_conv(const Weight& w0, const Weight& w1, const Weight& w2, int d,
                               const std::vector<SamplePoint>& pts) {
    double worst = 0.0;
    SamplePoint a(static_cast<std::size_t>(2 * d)), b(static_cast<std::size_t>(2 * d)), c(static_cast<std::size_t>(2 * d));
    for (const auto& xi : pts)
        for (const auto& x1 : pts)
            for (const auto& x2 : pts) {
                for (int i = 0; i < d; ++i) {
                    const auto ii = static_cast<std::size_t>(i), id = static_cast<std::size_t>(i + d);
                    a[ii] = x1[ii] + x2[ii]; a[id] = xi[ii];
                    b[ii] = x1[ii];          b[id] = xi[ii];
                    c[ii] = x2[ii];          c[id] = xi[ii];
                }
                worst = std::max(worst, w0(std::span<const double>(a)) /
                                            (w1(std::span<const double>(b)) * w2(std::span<const double>(c))));
            }
    return worst;
}

// CLI weight literal grammar:
//   poly:r | bracket:s | subexp:r,theta | exp:r | logexp:r
//   split(WX;WXI) | recip(W) | prod(W1,W2)
Weight parse_weight(const std::string& text);

namespace detail {

inline std::string::size_type matching_paren(const std::string& s, std::string::size_type open) {
    int depth = 0;
    for (auto i = open; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        if (s[i] == ')' && --depth == 0) return i;
    }
    throw precondition_error("weight-grammar", "unbalanced parentheses in '" + s + "'");
}

inline std::string::size_type top_level_separator(const std::string& s, char sep) {
    int depth = 0;
    for (std::string::size_type i = 0; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        else if (s[i] == ')') --depth;
        else if (s[i] == sep && depth == 0) return i;
    }
    throw precondition_error("weight-grammar", std::string("missing '") + sep + "' in '" + s + "'");
}

}  // namespace detail

inline Weight parse_weight(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw precondition_error("weight-grammar", "empty weight expression");
    if (s == "1" || s == "one") return Weight::one();

    auto colon = s.find(':');
    auto paren = s.find('(');
    if (colon != std::string::npos && (paren == std::string::npos || colon < paren)) {
        const std::string fam = s.substr(0, colon), args = s.substr(colon + 1);
        if (fam == "poly") return Weight::poly(std::stod(args));
        if (fam == "bracket") return Weight::bracket(std::stod(args));
        if (fam == "exp") return Weight::expw(std::stod(args));
        if (fam == "logexp") return Weight::logexp(std::stod(args));
        if (fam == "subexp") {
            const auto comma = args.find(',');
            if (comma == std::string::npos)
                throw precondition_error("weight-grammar", "subexp needs r,theta");
            const double r = std::stod(args.substr(0, comma));
            const double theta = std::stod(args.substr(comma + 1));
            if (!(theta > 0.0 && theta < 1.0))
                throw precondition_error("weight-grammar", "subexp theta must lie in (0,1)");
            return Weight::subexp(r, theta);
        }
        throw precondition_error("weight-grammar", "unknown family '" + fam + "'");
    }
    if (paren == std::string::npos)
        throw precondition_error("weight-grammar", "cannot parse '" + s + "'");
    const std::string head = s.substr(0, paren);
    const auto close = detail::matching_paren(s, paren);
    if (close + 1 != s.size())
        throw precondition_error("weight-grammar", "trailing characters after ')' in '" + s + "'");
    const std::string body = s.substr(paren + 1, close - paren - 1);
    if (head == "recip") return Weight::reciprocal(parse_weight(body));
    if (head == "split") {
        const auto sep = detail::top_level_separator(body, ';');
        return Weight::split(parse_weight(body.substr(0, sep)), parse_weight(body.substr(sep + 1)));
    }
    if (head == "prod") {
        const auto sep = detail::top_level_separator(body, ',');
        return Weight::product(parse_weight(body.substr(0, sep)), parse_weight(body.substr(sep + 1)));
    }
    throw precondition_error("weight-grammar", "unknown combinator '" + head + "'");
}

}  // namespace gaborlab
