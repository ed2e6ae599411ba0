#pragma once

#include <cmath>
#include <vector>

#include "gaborlab/exponent.hpp"
#include "gaborlab/grid.hpp"
#include "gaborlab/weight.hpp"

namespace gaborlab {

enum class NormVariant { standard, star };

namespace detail {

// p-accumulator over a fixed iteration order: powered sums for finite p,
// running sup for p = inf. Quadrature weight enters the finite branch only.
struct PAccumulator {
    bool is_inf;
    double p = 0.0;
    double acc = 0.0;

    explicit PAccumulator(const Exponent& e) : is_inf(e.is_inf()), p(is_inf ? 0.0 : e.value()) {}
    void add(double magnitude, double cell) {
        if (is_inf)
            acc = std::max(acc, magnitude);
        else
            acc += std::pow(magnitude, p) * cell;
    }
    double finish() const { return is_inf ? acc : std::pow(acc, 1.0 / p); }
};

inline void phase_point(const PhaseField& F, std::size_t xidx, std::size_t xiidx, double* out) {
    const int d = F.space.d;
    if (d == 1) {
        out[0] = F.space.x(static_cast<int>(xidx));
        out[1] = F.freq.x(static_cast<int>(xiidx));
    } else {
        const int N = F.space.N;
        out[0] = F.space.x(static_cast<int>(xidx) / N);
        out[1] = F.space.x(static_cast<int>(xidx) % N);
        out[2] = F.freq.x(static_cast<int>(xiidx) / N);
        out[3] = F.freq.x(static_cast<int>(xiidx) % N);
    }
}

}  // namespace detail

// Continuous mixed quasi-norm by rectangle quadrature.
//   standard: || ||F(.,xi) w(.,xi)||_{L^p} ||_{L^q}   (inner over x, outer over xi)
//   star:     || ||F(x,.) w(x,.)||_{L^q} ||_{L^p}     (inner over xi, outer over x)
// p or q = inf takes the sup over samples. Summation runs in lexicographic
// index order so results are bit-reproducible.
inline double mixed_norm(const PhaseField& F, const Exponent& p, const Exponent& q, const Weight& w,
                         NormVariant variant) {
    const double hx = std::pow(F.space.h(), F.space.d);
    const double hxi = std::pow(F.freq.h(), F.freq.d);
    const std::size_t nx = F.xpoints(), nxi = F.xipoints();
    double pt[4];

    if (variant == NormVariant::standard) {
        detail::PAccumulator outer(q);
        for (std::size_t m = 0; m < nxi; ++m) {
            detail::PAccumulator inner(p);
            for (std::size_t k = 0; k < nx; ++k) {
                detail::phase_point(F, k, m, pt);
                const double wv = w(std::span<const double>(pt, static_cast<std::size_t>(2 * F.space.d)));
                inner.add(std::abs(F.at(k, m)) * wv, hx);
            }
            outer.add(inner.finish(), hxi);
        }
        return outer.finish();
    }
    detail::PAccumulator outer(p);
    for (std::size_t k = 0; k < nx; ++k) {
        detail::PAccumulator inner(q);
        for (std::size_t m = 0; m < nxi; ++m) {
            detail::phase_point(F, k, m, pt);
            const double wv = w(std::span<const double>(pt, static_cast<std::size_t>(2 * F.space.d)));
            inner.add(std::abs(F.at(k, m)) * wv, hxi);
        }
        outer.add(inner.finish(), hx);
    }
    return outer.finish();
}

}  // namespace gaborlab
