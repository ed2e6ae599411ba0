#pragma once

#include <cmath>
#include <numeric>
#include <vector>

#include "gaborlab/exponent.hpp"
#include "gaborlab/mixed_norm.hpp"
#include "gaborlab/weight.hpp"

namespace gaborlab {

// Finitely supported weighted sequence on a lattice Z^{d1} x Z^{d2},
// restricted to the inclusive index box [lo, hi]. The real lattice point of
// index j is scale[a]*j[a] per axis; geometry only enters through weight
// evaluation.
struct LatticeSeq {
    int d1 = 1, d2 = 0;
    std::vector<int> lo, hi;        // size d1+d2
    std::vector<double> scale;      // size d1+d2, default 1
    std::vector<cd> values;         // row-major over the box

    LatticeSeq() = default;
    LatticeSeq(int d1_, int d2_, std::vector<int> lo_, std::vector<int> hi_)
        : d1(d1_), d2(d2_), lo(std::move(lo_)), hi(std::move(hi_)) {
        const std::size_t dims = static_cast<std::size_t>(d1 + d2);
        if (lo.size() != dims || hi.size() != dims)
            throw precondition_error("lattice-box", "bounds must have d1+d2 axes");
        for (std::size_t a = 0; a < dims; ++a)
            if (hi[a] < lo[a]) throw precondition_error("lattice-box", "hi < lo");
        scale.assign(dims, 1.0);
        values.assign(box_size(), cd{0.0, 0.0});
    }

    int dims() const { return d1 + d2; }
    int extent(int a) const { return hi[static_cast<std::size_t>(a)] - lo[static_cast<std::size_t>(a)] + 1; }
    std::size_t box_size() const {
        std::size_t n = 1;
        for (int a = 0; a < dims(); ++a) n *= static_cast<std::size_t>(extent(a));
        return n;
    }
    bool in_box(const std::vector<int>& idx) const {
        for (int a = 0; a < dims(); ++a)
            if (idx[static_cast<std::size_t>(a)] < lo[static_cast<std::size_t>(a)] ||
                idx[static_cast<std::size_t>(a)] > hi[static_cast<std::size_t>(a)])
                return false;
        return true;
    }
    std::size_t flat(const std::vector<int>& idx) const {
        std::size_t f = 0;
        for (int a = 0; a < dims(); ++a)
            f = f * static_cast<std::size_t>(extent(a)) +
                static_cast<std::size_t>(idx[static_cast<std::size_t>(a)] - lo[static_cast<std::size_t>(a)]);
        return f;
    }
    void unflat(std::size_t f, std::vector<int>& idx) const {
        idx.resize(static_cast<std::size_t>(dims()));
        for (int a = dims() - 1; a >= 0; --a) {
            const auto e = static_cast<std::size_t>(extent(a));
            idx[static_cast<std::size_t>(a)] = lo[static_cast<std::size_t>(a)] + static_cast<int>(f % e);
            f /= e;
        }
    }
    cd& at(const std::vector<int>& idx) { return values[flat(idx)]; }
    const cd& at(const std::vector<int>& idx) const { return values[flat(idx)]; }

    std::vector<double> point(const std::vector<int>& idx) const {
        std::vector<double> p(static_cast<std::size_t>(dims()));
        for (int a = 0; a < dims(); ++a)
            p[static_cast<std::size_t>(a)] = scale[static_cast<std::size_t>(a)] * idx[static_cast<std::size_t>(a)];
        return p;
    }
};

// ell^{p,q}_{(w)}: inner ell^p over the first index group, outer ell^q over the
// second; the star variant swaps the nesting (inner ell^q over the second
// group, outer ell^p over the first). Weight evaluated at real lattice points.
inline double seq_norm(const LatticeSeq& a, const Exponent& p, const Exponent& q, const Weight& w,
                       NormVariant variant) {
    // iterate outer group, accumulate inner group, in lexicographic order
    const int dims = a.dims();
    std::vector<int> idx(static_cast<std::size_t>(dims));

    auto weight_at = [&](const std::vector<int>& i) { return w(std::span<const double>(a.point(i))); };

    const bool star = variant == NormVariant::star;
    // group axes: first group = [0, d1), second = [d1, dims)
    const int inner_begin = star ? a.d1 : 0;
    const int inner_end = star ? dims : a.d1;
    const int outer_begin = star ? 0 : a.d1;
    const int outer_end = star ? a.d1 : dims;
    const Exponent& inner_exp = star ? q : p;
    const Exponent& outer_exp = star ? p : q;

    auto iterate = [&](int begin, int end, auto&& body) {
        // lexicographic loop over axes [begin,end) of idx
        for (int axis = begin; axis < end; ++axis) idx[static_cast<std::size_t>(axis)] = a.lo[static_cast<std::size_t>(axis)];
        if (begin == end) {
            body();
            return;
        }
        for (;;) {
            body();
            int axis = end - 1;
            while (axis >= begin) {
                if (++idx[static_cast<std::size_t>(axis)] <= a.hi[static_cast<std::size_t>(axis)]) break;
                idx[static_cast<std::size_t>(axis)] = a.lo[static_cast<std::size_t>(axis)];
                --axis;
            }
            if (axis < begin) break;
        }
    };

    detail::PAccumulator outer(outer_exp);
    iterate(outer_begin, outer_end, [&] {
        detail::PAccumulator inner(inner_exp);
        iterate(inner_begin, inner_end, [&] { inner.add(std::abs(a.at(idx)) * weight_at(idx), 1.0); });
        outer.add(inner.finish(), 1.0);
    });
    return outer.finish();
}

// Flat weighted ell^p over the whole box.
inline double flat_norm(const LatticeSeq& a, const Exponent& p, const Weight& w) {
    detail::PAccumulator acc(p);
    std::vector<int> idx;
    for (std::size_t f = 0; f < a.values.size(); ++f) {
        a.unflat(f, idx);
        acc.add(std::abs(a.values[f]) * w(std::span<const double>(a.point(idx))), 1.0);
    }
    return acc.finish();
}

inline void require_same_lattice(const LatticeSeq& a, const LatticeSeq& b, const char* who) {
    if (a.d1 != b.d1 || a.d2 != b.d2 || a.scale != b.scale)
        throw precondition_error("lattice-mismatch", who);
}

// Full discrete convolution; the support box grows to [lo_a+lo_b, hi_a+hi_b].
inline LatticeSeq seq_convolve(const LatticeSeq& a, const LatticeSeq& b) {
    require_same_lattice(a, b, "seq_convolve operands");
    const int dims = a.dims();
    std::vector<int> lo(static_cast<std::size_t>(dims)), hi(static_cast<std::size_t>(dims));
    for (int ax = 0; ax < dims; ++ax) {
        lo[static_cast<std::size_t>(ax)] = a.lo[static_cast<std::size_t>(ax)] + b.lo[static_cast<std::size_t>(ax)];
        hi[static_cast<std::size_t>(ax)] = a.hi[static_cast<std::size_t>(ax)] + b.hi[static_cast<std::size_t>(ax)];
    }
    LatticeSeq out(a.d1, a.d2, lo, hi);
    out.scale = a.scale;
    std::vector<int> ia, ib, io(static_cast<std::size_t>(dims));
    for (std::size_t fa = 0; fa < a.values.size(); ++fa) {
        if (a.values[fa] == cd{0.0, 0.0}) continue;
        a.unflat(fa, ia);
        for (std::size_t fb = 0; fb < b.values.size(); ++fb) {
            b.unflat(fb, ib);
            for (int ax = 0; ax < dims; ++ax)
                io[static_cast<std::size_t>(ax)] = ia[static_cast<std::size_t>(ax)] + ib[static_cast<std::size_t>(ax)];
            out.at(io) += a.values[fa] * b.values[fb];
        }
    }
    return out;
}

// Pointwise product on the intersection box (zero sequence when disjoint).
inline LatticeSeq seq_mul(const LatticeSeq& a, const LatticeSeq& b) {
    require_same_lattice(a, b, "seq_mul operands");
    const int dims = a.dims();
    std::vector<int> lo(static_cast<std::size_t>(dims)), hi(static_cast<std::size_t>(dims));
    bool empty = false;
    for (int ax = 0; ax < dims; ++ax) {
        lo[static_cast<std::size_t>(ax)] = std::max(a.lo[static_cast<std::size_t>(ax)], b.lo[static_cast<std::size_t>(ax)]);
        hi[static_cast<std::size_t>(ax)] = std::min(a.hi[static_cast<std::size_t>(ax)], b.hi[static_cast<std::size_t>(ax)]);
        if (hi[static_cast<std::size_t>(ax)] < lo[static_cast<std::size_t>(ax)]) empty = true;
    }
    if (empty) {
        LatticeSeq out(a.d1, a.d2, std::vector<int>(static_cast<std::size_t>(dims), 0),
                       std::vector<int>(static_cast<std::size_t>(dims), 0));
        out.scale = a.scale;
        return out;
    }
    LatticeSeq out(a.d1, a.d2, lo, hi);
    out.scale = a.scale;
    std::vector<int> idx;
    for (std::size_t f = 0; f < out.values.size(); ++f) {
        out.unflat(f, idx);
        out.values[f] = a.at(idx) * b.at(idx);
    }
    return out;
}

// Verified Holder estimate on the lattice: checks 1/q0 <= 1/q1 + 1/q2 and the
// pointwise weight condition w0 <= w1 w2 on the support, then returns
// ||a1.a2||_{q0,(w0)} / (||a1||_{q1,(w1)} ||a2||_{q2,(w2)}).
inline double verify_holder(const LatticeSeq& a1, const LatticeSeq& a2, const std::array<Exponent, 3>& q,
                            const std::array<Weight, 3>& w) {
    if (!holder_ok(q[0], q[1], q[2]))
        throw precondition_error("holder-exponents", "1/q0 <= 1/q1 + 1/q2 fails");
    LatticeSeq prod = seq_mul(a1, a2);
    std::vector<int> idx;
    for (std::size_t f = 0; f < prod.values.size(); ++f) {
        prod.unflat(f, idx);
        const auto pt = prod.point(idx);
        const auto sp = std::span<const double>(pt);
        if (w[0](sp) > w[1](sp) * w[2](sp) * (1.0 + 1e-9))
            throw precondition_error("holder-weights", "w0(j) <= w1(j).w2(j) fails on the support");
    }
    const double denom = flat_norm(a1, q[1], w[1]) * flat_norm(a2, q[2], w[2]);
    if (denom == 0.0) return 0.0;
    return flat_norm(prod, q[0], w[0]) / denom;
}

// Verified Young estimate: checks 1/p0 <= 1/p1 + 1/p2 - max(1,1/p1,1/p2) and
// w0(j1+j2) <= w1(j1) w2(j2) over support pairs, then returns the convolution
// norm ratio.
inline double verify_young(const LatticeSeq& a1, const LatticeSeq& a2, const std::array<Exponent, 3>& p,
                           const std::array<Weight, 3>& w) {
    if (!young_ok(p[0], p[1], p[2]))
        throw precondition_error("young-exponents", "1/p0 <= 1/p1 + 1/p2 - max(1,1/p1,1/p2) fails");
    std::vector<int> i1, i2, is(static_cast<std::size_t>(a1.dims()));
    for (std::size_t f1 = 0; f1 < a1.values.size(); ++f1) {
        a1.unflat(f1, i1);
        const auto p1 = a1.point(i1);
        for (std::size_t f2 = 0; f2 < a2.values.size(); ++f2) {
            a2.unflat(f2, i2);
            for (int ax = 0; ax < a1.dims(); ++ax)
                is[static_cast<std::size_t>(ax)] = i1[static_cast<std::size_t>(ax)] + i2[static_cast<std::size_t>(ax)];
            const auto p2 = a2.point(i2);
            const auto ps = a1.point(is);
            if (w[0](std::span<const double>(ps)) >
                w[1](std::span<const double>(p1)) * w[2](std::span<const double>(p2)) * (1.0 + 1e-9))
                throw precondition_error("young-weights", "w0(j1+j2) <= w1(j1).w2(j2) fails on the support");
        }
    }
    const double denom = flat_norm(a1, p[1], w[1]) * flat_norm(a2, p[2], w[2]);
    if (denom == 0.0) return 0.0;
    return flat_norm(seq_convolve(a1, a2), p[0], w[0]) / denom;
}

}  // namespace gaborlab
