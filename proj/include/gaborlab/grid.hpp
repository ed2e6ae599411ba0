#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "gaborlab/fft.hpp"

namespace gaborlab {

using cd = std::complex<double>;

class precondition_error : public std::invalid_argument {
public:
    precondition_error(const std::string& condition, const std::string& detail)
        : std::invalid_argument(condition + ": " + detail), condition_(condition) {}
    const std::string& condition() const { return condition_; }

private:
    std::string condition_;
};

// Uniform sampling of [-L,L)^d, d in {1,2}. Spacing h = 2L/N, dual spacing
// dxi = pi/L, so h*dxi = 2*pi/N (the FFT duality).
struct Grid {
    int d;
    double L;
    int N;

    Grid(int d_, double L_, int N_) : d(d_), L(L_), N(N_) {
        if (d != 1 && d != 2) throw precondition_error("grid-dimension", "d must be 1 or 2");
        if (!(L > 0.0)) throw precondition_error("grid-halfwidth", "L must be positive");
        if (!detail::grid_size_ok(N))
            throw precondition_error("grid-size", "N must be even, >= 8, with prime factors 2 and 3 only");
    }

    double h() const { return 2.0 * L / N; }
    double dxi() const { return std::numbers::pi / L; }
    double x(int k) const { return -L + k * h(); }
    double xi(int m) const { return (m - N / 2) * dxi(); }  // array index m in [0,N)
    double xi_max() const { return (N / 2) * dxi(); }

    std::size_t points() const {
        std::size_t n = 1;
        for (int a = 0; a < d; ++a) n *= static_cast<std::size_t>(N);
        return n;
    }

    // grid of the FFT-dual variable (itself a valid Grid)
    Grid dual() const { return Grid(d, N * std::numbers::pi / (2.0 * L), N); }

    bool compatible(const Grid& o) const {
        return d == o.d && N == o.N && std::abs(L - o.L) <= 1e-12 * std::max(1.0, std::abs(L));
    }
};

inline int wrap_index(int i, int n) {
    i %= n;
    return i < 0 ? i + n : i;
}

// Sampled complex-valued function on a Grid, row-major over axes.
struct Field {
    Grid grid;
    std::vector<cd> values;

    explicit Field(const Grid& g) : grid(g), values(g.points(), cd{0.0, 0.0}) {}
    Field(const Grid& g, std::vector<cd> v) : grid(g), values(std::move(v)) {
        if (values.size() != g.points())
            throw precondition_error("field-size", "values length must equal N^d");
    }

    std::size_t size() const { return values.size(); }

    // multi-index <-> flat (row-major; d <= 2)
    std::size_t flat(int k0, int k1 = 0) const {
        return grid.d == 1 ? static_cast<std::size_t>(k0)
                           : static_cast<std::size_t>(k0) * grid.N + k1;
    }
    cd& at(int k0, int k1 = 0) { return values[flat(k0, k1)]; }
    const cd& at(int k0, int k1 = 0) const { return values[flat(k0, k1)]; }
};

// Sampled function on phase space (x,xi), x-major: index = flat(x)*N^d + flat(xi).
struct PhaseField {
    Grid space;
    Grid freq;
    std::vector<cd> values;

    PhaseField(const Grid& s, const Grid& f)
        : space(s), freq(f), values(s.points() * f.points(), cd{0.0, 0.0}) {
        if (s.d != f.d || s.N != f.N)
            throw precondition_error("phasefield-grids", "space and frequency grids must match in d and N");
    }

    std::size_t xpoints() const { return space.points(); }
    std::size_t xipoints() const { return freq.points(); }
    cd& at(std::size_t xidx, std::size_t xiidx) { return values[xidx * xipoints() + xiidx]; }
    const cd& at(std::size_t xidx, std::size_t xiidx) const { return values[xidx * xipoints() + xiidx]; }
};

inline void require_same_grid(const Grid& a, const Grid& b, const char* who) {
    if (!a.compatible(b)) throw precondition_error("grid-mismatch", who);
}

// L2 quadrature inner product, conjugate-linear in the second argument.
inline cd inner(const Field& f, const Field& g) {
    require_same_grid(f.grid, g.grid, "inner product operands");
    cd acc{0.0, 0.0};
    for (std::size_t i = 0; i < f.values.size(); ++i) acc += f.values[i] * std::conj(g.values[i]);
    return acc * std::pow(f.grid.h(), f.grid.d);
}

inline double l2_norm(const Field& f) {
    double acc = 0.0;
    for (const cd& v : f.values) acc += std::norm(v);
    return std::sqrt(acc * std::pow(f.grid.h(), f.grid.d));
}

inline cd inner(const PhaseField& F, const PhaseField& G) {
    if (F.values.size() != G.values.size())
        throw precondition_error("grid-mismatch", "phase-field inner product operands");
    cd acc{0.0, 0.0};
    for (std::size_t i = 0; i < F.values.size(); ++i) acc += F.values[i] * std::conj(G.values[i]);
    const double cell = std::pow(F.space.h(), F.space.d) * std::pow(F.freq.h(), F.freq.d);
    return acc * cell;
}

inline double l2_norm(const PhaseField& F) {
    double acc = 0.0;
    for (const cd& v : F.values) acc += std::norm(v);
    const double cell = std::pow(F.space.h(), F.space.d) * std::pow(F.freq.h(), F.freq.d);
    return std::sqrt(acc * cell);
}

// max |f| over the outermost sample shell; reported next to norms so the
// box-truncation concession stays visible.
inline double boundary_mass(const Field& f) {
    const int N = f.grid.N;
    double m = 0.0;
    if (f.grid.d == 1) {
        m = std::max(std::abs(f.values.front()), std::abs(f.values[f.values.size() - 1]));
    } else {
        for (int k0 = 0; k0 < N; ++k0)
            for (int k1 = 0; k1 < N; ++k1)
                if (k0 == 0 || k0 == N - 1 || k1 == 0 || k1 == N - 1)
                    m = std::max(m, std::abs(f.at(k0, k1)));
    }
    return m;
}

inline bool all_finite(const std::vector<cd>& v) {
    for (const cd& z : v)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

}  // namespace gaborlab
