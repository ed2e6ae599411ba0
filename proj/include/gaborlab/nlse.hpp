#pragma once

#include <cmath>
#include <vector>

#include "gaborlab/fourier.hpp"
#include "gaborlab/gabor_product.hpp"
#include "gaborlab/grid.hpp"
#include "gaborlab/stft.hpp"

namespace gaborlab {

// Cubic NLSE  i psi_t + Laplace psi + lambda |psi|^2 psi = 0,
// lambda = +1 attractive, -1 repulsive, 0 linear.
struct NlseConfig {
    int lambda = 0;
    double dt = 1e-3;
    double T = 0.1;
    double boundary_tol = 1e-6;  // abort threshold for mass reaching the box edge

    NlseConfig(int lambda_, double dt_, double T_) : lambda(lambda_), dt(dt_), T(T_) {
        if (lambda < -1 || lambda > 1) throw precondition_error("nlse-lambda", "lambda must be -1, 0 or +1");
        if (!(dt > 0.0)) throw precondition_error("nlse-dt", "dt must be positive");
        if (!(T >= dt)) throw precondition_error("nlse-horizon", "T must be at least dt");
    }
};

struct Trajectory {
    std::vector<double> times;
    std::vector<Field> states;
};

// Strang splitting: half nonlinear phase rotation, full linear step through
// the frequency multiplier e^{-i |xi|^2 dt}, half nonlinear. The nonlinear
// phase conserves |psi| pointwise and the linear step is unitary, so mass is
// conserved to rounding.
inline Trajectory split_step(const Field& psi0, const NlseConfig& cfg) {
    if (boundary_mass(psi0) > 1e-12)
        throw precondition_error("boundary-mass", "initial state does not decay at the box edge");
    const Grid& g = psi0.grid;
    const int steps = static_cast<int>(std::llround(cfg.T / cfg.dt));
    if (std::abs(steps * cfg.dt - cfg.T) > 1e-9 * cfg.T)
        throw precondition_error("nlse-horizon", "T must be an integer multiple of dt");

    Trajectory traj;
    traj.times.reserve(static_cast<std::size_t>(steps) + 1);
    traj.states.reserve(static_cast<std::size_t>(steps) + 1);
    traj.times.push_back(0.0);
    traj.states.push_back(psi0);

    Field psi = psi0;
    const int N = g.N;
    std::vector<cd> multiplier(g.points());
    {
        Grid dual = g.dual();
        if (g.d == 1) {
            for (int m = 0; m < N; ++m)
                multiplier[static_cast<std::size_t>(m)] = std::polar(1.0, -dual.x(m) * dual.x(m) * cfg.dt);
        } else {
            for (int m0 = 0; m0 < N; ++m0)
                for (int m1 = 0; m1 < N; ++m1)
                    multiplier[static_cast<std::size_t>(m0) * N + m1] =
                        std::polar(1.0, -(dual.x(m0) * dual.x(m0) + dual.x(m1) * dual.x(m1)) * cfg.dt);
        }
    }

    auto half_nonlinear = [&](Field& u) {
        if (cfg.lambda == 0) return;
        for (auto& v : u.values) v *= std::polar(1.0, cfg.lambda * std::norm(v) * cfg.dt / 2.0);
    };

    for (int n = 0; n < steps; ++n) {
        half_nonlinear(psi);
        Field spec = fourier(psi);
        for (std::size_t i = 0; i < spec.values.size(); ++i) spec.values[i] *= multiplier[i];
        psi = inverse_fourier(spec);
        half_nonlinear(psi);
        if (boundary_mass(psi) > cfg.boundary_tol)
            throw precondition_error("boundary-mass", "field reached the box edge during evolution");
        traj.times.push_back((n + 1) * cfg.dt);
        traj.states.push_back(psi);
    }
    return traj;
}

inline PhaseField lift(const Field& state, const Field& window) { return stft(state, window); }

inline std::vector<PhaseField> lift(const Trajectory& traj, const Field& window) {
    std::vector<PhaseField> out;
    out.reserve(traj.states.size());
    for (const Field& s : traj.states) out.push_back(stft(s, window));
    return out;
}

struct ResidualSample {
    double t = 0.0;
    double residual = 0.0;   // relative phase-space equation residual
    double mass = 0.0;       // ||psi(t)||_2
    double boundary = 0.0;   // boundary magnitude of psi(t)
};

namespace detail {

// D_x F = -i dF/dx applied spectrally along x for every frequency column.
inline PhaseField dx_operator(const PhaseField& F) {
    const int N = F.space.N;
    PhaseField out(F.space, F.freq);
    Field line(F.space);
    for (std::size_t m = 0; m < F.xipoints(); ++m) {
        for (int x = 0; x < N; ++x) line.values[static_cast<std::size_t>(x)] = F.at(static_cast<std::size_t>(x), m);
        Field dline = spectral_derivative(line, 0);
        for (int x = 0; x < N; ++x)
            out.at(static_cast<std::size_t>(x), m) = cd{0.0, -1.0} * dline.values[static_cast<std::size_t>(x)];
    }
    return out;
}

}  // namespace detail

// Residual of the lifted cubic equation
//   i dF/dt - (xi + D_x)^2 F + lambda (F~ nat F) nat F = 0
// on interior times of a computed trajectory (centered time difference,
// spectral D_x, left-associated triple product). Relative to the scale
// max(||dF/dt||, ||(xi+D_x)^2 F||, |lambda| ||triple||).
inline std::vector<ResidualSample> phase_residual(const Trajectory& traj, const Field& window,
                                                  const NlseConfig& cfg, int stride = 1) {
    if (traj.states.size() < 3)
        throw precondition_error("nlse-horizon", "need at least three states for the centered residual");
    const Grid& g = traj.states.front().grid;
    if (g.d != 1)
        throw precondition_error("gabor-product-dimension", "phase residual implemented for d=1");
    const Grid dual = g.dual();

    std::vector<ResidualSample> out;
    PhaseField Fprev = stft(traj.states[0], window);
    PhaseField Fcur = stft(traj.states[1], window);
    for (std::size_t n = 1; n + 1 < traj.states.size(); ++n) {
        PhaseField Fnext = stft(traj.states[n + 1], window);
        if ((n - 1) % static_cast<std::size_t>(stride) == 0) {
            const int N = g.N;
            PhaseField dt_term(g, dual);
            for (std::size_t i = 0; i < dt_term.values.size(); ++i)
                dt_term.values[i] = cd{0.0, 1.0} * (Fnext.values[i] - Fprev.values[i]) / (2.0 * cfg.dt);

            PhaseField dxF = detail::dx_operator(Fcur);
            PhaseField dx2F = detail::dx_operator(dxF);
            PhaseField op(g, dual);
            for (int x = 0; x < N; ++x)
                for (int m = 0; m < N; ++m) {
                    const double xi = dual.x(m);
                    op.at(static_cast<std::size_t>(x), static_cast<std::size_t>(m)) =
                        xi * xi * Fcur.at(static_cast<std::size_t>(x), static_cast<std::size_t>(m)) +
                        2.0 * xi * dxF.at(static_cast<std::size_t>(x), static_cast<std::size_t>(m)) +
                        dx2F.at(static_cast<std::size_t>(x), static_cast<std::size_t>(m));
                }

            double triple_norm = 0.0;
            PhaseField resid(g, dual);
            if (cfg.lambda != 0) {
                PhaseField triple =
                    gabor_product(gabor_product(involution(Fcur), Fcur, window), Fcur, window);
                triple_norm = l2_norm(triple);
                for (std::size_t i = 0; i < resid.values.size(); ++i)
                    resid.values[i] = dt_term.values[i] - op.values[i] +
                                      static_cast<double>(cfg.lambda) * triple.values[i];
            } else {
                for (std::size_t i = 0; i < resid.values.size(); ++i)
                    resid.values[i] = dt_term.values[i] - op.values[i];
            }

            const double scale = std::max({l2_norm(dt_term), l2_norm(op), std::abs(cfg.lambda) * triple_norm});
            ResidualSample s;
            s.t = traj.times[n];
            s.residual = scale > 0.0 ? l2_norm(resid) / scale : 0.0;
            s.mass = l2_norm(traj.states[n]);
            s.boundary = boundary_mass(traj.states[n]);
            out.push_back(s);
        }
        Fprev = std::move(Fcur);
        Fcur = std::move(Fnext);
    }
    return out;
}

inline double max_residual(const std::vector<ResidualSample>& samples) {
    double m = 0.0;
    for (const auto& s : samples) m = std::max(m, s.residual);
    return m;
}

}  // namespace gaborlab
