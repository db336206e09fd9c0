#include "gardner/evolve.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "fft_internal.hpp"
#include "gardner/errors.hpp"
#include "gardner/norms.hpp"

namespace gardner {

namespace {

using Coeffs = std::vector<std::complex<double>>;

Coeffs to_coeffs(const Field& f) {
    const int n = f.grid.size();
    Coeffs c(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) c[j] = f.values[j];
    fft::forward(c);
    const double inv = 1.0 / n;
    for (auto& z : c) z *= inv;
    return c;
}

Field to_field(const GridSpec& grid, Coeffs c) {
    const int n = grid.size();
    for (auto& z : c) z *= static_cast<double>(n);
    fft::backward(c);
    std::vector<double> v(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) v[j] = c[j].real();
    return Field(grid, std::move(v));
}

// Shared machinery for one dt: exact linear phases and dealiased products.
struct StepperContext {
    GridSpec grid;
    NonlinearCoeffs nl;
    double dt;
    bool dealias;
    Coeffs e_full, e_half;      // exp(dt L), exp(dt/2 L) with L = i(xi^3 - a1 xi)
    std::vector<double> xi;

    StepperContext(const GridSpec& g, const NonlinearCoeffs& c, double dt_, bool dealias_)
        : grid(g), nl(c), dt(dt_), dealias(dealias_) {
        const int n = grid.size();
        e_full.resize(static_cast<size_t>(n));
        e_half.resize(static_cast<size_t>(n));
        xi.resize(static_cast<size_t>(n));
        for (int j = 0; j < n; ++j) {
            const double k = grid.wavenumber(j);
            xi[j] = k;
            const double omega = k * k * k - nl.transport * k;
            e_full[j] = std::polar(1.0, dt * omega);
            e_half[j] = std::polar(1.0, 0.5 * dt * omega);
        }
        // Nyquist has ambiguous odd-symbol sign; project it out like the
        // odd-order derivatives do.
        e_full[n / 2] = 0.0;
        e_half[n / 2] = 0.0;
    }

    // coefficients of -d/dx (a2 v^2 + a3 v^3); products formed in physical
    // space, zero-padded by 2 when dealiasing (exact for the cubic term)
    Coeffs nonlinear(const Coeffs& c) const {
        const int n = grid.size();
        const int m = dealias ? 2 * n : n;

        Coeffs fine(static_cast<size_t>(m), 0.0);
        for (int j = 0; j < n / 2; ++j) fine[j] = c[j];
        for (int j = n / 2 + 1; j < n; ++j) fine[static_cast<size_t>(j + m - n)] = c[j];

        for (auto& z : fine) z *= static_cast<double>(m);
        fft::backward(fine);

        Coeffs quad(static_cast<size_t>(m)), cub(static_cast<size_t>(m));
        for (int j = 0; j < m; ++j) {
            const double v = fine[j].real();
            quad[j] = v * v;
            cub[j] = v * v * v;
        }
        fft::forward(quad);
        fft::forward(cub);
        const double inv = 1.0 / m;

        Coeffs out(static_cast<size_t>(n));
        for (int j = 0; j < n; ++j) {
            if (j == n / 2) {
                out[j] = 0.0;
                continue;
            }
            const int src = (j < n / 2) ? j : j + m - n;
            const std::complex<double> flux =
                nl.quadratic * quad[src] + nl.cubic * cub[src];
            out[j] = std::complex<double>(0.0, -xi[j]) * flux * inv;
        }
        return out;
    }

    Coeffs rk4(const Coeffs& c) const {
        const int n = grid.size();
        const Coeffs k1 = nonlinear(c);

        Coeffs stage(static_cast<size_t>(n));
        for (int j = 0; j < n; ++j) stage[j] = e_half[j] * (c[j] + 0.5 * dt * k1[j]);
        const Coeffs k2 = nonlinear(stage);

        for (int j = 0; j < n; ++j) stage[j] = e_half[j] * c[j] + 0.5 * dt * k2[j];
        const Coeffs k3 = nonlinear(stage);

        for (int j = 0; j < n; ++j) stage[j] = e_full[j] * c[j] + dt * e_half[j] * k3[j];
        const Coeffs k4 = nonlinear(stage);

        Coeffs out(static_cast<size_t>(n));
        const double w = dt / 6.0;
        for (int j = 0; j < n; ++j) {
            out[j] = e_full[j] * c[j] +
                     w * (e_full[j] * k1[j] + 2.0 * e_half[j] * (k2[j] + k3[j]) + k4[j]);
        }
        return out;
    }
};

double max_abs(const Field& v) {
    double m = 0.0;
    for (double x : v.values) m = std::max(m, std::abs(x));
    return m;
}

void check_guard(const Field& v, const NonlinearCoeffs& nl, double dt) {
    const double xi_max = M_PI / v.grid.dx();
    const double amp = max_abs(v);
    const double rate = std::abs(nl.quadratic) * amp + std::abs(nl.cubic) * amp * amp +
                        std::abs(nl.transport);
    if (std::abs(dt) * xi_max * rate > 1.0) {
        throw ValidationError("nonlinear CFL guard violated: dt*max|xi|*rate > 1");
    }
}

}  // namespace

Field free_propagate(const Field& f, double t) {
    if (!f.all_finite()) throw ValidationError("free_propagate: non-finite input");
    Coeffs c = to_coeffs(f);
    const int n = f.grid.size();
    for (int j = 0; j < n; ++j) {
        const double xi = f.grid.wavenumber(j);
        c[j] *= std::polar(1.0, xi * xi * xi * t);
    }
    c[n / 2] = 0.0;
    return to_field(f.grid, std::move(c));
}

void EvolveConfig::validate() const {
    if (!(dt > 0.0) || !std::isfinite(dt)) throw ValidationError("dt must be positive");
    if (!(t_end >= 0.0) || !std::isfinite(t_end)) throw ValidationError("t_end must be >= 0");
    if (log_every < 1) throw ValidationError("log_every must be >= 1");
}

Field step(const Field& v, double sigma, const EvolveConfig& cfg) {
    return step_general(v, NonlinearCoeffs::mkdv_background(sigma), cfg);
}

Field step_general(const Field& v, const NonlinearCoeffs& coeffs, const EvolveConfig& cfg) {
    if (!v.all_finite()) {
        throw RuntimeFailure(FailureKind::NonFinite, "step: non-finite state");
    }
    check_guard(v, coeffs, cfg.dt);
    StepperContext ctx(v.grid, coeffs, cfg.dt, cfg.dealias);
    Field out = to_field(v.grid, ctx.rk4(to_coeffs(v)));
    if (!out.all_finite()) {
        throw RuntimeFailure(FailureKind::NonFinite, "step produced NaN/Inf");
    }
    return out;
}

ConservedTriple conserved(const Field& v, double sigma) {
    if (!v.all_finite()) throw ValidationError("conserved: non-finite input");
    Field vx = spectral_derivative(v, 1);
    double mean = 0.0, mass = 0.0, energy = 0.0;
    for (int j = 0; j < v.size(); ++j) {
        const double f = v.values[j];
        const double f2 = f * f;
        mean += f;
        mass += f2;
        energy += vx.values[j] * vx.values[j] - f2 * f2 - 4.0 * sigma * f2 * f;
    }
    const double dx = v.grid.dx();
    return {mean * dx, 0.5 * mass * dx, energy * dx};
}

ConservedTriple conserved_general(const Field& v, const NonlinearCoeffs& coeffs) {
    if (!v.all_finite()) throw ValidationError("conserved: non-finite input");
    Field vx = spectral_derivative(v, 1);
    double mean = 0.0, mass = 0.0, energy = 0.0;
    for (int j = 0; j < v.size(); ++j) {
        const double f = v.values[j];
        const double f2 = f * f;
        mean += f;
        mass += f2;
        energy += vx.values[j] * vx.values[j] - coeffs.transport * f2 -
                  (2.0 / 3.0) * coeffs.quadratic * f2 * f - 0.5 * coeffs.cubic * f2 * f2;
    }
    const double dx = v.grid.dx();
    return {mean * dx, 0.5 * mass * dx, energy * dx};
}

Simulation::Simulation(Field v0, NonlinearCoeffs coeffs, EvolveConfig cfg)
    : v_(std::move(v0)), coeffs_(coeffs), cfg_(cfg) {
    cfg_.validate();
    if (!v_.all_finite()) throw ValidationError("simulation: non-finite initial data");
    check_guard(v_, coeffs_, cfg_.dt);
}

void Simulation::advance(int k) {
    StepperContext ctx(v_.grid, coeffs_, cfg_.dt, cfg_.dealias);
    for (int i = 0; i < k; ++i) {
        try {
            check_guard(v_, coeffs_, cfg_.dt);
        } catch (const ValidationError& e) {
            // mid-run guard violations signal blow-up, not a bad config
            throw RuntimeFailure(FailureKind::NonFinite, e.what());
        }
        Field next = to_field(v_.grid, ctx.rk4(to_coeffs(v_)));
        if (!next.all_finite()) {
            throw RuntimeFailure(FailureKind::NonFinite, "step produced NaN/Inf");
        }
        v_ = std::move(next);
        ++steps_;
        t_ = steps_ * cfg_.dt;
    }
}

void Simulation::advance_to(double t) {
    const long target = std::lround(t / cfg_.dt);
    if (target > steps_) advance(static_cast<int>(target - steps_));
}

Field picard_iterate(const Field& v0, const NonlinearCoeffs& coeffs, double t_end,
                     int nodes, int iterations) {
    if (nodes < 4 || nodes % 2 != 0) throw ValidationError("picard: nodes must be even, >= 4");
    if (!(t_end > 0.0)) throw ValidationError("picard: t_end must be positive");
    const int m = nodes;  // intervals; nodes+1 sample points
    const double h = t_end / m;

    // N(v) = -d/dx (a2 v^2 + a3 v^3); Duhamel is v = W(t)v0 + int W(t-t') N dt'
    StepperContext ctx(v0.grid, coeffs, h, true);
    auto rhs = [&](const Field& f) { return to_field(f.grid, ctx.nonlinear(to_coeffs(f))); };

    std::vector<Field> v;
    v.reserve(static_cast<size_t>(m + 1));
    for (int i = 0; i <= m; ++i) v.push_back(free_propagate(v0, i * h));

    for (int it = 0; it < iterations; ++it) {
        std::vector<Field> nlin;
        nlin.reserve(static_cast<size_t>(m + 1));
        for (int i = 0; i <= m; ++i) nlin.push_back(rhs(v[i]));

        std::vector<Field> next;
        next.reserve(static_cast<size_t>(m + 1));
        for (int i = 0; i <= m; ++i) {
            // quadrature weights for int_0^{t_i}, all O(h^4) accurate
            std::vector<double> w(static_cast<size_t>(i + 1), 0.0);
            if (i == 0) {
                // empty integral
            } else if (i == 1) {
                // parabola through the first three nodes: int_0^h = h(5f0+8f1-f2)/12
                w.resize(3);
                w[0] = 5.0 * h / 12.0;
                w[1] = 8.0 * h / 12.0;
                w[2] = -h / 12.0;
            } else if (i % 2 == 0) {
                for (int j = 0; j + 2 <= i; j += 2) {
                    w[j] += h / 3.0;
                    w[j + 1] += 4.0 * h / 3.0;
                    w[j + 2] += h / 3.0;
                }
            } else {
                int j = 0;
                for (; j + 2 <= i - 3; j += 2) {
                    w[j] += h / 3.0;
                    w[j + 1] += 4.0 * h / 3.0;
                    w[j + 2] += h / 3.0;
                }
                w[i - 3] += 3.0 * h / 8.0;
                w[i - 2] += 9.0 * h / 8.0;
                w[i - 1] += 9.0 * h / 8.0;
                w[i] += 3.0 * h / 8.0;
            }
            Field acc = free_propagate(v0, i * h);
            const int jmax = static_cast<int>(w.size()) - 1;
            for (int j = 0; j <= jmax; ++j) {
                if (w[static_cast<size_t>(j)] == 0.0) continue;
                Field term = free_propagate(nlin[j], (i - j) * h);
                acc += w[static_cast<size_t>(j)] * term;
            }
            next.push_back(std::move(acc));
        }
        v = std::move(next);
    }
    return v.back();
}

}  // namespace gardner
