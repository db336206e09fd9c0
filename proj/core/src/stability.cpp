#include "gardner/stability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gardner/errors.hpp"
#include "gardner/norms.hpp"
#include "gardner/rng.hpp"

namespace gardner {

namespace {

double branch_sign(const SolitonParams& p) {
    return p.branch == Branch::focusing ? 1.0 : -1.0;
}

// sigma +- phi(x + r) sampled on the grid
Field modulated_target(const SolitonParams& p, const GridSpec& grid, double r) {
    const double bs = branch_sign(p);
    return sample(grid, [&](double x) { return p.sigma + bs * soliton_value(p, x + r); });
}

Field to_full_field(const Field& deviation, const SolitonParams& p) {
    const double bs = branch_sign(p);
    Field u = deviation;
    for (double& v : u.values) v = p.sigma + bs * v;
    return u;
}

}  // namespace

double expected_phase_velocity(const SolitonParams& p) {
    p.validate();
    return p.branch == Branch::focusing ? -(p.c0 + 6.0 * p.sigma * p.sigma)
                                        : 6.0 * p.sigma * p.sigma - p.c0;
}

double modulation_F(const Field& u, const SolitonParams& p, double r) {
    p.validate();
    if (!u.all_finite()) throw ValidationError("modulation_F: non-finite input");
    Field target = modulated_target(p, u.grid, r);
    double acc = 0.0;
    for (int j = 0; j < u.size(); ++j) {
        const double d = u.values[j] - target.values[j];
        acc += d * d;
    }
    return 0.5 * acc * u.grid.dx();
}

double modulation_G(const Field& u, const SolitonParams& p, double r) {
    p.validate();
    if (!u.all_finite()) throw ValidationError("modulation_G: non-finite input");
    // dF/dr = -bs * integral u phi'(x+r) dx; constant and phi phi' terms vanish
    const double bs = branch_sign(p);
    double acc = 0.0;
    for (int j = 0; j < u.size(); ++j) {
        acc += u.values[j] * soliton_slope(p, u.grid.x(j) + r);
    }
    return -bs * acc * u.grid.dx();
}

double phase_ode_rhs(const Field& u, const SolitonParams& p, double r) {
    p.validate();
    if (!u.all_finite()) throw ValidationError("phase_ode_rhs: non-finite input");
    const double bs = branch_sign(p);
    const double dx = u.grid.dx();

    double num = 0.0, den = 0.0, vp_sq = 0.0;
    for (int j = 0; j < u.size(); ++j) {
        const double x = u.grid.x(j) + r;
        const double v = p.sigma + bs * soliton_value(p, x);
        const double vp = bs * soliton_slope(p, x);
        const double vpp = bs * soliton_curvature(p, x);
        const double h = u.values[j] - v;
        num += h * (-12.0 * v * vp * vp + 6.0 * h * v * vpp + 2.0 * h * h * vpp);
        den += -vp * vp + h * vpp;
        vp_sq += vp * vp;
    }
    num *= dx;
    den *= dx;
    vp_sq *= dx;
    if (std::abs(den) < 1e-10 * vp_sq) {
        throw RuntimeFailure(FailureKind::DegenerateDenominator,
                             "phase ODE denominator too close to zero");
    }
    const double c_sigma = soliton_speed(p);
    // focusing: r' = -(c_sigma + N/D); defocusing: r' = +(c_sigma + N/D)
    return (p.branch == Branch::focusing ? -1.0 : 1.0) * (c_sigma + num / den);
}

double d_functional(const SolitonParams& p, const GridSpec& grid) {
    p.validate();
    const double quartic_sign = (p.branch == Branch::focusing) ? -1.0 : 1.0;
    double acc = 0.0;
    for (int j = 0; j < grid.size(); ++j) {
        const double x = grid.x(j);
        const double f = soliton_value(p, x);
        const double fx = soliton_slope(p, x);
        acc += fx * fx + quartic_sign * f * f * f * f - 4.0 * p.sigma * f * f * f +
               p.c0 * f * f;
    }
    return acc * grid.dx();
}

DSecond d_second(const SolitonParams& p, const GridSpec& grid, double h_c0) {
    p.validate();
    if (h_c0 <= 0.0) h_c0 = 1e-4 * p.c0;
    SolitonParams lo = p, hi = p;
    lo.c0 = p.c0 - h_c0;
    hi.c0 = p.c0 + h_c0;
    lo.validate();  // rejects c0 - h <= 0 and the defocusing upper bound
    hi.validate();

    DSecond out;
    const double d0 = d_functional(p, grid);
    const double dlo = d_functional(lo, grid);
    const double dhi = d_functional(hi, grid);
    out.second_difference = (dhi - 2.0 * d0 + dlo) / (h_c0 * h_c0);

    Field phi = soliton_profile(p, grid, 0.0);
    Field phi_lo = soliton_profile(lo, grid, 0.0);
    Field phi_hi = soliton_profile(hi, grid, 0.0);
    double acc = 0.0;
    for (int j = 0; j < grid.size(); ++j) {
        const double dphi = (phi_hi.values[j] - phi_lo.values[j]) / (2.0 * h_c0);
        acc += phi.values[j] * dphi;
    }
    out.quadrature = 2.0 * acc * grid.dx();

    out.closed_form = (p.branch == Branch::focusing)
                          ? std::sqrt(p.c0) / (4.0 * p.sigma * p.sigma + p.c0)
                          : std::numeric_limits<double>::quiet_NaN();
    return out;
}

const char* perturbation_shape_name(PerturbationShape s) {
    switch (s) {
        case PerturbationShape::family: return "family";
        case PerturbationShape::bump: return "bump";
        case PerturbationShape::noise: return "noise";
    }
    return "unknown";
}

PerturbationShape parse_perturbation_shape(const std::string& name) {
    if (name == "family") return PerturbationShape::family;
    if (name == "bump") return PerturbationShape::bump;
    if (name == "noise") return PerturbationShape::noise;
    throw ValidationError("unknown perturbation shape '" + name + "' (family|bump|noise)");
}

Field make_perturbation(PerturbationShape shape, const SolitonParams& p,
                        const GridSpec& grid, double center, double delta, uint64_t seed) {
    p.validate();
    Field g(grid);
    const double kappa = std::sqrt(p.c0);

    switch (shape) {
        case PerturbationShape::family: {
            SolitonParams q = p;
            q.c0 = 1.1 * p.c0;
            if (p.branch == Branch::defocusing && !(q.c0 < 4.0 * p.sigma * p.sigma)) {
                q.c0 = 0.9 * p.c0;
            }
            Field a = soliton_profile(q, grid, center);
            Field b = soliton_profile(p, grid, center);
            g = a - b;
            break;
        }
        case PerturbationShape::bump: {
            const double width = 1.0 / kappa;
            g = sample(grid, [&](double x) {
                const double z = (x - center) / width;
                return std::exp(-z * z);
            });
            break;
        }
        case PerturbationShape::noise: {
            Rng rng = Rng::stream(seed, 0x6e6f697365ULL);
            SpectralField gh(grid);
            const int n = grid.size();
            const double xi_cap = 4.0 * kappa;
            for (int k = 1; k < n / 2; ++k) {
                const double xi = grid.wavenumber(k);
                if (xi > xi_cap) break;
                const std::complex<double> c(rng.normal(), rng.normal());
                gh.coeffs[k] = c;
                gh.coeffs[n - k] = std::conj(c);
            }
            g = inverse(gh);
            break;
        }
    }

    const double h1 = sobolev_norm(g, 1.0);
    if (!(h1 > 0.0)) throw ValidationError("perturbation is identically zero");
    return (delta / h1) * g;
}

PhaseTracker::PhaseTracker(SolitonParams p, double r0)
    : params_(p), r_(r0), r_rate_(0.0), t_prev_(0.0) {
    p.validate();
}

double PhaseTracker::lock(const Field& u, double t) {
    const double window = 2.0 / std::sqrt(params_.c0);
    const double seed = have_rate_ ? r_ + r_rate_ * (t - t_prev_) : r_;

    auto g = [&](double r) { return modulation_G(u, params_, r); };

    // G increases through the locked root (dG/dr ~ ||phi'||^2 > 0), so expand
    // a bracket around the prediction until the signs straddle.
    double a = seed - window / 64.0, b = seed + window / 64.0;
    double ga = g(a), gb = g(b);
    while (!(ga <= 0.0 && gb >= 0.0)) {
        const double half = (b - a);  // doubles the bracket each round
        a -= half / 2.0;
        b += half / 2.0;
        if (b - a > 2.0 * window) {
            throw RuntimeFailure(FailureKind::RootLost,
                                 "no sign change of G within the search window");
        }
        ga = g(a);
        gb = g(b);
    }

    // safeguarded secant: fall back to bisection when the secant step leaves
    // the bracket or stalls
    double r = 0.5 * (a + b);
    for (int it = 0; it < 80 && (b - a) > 1e-12 * (1.0 + std::abs(seed)); ++it) {
        double cand = (gb != ga) ? (a - ga * (b - a) / (gb - ga)) : r;
        if (!(cand > a && cand < b)) cand = 0.5 * (a + b);
        const double gc = g(cand);
        if (gc == 0.0) {
            a = b = cand;
        } else if (gc < 0.0) {
            a = cand;
            ga = gc;
        } else {
            b = cand;
            gb = gc;
        }
        r = 0.5 * (a + b);
    }

    if (t > t_prev_) {
        r_rate_ = (r - r_) / (t - t_prev_);
        have_rate_ = true;
    }
    r_ = r;
    t_prev_ = t;
    return r;
}

StabilityResult run_stability_experiment(const SolitonParams& p, PerturbationShape shape,
                                         double delta, uint64_t seed,
                                         const GridSpec& grid, const StabilityRunConfig& cfg) {
    p.validate();
    Field phi = soliton_profile(p, grid, 0.0);
    Field z0 = phi + make_perturbation(shape, p, grid, 0.0, delta, seed);

    const NonlinearCoeffs coeffs = (p.branch == Branch::focusing)
                                       ? NonlinearCoeffs::mkdv_background(p.sigma)
                                       : NonlinearCoeffs::defocusing_background(p.sigma);
    EvolveConfig ecfg;
    ecfg.dt = cfg.dt;
    ecfg.t_end = cfg.t_end;
    ecfg.dealias = cfg.dealias;
    Simulation sim(std::move(z0), coeffs, ecfg);

    PhaseTracker tracker(p, 0.0);
    const double expected_rp = expected_phase_velocity(p);

    StabilityResult result;
    result.report.params = p;
    result.report.delta = delta;

    const int n_samples = static_cast<int>(std::llround(cfg.t_end / cfg.sample_dt)) + 1;
    for (int i = 0; i < n_samples; ++i) {
        const double ts = i * cfg.sample_dt;
        sim.advance_to(ts);
        Field u = to_full_field(sim.state(), p);

        ModulationSample s;
        s.t = sim.time();
        try {
            s.r = tracker.lock(u, s.t);
        } catch (const RuntimeFailure& e) {
            if (e.kind() != FailureKind::RootLost) throw;
            result.report.root_lost = true;
            result.report.root_lost_time = s.t;
            break;
        }
        Field target = modulated_target(p, grid, s.r);
        s.h1_distance = sobolev_norm(u - target, 1.0);
        s.conserved = conserved_general(sim.state(), coeffs);
        result.trace.samples.push_back(s);
    }

    // r' by centered differences, second-order one-sided at the ends
    auto& samples = result.trace.samples;
    const int m = static_cast<int>(samples.size());
    const double h = cfg.sample_dt;
    for (int i = 0; i < m; ++i) {
        if (m < 3) {
            samples[i].r_prime = expected_rp;
        } else if (i == 0) {
            samples[i].r_prime =
                (-3.0 * samples[0].r + 4.0 * samples[1].r - samples[2].r) / (2.0 * h);
        } else if (i == m - 1) {
            samples[i].r_prime =
                (3.0 * samples[i].r - 4.0 * samples[i - 1].r + samples[i - 2].r) / (2.0 * h);
        } else {
            samples[i].r_prime = (samples[i + 1].r - samples[i - 1].r) / (2.0 * h);
        }
    }

    double eps = 0.0, dev = 0.0;
    for (const auto& s : samples) {
        eps = std::max(eps, s.h1_distance);
        dev = std::max(dev, std::abs(s.r_prime - expected_rp));
    }
    result.report.epsilon_observed = eps;
    result.report.speed_deviation = dev;
    result.report.measured_K = (delta > 0.0) ? eps / delta : 0.0;
    result.report.pass = !result.report.root_lost && eps <= cfg.pass_K * delta &&
                         dev <= cfg.pass_K * delta;
    return result;
}

}  // namespace gardner
