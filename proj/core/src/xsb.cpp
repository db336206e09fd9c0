#include "gardner/xsb.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "gardner/cutoff.hpp"
#include "gardner/errors.hpp"
#include "gardner/evolve.hpp"
#include "gardner/norms.hpp"
#include "gardner/rng.hpp"

namespace gardner {

const char* ensemble_kind_name(EnsembleKind k) {
    switch (k) {
        case EnsembleKind::generic_random: return "generic-random";
        case EnsembleKind::airy_concentrated: return "airy-concentrated";
        case EnsembleKind::near_resonant_pair: return "near-resonant-pair";
    }
    return "unknown";
}

EnsembleKind parse_ensemble_kind(const std::string& name) {
    if (name == "generic-random") return EnsembleKind::generic_random;
    if (name == "airy-concentrated") return EnsembleKind::airy_concentrated;
    if (name == "near-resonant-pair") return EnsembleKind::near_resonant_pair;
    throw ValidationError("unknown ensemble kind '" + name + "'");
}

void EnsembleSpec::validate() const {
    if (count < 1) throw ValidationError("ensemble count must be >= 1");
    if (!(s > 0.25)) throw ValidationError("ensemble s must be > 1/4");
    if (!(b > 0.5 && b < 1.0)) throw ValidationError("ensemble b must lie in (1/2, 1)");
    if (nt < 8 || (nt & (nt - 1)) != 0) {
        throw ValidationError("nt must be a power of two >= 8");
    }
    if (!(t_half > 1.0)) {
        throw ValidationError("t_half must exceed 1 so the window contains supp psi");
    }
}

namespace {

// Frequency budget: the spatial band is capped so the cubic product stays
// below the grid Nyquist, and below the cube-root of the tau range so the
// dispersion curve tau = xi^3 stays inside the window.
double spatial_band(const EnsembleSpec& spec) {
    const double xi_max = M_PI / spec.grid.dx();
    const double tau_max = M_PI * (spec.nt / 2) / spec.t_half;
    return std::min(xi_max / 3.0, std::cbrt(0.5 * tau_max));
}

Field gaussian_packet(const GridSpec& grid, double center, double width, double xi0,
                      double phase) {
    return sample(grid, [&](double x) {
        const double z = (x - center) / width;
        return std::exp(-z * z) * std::cos(xi0 * x + phase);
    });
}

SpaceTimeField free_flow(const EnsembleSpec& spec, const Field& g) {
    SpaceTimeField out(spec.grid, spec.nt, spec.t_half);
    for (int it = 0; it < spec.nt; ++it) out.set_slice(it, free_propagate(g, out.t(it)));
    return out;
}

Field random_band_limited(const EnsembleSpec& spec, Rng& rng) {
    SpectralField gh(spec.grid);
    const int n = spec.grid.size();
    const double cap = spatial_band(spec);
    for (int k = 1; k < n / 2; ++k) {
        if (spec.grid.wavenumber(k) > cap) break;
        const std::complex<double> c(rng.normal(), rng.normal());
        gh.coeffs[k] = c;
        gh.coeffs[n - k] = std::conj(c);
    }
    return inverse(gh);
}

SpaceTimeField generic_random_factor(const EnsembleSpec& spec, Rng& rng) {
    // sum of localized wave packets at generic (xi, tau) points; tau stays
    // below a quarter of the window so triple products do not wrap
    const double L = spec.grid.half_length();
    const double xi_cap = spatial_band(spec);
    const double tau_cap = 0.25 * M_PI * (spec.nt / 2) / spec.t_half;
    SpaceTimeField out(spec.grid, spec.nt, spec.t_half);
    const int packets = 4;
    for (int p = 0; p < packets; ++p) {
        const double amp = rng.uniform(0.5, 1.5);
        const double x0 = rng.uniform(-0.25 * L, 0.25 * L);
        const double t0 = rng.uniform(-0.25 * spec.t_half, 0.25 * spec.t_half);
        const double wx = L / 10.0;
        const double wt = spec.t_half / 4.0;
        const double xi0 = rng.uniform(-xi_cap, xi_cap);
        const double tau0 = rng.uniform(-tau_cap, tau_cap);
        const double th = rng.uniform(0.0, 2.0 * M_PI);
        for (int it = 0; it < spec.nt; ++it) {
            const double t = out.t(it);
            const double et = std::exp(-std::pow((t - t0) / wt, 2));
            for (int ix = 0; ix < spec.grid.size(); ++ix) {
                const double x = spec.grid.x(ix);
                const double ex = std::exp(-std::pow((x - x0) / wx, 2));
                out.at(it, ix) += amp * ex * et * std::cos(xi0 * x + tau0 * t + th);
            }
        }
    }
    return out;
}

}  // namespace

SpaceTimeField apply_time_cutoff(const SpaceTimeField& phi) {
    SpaceTimeField out = phi;
    for (int it = 0; it < phi.nt; ++it) {
        const double w = smooth_cutoff(phi.t(it));
        for (int ix = 0; ix < phi.grid.size(); ++ix) out.at(it, ix) *= w;
    }
    return out;
}

std::vector<SpaceTimeField> make_sample_factors(const EnsembleSpec& spec, int sample_id,
                                                int arity) {
    spec.validate();
    std::vector<SpaceTimeField> factors;
    factors.reserve(static_cast<size_t>(arity));

    switch (spec.kind) {
        case EnsembleKind::generic_random: {
            for (int i = 0; i < arity; ++i) {
                Rng rng = Rng::stream(spec.seed, static_cast<uint64_t>(sample_id) * 16 + i);
                factors.push_back(generic_random_factor(spec, rng));
            }
            break;
        }
        case EnsembleKind::airy_concentrated: {
            // psi(t) W(t) g sits on tau = xi^3 smeared by the cutoff width
            for (int i = 0; i < arity; ++i) {
                Rng rng = Rng::stream(spec.seed, static_cast<uint64_t>(sample_id) * 16 + i);
                Field g = random_band_limited(spec, rng);
                factors.push_back(apply_time_cutoff(free_flow(spec, g)));
            }
            break;
        }
        case EnsembleKind::near_resonant_pair: {
            Rng rng = Rng::stream(spec.seed, static_cast<uint64_t>(sample_id) * 16);
            const double cap = spatial_band(spec);
            const double xi0 = rng.uniform(0.5 * cap, 0.9 * cap);
            const double detune = 0.05 * cap * rng.normal();
            const double L = spec.grid.half_length();
            for (int i = 0; i < arity; ++i) {
                double xi_i;
                if (i == 0) {
                    xi_i = xi0;
                } else if (i == 1) {
                    xi_i = -xi0 + detune;  // output frequencies pile up near zero
                } else {
                    xi_i = rng.uniform(0.0, 0.2 * cap);
                }
                Field g = gaussian_packet(spec.grid, rng.uniform(-0.1 * L, 0.1 * L), L / 10.0,
                                          xi_i, rng.uniform(0.0, 2.0 * M_PI));
                factors.push_back(free_flow(spec, g));
            }
            break;
        }
    }
    return factors;
}

namespace {

template <typename Fn>
RatioStats collect(const EnsembleSpec& spec, Fn&& one_sample) {
    spec.validate();
    RatioStats stats;
    stats.samples.resize(static_cast<size_t>(spec.count));

    const unsigned workers =
        std::max(1u, std::min(std::thread::hardware_concurrency(), 8u));
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    auto worker = [&] {
        for (;;) {
            const int id = next.fetch_add(1);
            if (id >= spec.count) return;
            stats.samples[static_cast<size_t>(id)] = RatioSample{id, one_sample(id)};
        }
    };
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    std::vector<double> sorted;
    sorted.reserve(stats.samples.size());
    double sum = 0.0;
    for (const auto& s : stats.samples) {
        sorted.push_back(s.ratio);
        sum += s.ratio;
    }
    std::sort(sorted.begin(), sorted.end());
    const size_t m = sorted.size();
    stats.max = sorted.back();
    stats.mean = sum / static_cast<double>(m);
    stats.p50 = sorted[(m - 1) / 2];
    stats.p95 = sorted[std::min(m - 1, static_cast<size_t>(std::ceil(0.95 * m)) - 1)];
    return stats;
}

double checked_ratio(double num, double den) {
    if (!(den > 0.0)) throw ValidationError("sample has zero denominator norm");
    return num / den;
}

}  // namespace

RatioStats sample_trilinear_ratio(const EnsembleSpec& spec) {
    return collect(spec, [&](int id) {
        auto phi = make_sample_factors(spec, id, 3);
        auto u1 = apply_time_cutoff(phi[0]);
        auto u2 = apply_time_cutoff(phi[1]);
        auto u3 = apply_time_cutoff(phi[2]);
        auto prod = pointwise_product(pointwise_product(u1, u2), u3);
        const double num = xsb_norm(space_derivative(prod), spec.s, spec.b - 1.0);
        const double den = xsb_norm(phi[0], spec.s, spec.b) * xsb_norm(phi[1], spec.s, spec.b) *
                           xsb_norm(phi[2], spec.s, spec.b);
        return checked_ratio(num, den);
    });
}

RatioStats sample_bilinear_l2_ratio(const EnsembleSpec& spec) {
    return collect(spec, [&](int id) {
        auto phi = make_sample_factors(spec, id, 2);
        auto u1 = apply_time_cutoff(phi[0]);
        auto u2 = apply_time_cutoff(phi[1]);
        const double num = l2_norm(pointwise_product(u1, u2));
        const double den =
            xsb_norm(phi[0], spec.s, spec.b) * xsb_norm(phi[1], -0.5, 1.0 - spec.b);
        return checked_ratio(num, den);
    });
}

RatioStats sample_bilinear_dx_ratio(const EnsembleSpec& spec) {
    if (!(spec.s > 0.0)) throw ValidationError("bilinear derivative ratio needs s > 0");
    return collect(spec, [&](int id) {
        auto phi = make_sample_factors(spec, id, 2);
        auto u1 = apply_time_cutoff(phi[0]);
        auto u2 = apply_time_cutoff(phi[1]);
        auto prod = pointwise_product(u1, u2);
        const double num = xsb_norm(space_derivative(prod), spec.s, spec.b - 1.0);
        const double den = xsb_norm(phi[0], spec.s, spec.b) * xsb_norm(phi[1], spec.s, spec.b);
        return checked_ratio(num, den);
    });
}

CutoffScalingFit cutoff_scaling_fit(const EnsembleSpec& spec, const std::vector<double>& deltas) {
    spec.validate();
    if (deltas.size() < 2) throw ValidationError("need at least two deltas to fit");
    for (double d : deltas) {
        if (!(d > 0.0 && d <= 1.0)) throw ValidationError("deltas must lie in (0, 1]");
    }

    Rng rng = Rng::stream(spec.seed, 0xf17ULL);
    Field g = random_band_limited(spec, rng);

    CutoffScalingFit fit;
    fit.deltas = deltas;
    for (double d : deltas) {
        SpaceTimeField f = free_flow(spec, g);
        for (int it = 0; it < f.nt; ++it) {
            const double w = smooth_cutoff_scaled(f.t(it), d);
            for (int ix = 0; ix < f.grid.size(); ++ix) f.at(it, ix) *= w;
        }
        fit.norms.push_back(xsb_norm(f, spec.s, spec.b));
    }

    // least-squares slope of log(norm) against log(delta)
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    const double m = static_cast<double>(deltas.size());
    for (size_t i = 0; i < deltas.size(); ++i) {
        const double x = std::log(deltas[i]);
        const double y = std::log(fit.norms[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    fit.fitted_exponent = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    fit.predicted_exponent = 0.5 * (1.0 - 2.0 * spec.b);
    return fit;
}

}  // namespace gardner
