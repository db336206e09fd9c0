#ifndef GARDNER_STABILITY_HPP
#define GARDNER_STABILITY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "gardner/evolve.hpp"
#include "gardner/field.hpp"
#include "gardner/solitons.hpp"

namespace gardner {

/// F(r,t) = 1/2 integral (u - (sigma + phi(.+r)))^2 dx; the defocusing branch
/// compares against sigma - phi(.+r). u is the full field, background included.
double modulation_F(const Field& u, const SolitonParams& p, double r);

/// G = dF/dr. Reduces to -integral u phi'(.+r) dx (focusing) and
/// +integral u phi'(.+r) dx (defocusing); the phi phi' and constant terms
/// integrate to zero.
double modulation_G(const Field& u, const SolitonParams& p, double r);

/// Exact phase velocity at the locked root:
///   r' = s * (c_sigma + N/D),  s = -1 focusing, +1 defocusing,
/// with v = sigma +- phi(.+r), h = u - v,
///   N = integral h (-12 v (v')^2 + 6 h v v'' + 2 h^2 v'') dx,
///   D = integral (-(v')^2 + h v'') dx.
/// h == 0 gives r' = -(c0 + 6 sigma^2) (focusing). Throws
/// RuntimeFailure(DegenerateDenominator) when |D| < 1e-10 * ||v'||^2.
double phase_ode_rhs(const Field& u, const SolitonParams& p, double r);

/// d(c0): the Lyapunov functional at the soliton,
/// integral ((phi_x)^2 - phi^4 - 4 sigma phi^3 + c0 phi^2) dx for focusing
/// (quartic sign flips for defocusing).
double d_functional(const SolitonParams& p, const GridSpec& grid);

struct DSecond {
    double second_difference;  // centered second difference of d over c0 +- h
    double quadrature;         // 2 integral phi d(phi)/d(c0) dx, centered profiles
    double closed_form;        // sqrt(c0)/(4 sigma^2 + c0); NaN for defocusing
};

/// Both numerical routes to d''(c0). h_c0 <= 0 selects the default 1e-4*c0.
DSecond d_second(const SolitonParams& p, const GridSpec& grid, double h_c0 = 0.0);

enum class PerturbationShape { family, bump, noise };

const char* perturbation_shape_name(PerturbationShape s);
PerturbationShape parse_perturbation_shape(const std::string& name);

/// H1-normalized perturbation of the requested shape, scaled by delta:
/// family = profile mismatch phi(c0*1.1) - phi(c0); bump = concentrated
/// Gaussian; noise = seeded band-limited noise.
Field make_perturbation(PerturbationShape shape, const SolitonParams& p,
                        const GridSpec& grid, double center, double delta, uint64_t seed);

struct ModulationSample {
    double t = 0.0;
    double r = 0.0;
    double r_prime = 0.0;
    double h1_distance = 0.0;
    ConservedTriple conserved;
};

struct ModulationTrace {
    std::vector<ModulationSample> samples;
};

struct StabilityReport {
    SolitonParams params;
    double delta = 0.0;
    double epsilon_observed = 0.0;   // sup_t of the modulated H1 distance
    double speed_deviation = 0.0;    // sup_t |r'(t) - expected r'|
    double measured_K = 0.0;         // epsilon_observed / delta
    bool root_lost = false;
    double root_lost_time = 0.0;
    bool pass = false;               // against the configured K bound
};

/// Locks r(t) as the root of G(., t) by safeguarded bisection+secant, seeded
/// at the previous root extrapolated by the previous velocity. Throws
/// RuntimeFailure(RootLost) when no sign change exists within half-width
/// 2/sqrt(c0) of the prediction.
class PhaseTracker {
public:
    PhaseTracker(SolitonParams p, double r0);

    /// u is the full field (background included) at time t.
    double lock(const Field& u, double t);

    double last_r() const { return r_; }

private:
    SolitonParams params_;
    double r_;
    double r_rate_;
    double t_prev_;
    bool have_rate_ = false;
};

struct StabilityRunConfig {
    double dt = 1e-3;
    double t_end = 50.0;
    double sample_dt = 0.1;
    bool dealias = true;
    double pass_K = 50.0;  // report.pass asserts sup distances <= pass_K * delta
};

/// Evolves the perturbed soliton, tracking the modulated phase and H1
/// distance. r_prime is filled by centered differences of the sampled r
/// (second-order one-sided at the ends).
struct StabilityResult {
    ModulationTrace trace;
    StabilityReport report;
};

StabilityResult run_stability_experiment(const SolitonParams& p, PerturbationShape shape,
                                         double delta, uint64_t seed,
                                         const GridSpec& grid, const StabilityRunConfig& cfg);

/// Expected locked-phase velocity: -(c0 + 6 sigma^2) focusing,
/// +(6 sigma^2 - c0) defocusing.
double expected_phase_velocity(const SolitonParams& p);

}  // namespace gardner

#endif
