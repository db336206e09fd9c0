#ifndef GARDNER_XSB_HPP
#define GARDNER_XSB_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "gardner/grid.hpp"
#include "gardner/spacetime.hpp"

namespace gardner {

enum class EnsembleKind { generic_random, airy_concentrated, near_resonant_pair };

const char* ensemble_kind_name(EnsembleKind k);
EnsembleKind parse_ensemble_kind(const std::string& name);

/// Ensemble of space-time samples for the multilinear-estimate ratios.
/// Per-sample RNG streams are derived from the seed, so samples are
/// reproducible and order-independent.
struct EnsembleSpec {
    int count = 64;
    EnsembleKind kind = EnsembleKind::generic_random;
    uint64_t seed = 0;
    double s = 0.5;        // must be > 1/4 for the trilinear form
    double b = 0.51;       // in (1/2, 1)
    GridSpec grid;
    int nt = 256;
    double t_half = 2.0;   // window must contain the cutoff support (-1, 1)

    void validate() const;
};

struct RatioSample {
    int sample_id = 0;
    double ratio = 0.0;
};

struct RatioStats {
    std::vector<RatioSample> samples;
    double max = 0.0;
    double mean = 0.0;
    double p50 = 0.0;
    double p95 = 0.0;
};

/// R = ||d/dx(u1 u2 u3)||_{X^{s,b-1}} / prod ||phi_i||_{X^{s,b}} with
/// u_i = psi(t) phi_i. The ensemble max is an empirical lower bound for the
/// trilinear constant; boundedness across refinements is evidence, not proof.
RatioStats sample_trilinear_ratio(const EnsembleSpec& spec);

/// R_a = ||u1 u2||_{L2} / (||phi1||_{X^{s,b}} ||phi2||_{X^{-1/2,1-b}}).
RatioStats sample_bilinear_l2_ratio(const EnsembleSpec& spec);

/// R_b = ||d/dx(u1 u2)||_{X^{s,b-1}} / (||phi1||_{X^{s,b}} ||phi2||_{X^{s,b}});
/// requires s > 0.
RatioStats sample_bilinear_dx_ratio(const EnsembleSpec& spec);

/// ||psi(t/delta) W(t) v0||_{X^{s,b}} for each delta; fitting log(norm) against
/// log(delta) estimates the exponent (1-2b)/2 of the free-evolution bound.
struct CutoffScalingFit {
    std::vector<double> deltas;
    std::vector<double> norms;
    double fitted_exponent = 0.0;
    double predicted_exponent = 0.0;  // (1-2b)/2
};

CutoffScalingFit cutoff_scaling_fit(const EnsembleSpec& spec, const std::vector<double>& deltas);

/// One sample's ingredients, exposed for the invariance tests.
std::vector<SpaceTimeField> make_sample_factors(const EnsembleSpec& spec, int sample_id, int arity);

SpaceTimeField apply_time_cutoff(const SpaceTimeField& phi);

}  // namespace gardner

#endif
