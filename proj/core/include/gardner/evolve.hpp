#ifndef GARDNER_EVOLVE_HPP
#define GARDNER_EVOLVE_HPP

#include <cstdint>
#include <optional>

#include "gardner/field.hpp"
#include "gardner/solitons.hpp"

namespace gardner {

/// Exact solution operator of v_t + v_xxx = 0: multiply the coefficient at
/// wavenumber xi by exp(i xi^3 t). The Nyquist mode is projected out (xi^3 is
/// odd, so its phase has the same sign ambiguity as odd derivatives).
Field free_propagate(const Field& f, double t);

/// Coefficients of v_t + v_xxx + a1 v_x + a2 (v^2)_x + a3 (v^3)_x = 0.
///
/// Substituting u = sigma + v into the focusing mKdV gives
/// {6 sigma^2, 6 sigma, 2}; the zero-transport frame {0, 6 sigma, 2} is the
/// same flow in coordinates moving at 6 sigma^2 (only in that frame does the
/// lambda-scaling substitution close). The soliton travels at 6 sigma^2 + c0
/// in the background frame and at c0 in the zero-transport frame.
struct NonlinearCoeffs {
    double transport = 0.0;
    double quadratic = 0.0;
    double cubic = 0.0;

    /// focusing mKdV on background sigma (deviation form); soliton speed
    /// 6 sigma^2 + c0
    static NonlinearCoeffs mkdv_background(double sigma) {
        return {6.0 * sigma * sigma, 6.0 * sigma, 2.0};
    }
    /// zero-transport (Galilean-shifted) frame used by the scaling substitution
    static NonlinearCoeffs gardner_frame(double sigma) { return {0.0, 6.0 * sigma, 2.0}; }
    /// defocusing mKdV on background sigma; soliton argument x + (6 sigma^2 - c0) t
    static NonlinearCoeffs defocusing_background(double sigma) {
        return {-6.0 * sigma * sigma, 6.0 * sigma, -2.0};
    }
};

struct EvolveConfig {
    double dt = 1e-3;
    double t_end = 0.0;
    bool dealias = true;  // zero-padding by 2, exact for the cubic product
    int log_every = 100;  // steps between conserved-quantity samples

    void validate() const;
};

/// One integrating-factor RK4 step of the soliton-bearing flow
/// v_t = -v_xxx - 6 sigma^2 v_x - 6 sigma (v^2)_x - 2 (v^3)_x
/// (focusing mKdV on background sigma; sigma = 0 is the plain mKdV step).
/// Throws RuntimeFailure(NonFinite) if the step blows up, ValidationError if
/// the nonlinear CFL-style guard dt*max|xi|*(6|sigma| max|v| + 2 max|v|^2) > 1
/// fails (the linear part is integrated exactly and needs no guard).
Field step(const Field& v, double sigma, const EvolveConfig& cfg);

Field step_general(const Field& v, const NonlinearCoeffs& coeffs, const EvolveConfig& cfg);

/// mean = integral(v), mass = 1/2 integral(v^2),
/// energy = integral(v_x^2 - v^4 - 4 sigma v^3).
struct ConservedTriple {
    double mean = 0.0;
    double mass = 0.0;
    double energy = 0.0;
};

/// The three invariants above; the energy is conserved with or without the
/// Galilean transport term (it has no explicit x dependence).
ConservedTriple conserved(const Field& v, double sigma);

/// Hamiltonian-form invariants of the general equation:
/// energy = integral(v_x^2 - a1 v^2 - (2 a2/3) v^3 - (a3/2) v^4).
ConservedTriple conserved_general(const Field& v, const NonlinearCoeffs& coeffs);

/// Stateful time marcher. Keeps the last finite state so a blow-up can be
/// reported with the field that preceded it.
class Simulation {
public:
    Simulation(Field v0, NonlinearCoeffs coeffs, EvolveConfig cfg);

    /// Advances by exactly k steps of cfg.dt. Throws RuntimeFailure(NonFinite)
    /// on blow-up; last_valid() then holds the state before the bad step.
    void advance(int k);

    /// Advances until time() >= t (within half a step).
    void advance_to(double t);

    const Field& state() const { return v_; }
    const Field& last_valid() const { return v_; }
    double time() const { return t_; }
    long steps_taken() const { return steps_; }
    const NonlinearCoeffs& coeffs() const { return coeffs_; }
    const EvolveConfig& config() const { return cfg_; }

private:
    Field v_;
    NonlinearCoeffs coeffs_;
    EvolveConfig cfg_;
    double t_ = 0.0;
    long steps_ = 0;
};

/// Five Picard iterations of the Duhamel map
///   v(t) = W(t) v0 - int_0^t W(t-t') d/dx [a2 v^2 + a3 v^3](t') dt'
/// on [0, t_end], evaluated at t_end. Diagnostic tying the stepper to the
/// fixed-point formulation; agreement with RK4 is O(t_end^5).
Field picard_iterate(const Field& v0, const NonlinearCoeffs& coeffs, double t_end,
                     int nodes, int iterations);

}  // namespace gardner

#endif
