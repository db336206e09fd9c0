#ifndef GARDNER_SOLITONS_HPP
#define GARDNER_SOLITONS_HPP

#include <vector>

#include "gardner/field.hpp"
#include "gardner/grid.hpp"

namespace gardner {

enum class Branch { focusing, defocusing };

const char* branch_name(Branch b);
Branch parse_branch(const std::string& name);

/// Traveling-wave family parameters. Focusing admits c0 in (0, inf);
/// defocusing requires c0 in (0, 4 sigma^2).
struct SolitonParams {
    double sigma = 0.0;
    double c0 = 1.0;
    Branch branch = Branch::focusing;

    void validate() const;  // throws ValidationError on a bad combination
};

/// Wave speed: 6 sigma^2 + c0 (focusing), 6 sigma^2 - c0 (defocusing).
double soliton_speed(const SolitonParams& p);

/// Peak amplitude c0 / (2 sigma + sqrt(4 sigma^2 +- c0)).
double soliton_peak(const SolitonParams& p);

/// Closed-form profile phi(x) centered at 0 and its first two derivatives.
double soliton_value(const SolitonParams& p, double x);
double soliton_slope(const SolitonParams& p, double x);
double soliton_curvature(const SolitonParams& p, double x);

/// phi sampled on the grid, centered at `center`.
Field soliton_profile(const SolitonParams& p, const GridSpec& grid, double center);

struct OdeResiduals {
    double second_order;    // max |phi'' + 2 phi^3 + 6 sigma phi^2 - c0 phi| (sign of the cubic flips defocusing)
    double first_integral;  // max |(phi')^2 + phi^4 + 4 sigma phi^3 - c0 phi^2| (quartic sign flips defocusing)
};

/// Max-norm residuals of the profile in its second-order ODE and first
/// integral, with derivatives taken spectrally.
OdeResiduals ode_residuals(const SolitonParams& p, const GridSpec& grid);

/// L = -d^2/dx^2 + V with V = c_sigma - 6(sigma+phi)^2 (focusing) or
/// V = 6(sigma-phi)^2 - c_sigma (defocusing); both tend to c0 at infinity.
/// Translation invariance puts phi' in the kernel.
class LinearizedOperator {
public:
    LinearizedOperator(const SolitonParams& p, const GridSpec& grid);

    const Field& potential() const { return potential_; }
    const SolitonParams& params() const { return params_; }

    Field apply(const Field& f) const;

    /// Full spectrum of the discretized operator, ascending. Dense symmetric
    /// eigensolve in the grid basis; intended for moderate n (<= 2048).
    std::vector<double> eigenvalues() const;

private:
    SolitonParams params_;
    Field potential_;
};

}  // namespace gardner

#endif
