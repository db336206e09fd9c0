#include "gardner/solitons.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <string>

#include "gardner/errors.hpp"
#include "gardner/norms.hpp"

namespace gardner {

const char* branch_name(Branch b) {
    return b == Branch::focusing ? "focusing" : "defocusing";
}

Branch parse_branch(const std::string& name) {
    if (name == "focusing") return Branch::focusing;
    if (name == "defocusing") return Branch::defocusing;
    throw ValidationError("unknown branch '" + name + "' (focusing|defocusing)");
}

void SolitonParams::validate() const {
    if (!std::isfinite(sigma) || !std::isfinite(c0)) {
        throw ValidationError("soliton parameters must be finite");
    }
    if (!(c0 > 0.0)) throw ValidationError("c0 must be positive");
    if (branch == Branch::defocusing && !(c0 < 4.0 * sigma * sigma)) {
        throw ValidationError("defocusing branch requires c0 < 4 sigma^2");
    }
}

namespace {

// sqrt(4 sigma^2 + c0) focusing, sqrt(4 sigma^2 - c0) defocusing. In either
// branch the cosh coefficient exceeds 2|sigma| or is paired with sigma > 0,
// so the denominator 2 sigma + coef*cosh never vanishes.
double cosh_coefficient(const SolitonParams& p) {
    const double disc = 4.0 * p.sigma * p.sigma +
                        (p.branch == Branch::focusing ? p.c0 : -p.c0);
    return std::sqrt(disc);
}

}  // namespace

double soliton_speed(const SolitonParams& p) {
    p.validate();
    const double thru = 6.0 * p.sigma * p.sigma;
    return p.branch == Branch::focusing ? thru + p.c0 : thru - p.c0;
}

double soliton_peak(const SolitonParams& p) {
    p.validate();
    return p.c0 / (2.0 * p.sigma + cosh_coefficient(p));
}

double soliton_value(const SolitonParams& p, double x) {
    const double kappa = std::sqrt(p.c0);
    const double denom = 2.0 * p.sigma + cosh_coefficient(p) * std::cosh(kappa * x);
    return p.c0 / denom;
}

double soliton_slope(const SolitonParams& p, double x) {
    const double kappa = std::sqrt(p.c0);
    const double a = cosh_coefficient(p);
    const double denom = 2.0 * p.sigma + a * std::cosh(kappa * x);
    return -p.c0 * a * kappa * std::sinh(kappa * x) / (denom * denom);
}

double soliton_curvature(const SolitonParams& p, double x) {
    // phi'' from the profile ODE: focusing phi'' = c0 phi - 6 sigma phi^2 - 2 phi^3,
    // defocusing phi'' = c0 phi - 6 sigma phi^2 + 2 phi^3.
    const double phi = soliton_value(p, x);
    const double cubic = (p.branch == Branch::focusing ? -2.0 : 2.0) * phi * phi * phi;
    return p.c0 * phi - 6.0 * p.sigma * phi * phi + cubic;
}

Field soliton_profile(const SolitonParams& p, const GridSpec& grid, double center) {
    p.validate();
    if (p.branch == Branch::focusing && p.sigma < 0.0) {
        // principal branch keeps the denominator positive: sqrt(4s^2+c0) > 2|s|
        if (!(cosh_coefficient(p) > -2.0 * p.sigma)) {
            throw ValidationError("focusing denominator not positive");
        }
    }
    return sample(grid, [&](double x) { return soliton_value(p, x - center); });
}

OdeResiduals ode_residuals(const SolitonParams& p, const GridSpec& grid) {
    p.validate();
    Field phi = soliton_profile(p, grid, 0.0);
    Field phi_x = spectral_derivative(phi, 1);
    Field phi_xx = spectral_derivative(phi, 2);

    const double cubic_sign = (p.branch == Branch::focusing) ? 1.0 : -1.0;
    double r2 = 0.0, r1 = 0.0;
    for (int j = 0; j < grid.size(); ++j) {
        const double f = phi.values[j];
        const double second = phi_xx.values[j] + cubic_sign * 2.0 * f * f * f +
                              6.0 * p.sigma * f * f - p.c0 * f;
        const double first = phi_x.values[j] * phi_x.values[j] + cubic_sign * f * f * f * f +
                             4.0 * p.sigma * f * f * f - p.c0 * f * f;
        r2 = std::max(r2, std::abs(second));
        r1 = std::max(r1, std::abs(first));
    }
    return {r2, r1};
}

LinearizedOperator::LinearizedOperator(const SolitonParams& p, const GridSpec& grid)
    : params_(p), potential_(grid) {
    p.validate();
    const double c_sigma = soliton_speed(p);
    for (int j = 0; j < grid.size(); ++j) {
        const double phi = soliton_value(p, grid.x(j));
        if (p.branch == Branch::focusing) {
            const double s = p.sigma + phi;
            potential_.values[j] = c_sigma - 6.0 * s * s;
        } else {
            const double s = p.sigma - phi;
            potential_.values[j] = 6.0 * s * s - c_sigma;
        }
    }
}

Field LinearizedOperator::apply(const Field& f) const {
    if (f.grid != potential_.grid) throw ValidationError("operator grid differs");
    Field out = spectral_derivative(f, 2);
    for (int j = 0; j < f.size(); ++j) {
        out.values[j] = -out.values[j] + potential_.values[j] * f.values[j];
    }
    return out;
}

std::vector<double> LinearizedOperator::eigenvalues() const {
    const int n = potential_.grid.size();
    Eigen::MatrixXd mat(n, n);
    Field unit(potential_.grid);
    for (int col = 0; col < n; ++col) {
        unit.values.assign(static_cast<size_t>(n), 0.0);
        unit.values[col] = 1.0;
        Field lcol = apply(unit);
        for (int row = 0; row < n; ++row) mat(row, col) = lcol.values[row];
    }
    // the grid-basis matrix is symmetric up to roundoff
    Eigen::MatrixXd sym = 0.5 * (mat + mat.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym, Eigen::EigenvaluesOnly);
    std::vector<double> out(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) out[i] = solver.eigenvalues()[i];
    return out;
}

}  // namespace gardner
