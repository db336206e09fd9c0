#ifndef GARDNER_SPACETIME_HPP
#define GARDNER_SPACETIME_HPP

#include <vector>

#include "gardner/field.hpp"
#include "gardner/grid.hpp"

namespace gardner {

/// Real samples on a space-time grid: nt uniform samples on [-t_half, t_half)
/// by n spatial points, stored row-major in time (values[it*n + ix]).
struct SpaceTimeField {
    GridSpec grid;
    int nt;
    double t_half;
    std::vector<double> values;

    SpaceTimeField(GridSpec g, int nt, double t_half);

    double t(int it) const { return -t_half + dt() * it; }
    double dt() const { return 2.0 * t_half / nt; }

    double& at(int it, int ix) { return values[static_cast<size_t>(it) * grid.size() + ix]; }
    double at(int it, int ix) const { return values[static_cast<size_t>(it) * grid.size() + ix]; }

    /// Temporal frequency of FFT-order row index m: tau_m = pi*m/t_half.
    double tau(int m) const;

    Field slice(int it) const;
    void set_slice(int it, const Field& f);

    bool all_finite() const;
};

/// d/dx applied slice by slice (spectral, Nyquist zeroed).
SpaceTimeField space_derivative(const SpaceTimeField& f);

SpaceTimeField pointwise_product(const SpaceTimeField& a, const SpaceTimeField& b);

}  // namespace gardner

#endif
