#ifndef GARDNER_SCALING_HPP
#define GARDNER_SCALING_HPP

#include "gardner/field.hpp"

namespace gardner {

/// Parameters of the substitution v(x,t) = lambda^alpha w(lambda x, lambda^3 t).
struct ScalingParams {
    double lambda = 1.0;
    double alpha = 3.0;

    void validate() const;  // lambda > 0, alpha > 2
};

/// w(y) = lambda^(-alpha) v(y/lambda) on the stretched grid [-lambda L, lambda L).
/// Grid points map to grid points, so this is exact.
Field scale_down(const Field& v0, const ScalingParams& p);

/// Inverse of scale_down: v(x) = lambda^alpha w(lambda x) on [-L/lambda, L/lambda).
Field scale_up(const Field& w, const ScalingParams& p);

}  // namespace gardner

#endif
