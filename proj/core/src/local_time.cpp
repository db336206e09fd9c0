#include "gardner/local_time.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gardner/errors.hpp"

namespace gardner {

LocalTimeEstimate local_time_estimate(double v0_norm, double s, double c0_const, double alpha) {
    if (!(alpha > 2.0)) throw ValidationError("local_time_estimate: alpha must be > 2");
    if (!(s > 0.25)) throw ValidationError("local_time_estimate: s must be > 1/4");
    if (!(c0_const > 0.0)) throw ValidationError("local_time_estimate: c0 must be > 0");
    if (!(v0_norm >= 0.0) || !std::isfinite(v0_norm)) {
        throw ValidationError("local_time_estimate: norm must be finite and >= 0");
    }

    LocalTimeEstimate out;
    out.d1 = std::pow(1.0 / (4.0 * c0_const), 1.0 / (alpha - 2.0));
    out.d2 = std::pow(1.0 / (4.0 * c0_const * c0_const), 1.0 / (2.0 * (alpha - 1.0)));

    const double nu = v0_norm;
    const auto t_large = [&] {  // nu >= 1 branch
        const double base = 1.0 / (4.0 * c0_const * c0_const * nu * nu);
        return base * base * base;
    };
    const auto t_small = [&] {  // nu <= 1 branch
        return std::pow(1.0 / (4.0 * c0_const * nu), 6.0 / (3.0 + 2.0 * s));
    };

    if (nu == 0.0) {
        out.T = std::numeric_limits<double>::infinity();
    } else if (nu > 1.0) {
        out.T = t_large();
    } else if (nu < 1.0) {
        out.T = t_small();
    } else {
        out.T = std::min(t_large(), t_small());
    }
    out.lambda0 = std::pow(out.T, -1.0 / 3.0);
    return out;
}

}  // namespace gardner
