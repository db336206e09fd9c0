#include "gardner/cutoff.hpp"

#include <cmath>

namespace gardner {

namespace {
// h(x) = exp(-1/x) for x > 0, 0 otherwise; s = h(x)/(h(x)+h(1-x)) steps
// smoothly from 0 at x<=0 to 1 at x>=1.
double smooth_step(double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    const double a = std::exp(-1.0 / x);
    const double b = std::exp(-1.0 / (1.0 - x));
    return a / (a + b);
}
}  // namespace

double smooth_cutoff(double t) {
    const double a = std::abs(t);
    if (a <= 0.5) return 1.0;
    if (a >= 1.0) return 0.0;
    return smooth_step(2.0 * (1.0 - a));
}

double smooth_cutoff_scaled(double t, double delta) { return smooth_cutoff(t / delta); }

}  // namespace gardner
