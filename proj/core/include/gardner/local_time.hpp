#ifndef GARDNER_LOCAL_TIME_HPP
#define GARDNER_LOCAL_TIME_HPP

namespace gardner {

/// Guaranteed local-existence time implied by the contraction argument, as a
/// function of the H^s norm of the data. c0_const is the abstract estimate
/// constant (default 1; its true value is not claimed).
struct LocalTimeEstimate {
    double d1;       // (1/(4 c0))^(1/(alpha-2))
    double d2;       // (1/(4 c0^2))^(1/(2(alpha-1)))
    double lambda0;  // scaling parameter realizing T, lambda0 = T^(-1/3)
    double T;        // (1/(4 c0^2 nu^2))^3 for nu >= 1, (1/(4 c0 nu))^(6/(3+2s)) for nu <= 1
};

/// Requires alpha > 2, s > 1/4, c0_const > 0, v0_norm >= 0. At v0_norm = 1
/// both branches are evaluated and the minimum is returned. T -> infinity as
/// v0_norm -> 0 and is monotone non-increasing in v0_norm.
LocalTimeEstimate local_time_estimate(double v0_norm, double s, double c0_const, double alpha);

}  // namespace gardner

#endif
