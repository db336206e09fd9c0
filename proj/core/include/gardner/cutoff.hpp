#ifndef GARDNER_CUTOFF_HPP
#define GARDNER_CUTOFF_HPP

namespace gardner {

/// Smooth even bump: identically 1 on [-1/2, 1/2], supported in (-1, 1),
/// C^infinity, built from the standard exp(-1/x) partition. Results that use
/// it should be insensitive to the precise shape.
double smooth_cutoff(double t);

/// smooth_cutoff(t / delta): identically 1 on [-delta/2, delta/2],
/// supported in (-delta, delta).
double smooth_cutoff_scaled(double t, double delta);

}  // namespace gardner

#endif
