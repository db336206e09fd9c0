#ifndef GARDNER_NORMS_HPP
#define GARDNER_NORMS_HPP

#include "gardner/field.hpp"
#include "gardner/spacetime.hpp"

namespace gardner {

/// L2 norm by the grid-native quadrature: (dx * sum f^2)^(1/2).
double l2_norm(const Field& f);

/// Sobolev norm with the weight (1+|xi|)^(2s) applied to the Parseval sum;
/// s = 0 reproduces the L2 norm. Rejects non-finite input.
double sobolev_norm(const Field& f, double s);

/// Integral of f over the domain (exact for the trigonometric interpolant).
double integral(const Field& f);

double inner_product(const Field& a, const Field& b);  // integral of a*b

/// Space-time norm weighting the 2-D transform by
/// (1+|tau-xi^3|)^(2b) (1+|xi|)^(2s); s=b=0 gives the L2(x,t) norm.
double xsb_norm(const SpaceTimeField& f, double s, double b);

/// L2 norm over space-time.
double l2_norm(const SpaceTimeField& f);

}  // namespace gardner

#endif
