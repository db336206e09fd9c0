#include "gardner/spacetime.hpp"

#include <cmath>

#include "gardner/errors.hpp"

namespace gardner {

SpaceTimeField::SpaceTimeField(GridSpec g, int nt_, double t_half_)
    : grid(g), nt(nt_), t_half(t_half_),
      values(static_cast<size_t>(nt_) * g.size(), 0.0) {
    if (nt < 2 || (nt & (nt - 1)) != 0) {
        throw ValidationError("time-sample count must be a power of two >= 2");
    }
    if (!(t_half > 0.0)) throw ValidationError("temporal half-width must be positive");
}

double SpaceTimeField::tau(int m) const {
    const int k = (m < nt / 2) ? m : m - nt;
    return M_PI * k / t_half;
}

Field SpaceTimeField::slice(int it) const {
    std::vector<double> v(values.begin() + static_cast<size_t>(it) * grid.size(),
                          values.begin() + static_cast<size_t>(it + 1) * grid.size());
    return Field(grid, std::move(v));
}

void SpaceTimeField::set_slice(int it, const Field& f) {
    if (f.grid != grid) throw ValidationError("slice grid differs");
    std::copy(f.values.begin(), f.values.end(),
              values.begin() + static_cast<size_t>(it) * grid.size());
}

bool SpaceTimeField::all_finite() const {
    for (double v : values) {
        if (!std::isfinite(v)) return false;
    }
    return true;
}

SpaceTimeField space_derivative(const SpaceTimeField& f) {
    SpaceTimeField out(f.grid, f.nt, f.t_half);
    for (int it = 0; it < f.nt; ++it) {
        out.set_slice(it, spectral_derivative(f.slice(it), 1));
    }
    return out;
}

SpaceTimeField pointwise_product(const SpaceTimeField& a, const SpaceTimeField& b) {
    if (a.grid != b.grid || a.nt != b.nt || a.t_half != b.t_half) {
        throw ValidationError("space-time grids differ");
    }
    SpaceTimeField out(a.grid, a.nt, a.t_half);
    for (size_t i = 0; i < a.values.size(); ++i) out.values[i] = a.values[i] * b.values[i];
    return out;
}

}  // namespace gardner
