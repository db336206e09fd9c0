#include "gardner/grid.hpp"

#include <cmath>

#include "gardner/errors.hpp"

namespace gardner {

namespace {
bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }
}  // namespace

GridSpec::GridSpec(int n, double half_length) : n_(n), half_length_(half_length) {
    if (n < 8 || !is_power_of_two(n)) {
        throw ValidationError("grid point count must be a power of two >= 8");
    }
    if (!(half_length > 0.0) || !std::isfinite(half_length)) {
        throw ValidationError("grid half-length must be positive and finite");
    }
    dx_ = 2.0 * half_length_ / n_;
    wavenumbers_.resize(n_);
    const double base = M_PI / half_length_;
    for (int j = 0; j < n_; ++j) {
        const int k = (j < n_ / 2) ? j : j - n_;
        wavenumbers_[j] = base * k;
    }
}

double GridSpec::default_half_length(double c0) {
    if (!(c0 > 0.0)) throw ValidationError("default_half_length requires c0 > 0");
    return 50.0 / std::sqrt(c0);
}

}  // namespace gardner
