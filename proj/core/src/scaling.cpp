#include "gardner/scaling.hpp"

#include <cmath>

#include "gardner/errors.hpp"

namespace gardner {

void ScalingParams::validate() const {
    if (!(lambda > 0.0) || !std::isfinite(lambda)) throw ValidationError("lambda must be > 0");
    if (!(alpha > 2.0) || !std::isfinite(alpha)) throw ValidationError("alpha must be > 2");
}

Field scale_down(const Field& v0, const ScalingParams& p) {
    p.validate();
    GridSpec stretched(v0.grid.size(), v0.grid.half_length() * p.lambda);
    const double amp = std::pow(p.lambda, -p.alpha);
    std::vector<double> w(v0.values.size());
    for (size_t j = 0; j < w.size(); ++j) w[j] = amp * v0.values[j];
    return Field(stretched, std::move(w));
}

Field scale_up(const Field& w, const ScalingParams& p) {
    p.validate();
    GridSpec shrunk(w.grid.size(), w.grid.half_length() / p.lambda);
    const double amp = std::pow(p.lambda, p.alpha);
    std::vector<double> v(w.values.size());
    for (size_t j = 0; j < v.size(); ++j) v[j] = amp * w.values[j];
    return Field(shrunk, std::move(v));
}

}  // namespace gardner
