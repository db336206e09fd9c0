#include "gardner/field.hpp"

#include <cmath>

#include "fft_internal.hpp"
#include "gardner/errors.hpp"

namespace gardner {

Field::Field(GridSpec g, std::vector<double> v) : grid(g), values(std::move(v)) {
    if (static_cast<int>(values.size()) != grid.size()) {
        throw ValidationError("field sample count does not match grid");
    }
}

Field::Field(GridSpec g) : grid(g), values(static_cast<size_t>(g.size()), 0.0) {}

bool Field::all_finite() const {
    for (double v : values) {
        if (!std::isfinite(v)) return false;
    }
    return true;
}

SpectralField::SpectralField(GridSpec g, std::vector<std::complex<double>> c)
    : grid(g), coeffs(std::move(c)) {
    if (static_cast<int>(coeffs.size()) != grid.size()) {
        throw ValidationError("coefficient count does not match grid");
    }
}

SpectralField::SpectralField(GridSpec g)
    : grid(g), coeffs(static_cast<size_t>(g.size()), {0.0, 0.0}) {}

SpectralField forward(const Field& f) {
    const int n = f.grid.size();
    std::vector<std::complex<double>> buf(n);
    for (int j = 0; j < n; ++j) buf[j] = f.values[j];
    fft::forward(buf);
    // normalize so that f(x_j) = sum_k c_k exp(i xi_k x_j)
    const double inv = 1.0 / n;
    for (auto& c : buf) c *= inv;
    return SpectralField(f.grid, std::move(buf));
}

Field inverse(const SpectralField& f) {
    const int n = f.grid.size();
    std::vector<std::complex<double>> buf = f.coeffs;
    for (auto& c : buf) c *= static_cast<double>(n);
    fft::backward(buf);
    std::vector<double> out(n);
    for (int j = 0; j < n; ++j) out[j] = buf[j].real();
    return Field(f.grid, std::move(out));
}

Field spectral_derivative(const Field& f, int order) {
    if (order < 1) throw ValidationError("derivative order must be >= 1");
    if (!f.all_finite()) throw ValidationError("spectral_derivative: non-finite input");

    SpectralField fh = forward(f);
    const int n = f.grid.size();
    for (int j = 0; j < n; ++j) {
        const std::complex<double> ik(0.0, f.grid.wavenumber(j));
        fh.coeffs[j] *= std::pow(ik, order);
    }
    if (order % 2 == 1) fh.coeffs[n / 2] = 0.0;  // Nyquist sign is ambiguous
    return inverse(fh);
}

Field sample(const GridSpec& grid, const std::function<double(double)>& fn) {
    std::vector<double> v(static_cast<size_t>(grid.size()));
    for (int j = 0; j < grid.size(); ++j) v[j] = fn(grid.x(j));
    return Field(grid, std::move(v));
}

Field operator+(const Field& a, const Field& b) {
    if (a.grid != b.grid) throw ValidationError("field grids differ");
    Field out = a;
    for (int j = 0; j < a.size(); ++j) out.values[j] += b.values[j];
    return out;
}

Field operator-(const Field& a, const Field& b) {
    if (a.grid != b.grid) throw ValidationError("field grids differ");
    Field out = a;
    for (int j = 0; j < a.size(); ++j) out.values[j] -= b.values[j];
    return out;
}

Field operator*(double a, const Field& f) {
    Field out = f;
    for (double& v : out.values) v *= a;
    return out;
}

Field& operator+=(Field& a, const Field& b) {
    if (a.grid != b.grid) throw ValidationError("field grids differ");
    for (int j = 0; j < a.size(); ++j) a.values[j] += b.values[j];
    return a;
}

}  // namespace gardner
