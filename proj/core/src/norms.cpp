#include "gardner/norms.hpp"

#include <cmath>
#include <complex>

#include "fft_internal.hpp"
#include "gardner/errors.hpp"

namespace gardner {

double l2_norm(const Field& f) {
    double s = 0.0;
    for (double v : f.values) s += v * v;
    return std::sqrt(s * f.grid.dx());
}

double sobolev_norm(const Field& f, double s) {
    if (!f.all_finite()) throw ValidationError("sobolev_norm: non-finite input");
    SpectralField fh = forward(f);
    const int n = f.grid.size();
    // Parseval: integral f^2 dx = 2L sum |c_k|^2; the weight multiplies each mode.
    double acc = 0.0;
    for (int j = 0; j < n; ++j) {
        const double w = std::pow(1.0 + std::abs(f.grid.wavenumber(j)), 2.0 * s);
        acc += w * std::norm(fh.coeffs[j]);
    }
    return std::sqrt(acc * 2.0 * f.grid.half_length());
}

double integral(const Field& f) {
    double s = 0.0;
    for (double v : f.values) s += v;
    return s * f.grid.dx();
}

double inner_product(const Field& a, const Field& b) {
    if (a.grid != b.grid) throw ValidationError("inner_product: field grids differ");
    double s = 0.0;
    for (int j = 0; j < a.size(); ++j) s += a.values[j] * b.values[j];
    return s * a.grid.dx();
}

double xsb_norm(const SpaceTimeField& f, double s, double b) {
    if (!f.all_finite()) throw ValidationError("xsb_norm: non-finite input");
    const int n = f.grid.size();
    const int nt = f.nt;
    std::vector<std::complex<double>> buf(static_cast<size_t>(n) * nt);
    for (size_t i = 0; i < buf.size(); ++i) buf[i] = f.values[i];
    fft::forward_2d(buf, nt, n);

    const double norm2d = 1.0 / (static_cast<double>(n) * nt);
    double acc = 0.0;
    for (int m = 0; m < nt; ++m) {
        const double tau = f.tau(m);
        for (int k = 0; k < n; ++k) {
            const double xi = f.grid.wavenumber(k);
            const double airy_dist = 1.0 + std::abs(tau - xi * xi * xi);
            const double w = std::pow(airy_dist, 2.0 * b) * std::pow(1.0 + std::abs(xi), 2.0 * s);
            acc += w * std::norm(buf[static_cast<size_t>(m) * n + k] * norm2d);
        }
    }
    // discrete Plancherel measure: (2L)(2 t_half) over the coefficient sum
    return std::sqrt(acc * 4.0 * f.grid.half_length() * f.t_half);
}

double l2_norm(const SpaceTimeField& f) {
    double s = 0.0;
    for (double v : f.values) s += v * v;
    return std::sqrt(s * f.grid.dx() * f.dt());
}

}  // namespace gardner
