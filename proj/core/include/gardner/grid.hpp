#ifndef GARDNER_GRID_HPP
#define GARDNER_GRID_HPP

#include <vector>

namespace gardner {

/// Uniform periodic grid on [-L, L) with n points (n a power of two, n >= 8).
/// Wavenumbers are xi_k = pi*k/L for k in {-n/2, ..., n/2-1}, stored in FFT
/// order: index j maps to k = j for j < n/2 and k = j - n otherwise.
class GridSpec {
public:
    GridSpec(int n, double half_length);

    int size() const { return n_; }
    double half_length() const { return half_length_; }
    double dx() const { return dx_; }

    /// Physical coordinate of sample j: x_j = -L + j*dx.
    double x(int j) const { return -half_length_ + dx_ * j; }

    /// Wavenumber of FFT-order index j (the Nyquist slot holds -n/2 * pi/L).
    double wavenumber(int j) const { return wavenumbers_[j]; }
    const std::vector<double>& wavenumbers() const { return wavenumbers_; }

    bool operator==(const GridSpec& o) const {
        return n_ == o.n_ && half_length_ == o.half_length_;
    }
    bool operator!=(const GridSpec& o) const { return !(*this == o); }

    /// Domain half-length putting the soliton tail exp(-sqrt(c0)*L) below 1e-14
    /// of the peak: L = 50/sqrt(c0).
    static double default_half_length(double c0);

private:
    int n_;
    double half_length_;
    double dx_;
    std::vector<double> wavenumbers_;
};

}  // namespace gardner

#endif
