#ifndef GARDNER_FIELD_HPP
#define GARDNER_FIELD_HPP

#include <complex>
#include <functional>
#include <vector>

#include "gardner/grid.hpp"

namespace gardner {

/// Real samples on a periodic grid.
struct Field {
    GridSpec grid;
    std::vector<double> values;

    Field(GridSpec g, std::vector<double> v);
    explicit Field(GridSpec g);  // zero field

    double& operator[](int j) { return values[j]; }
    double operator[](int j) const { return values[j]; }
    int size() const { return grid.size(); }

    bool all_finite() const;
};

/// Fourier coefficients c_k of a grid function, normalized so that
/// f(x_j) = sum_k c_k exp(i xi_k x_j). FFT index order matches GridSpec.
struct SpectralField {
    GridSpec grid;
    std::vector<std::complex<double>> coeffs;

    SpectralField(GridSpec g, std::vector<std::complex<double>> c);
    explicit SpectralField(GridSpec g);

    int size() const { return grid.size(); }
};

SpectralField forward(const Field& f);
Field inverse(const SpectralField& f);

/// Inverse transform of (i xi)^order * fhat. The Nyquist mode is zeroed for
/// odd orders (its wavenumber sign is ambiguous). Rejects non-finite input.
Field spectral_derivative(const Field& f, int order);

Field sample(const GridSpec& grid, const std::function<double(double)>& fn);

// pointwise arithmetic on matching grids
Field operator+(const Field& a, const Field& b);
Field operator-(const Field& a, const Field& b);
Field operator*(double a, const Field& f);
Field& operator+=(Field& a, const Field& b);

}  // namespace gardner

#endif
