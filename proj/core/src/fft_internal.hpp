#ifndef GARDNER_FFT_INTERNAL_HPP
#define GARDNER_FFT_INTERNAL_HPP

#include <complex>
#include <vector>

namespace gardner::fft {

// In-order complex transforms; forward applies exp(-i 2 pi j k / n) with no
// normalization, backward exp(+i 2 pi j k / n) with a 1/n factor, so the two
// compose to the identity. FFTW plans are cached per thread; plan creation is
// serialized (the FFTW planner is not thread-safe), execution is not.

void forward(std::vector<std::complex<double>>& data);
void backward(std::vector<std::complex<double>>& data);

/// 2-D transform on nt x n row-major data, same normalization contract.
void forward_2d(std::vector<std::complex<double>>& data, int nt, int n);

}  // namespace gardner::fft

#endif
