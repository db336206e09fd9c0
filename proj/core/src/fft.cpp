#include "fft_internal.hpp"

#include <fftw3.h>

#include <cstring>
#include <map>
#include <mutex>
#include <utility>

namespace gardner::fft {

namespace {

std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

struct Plan1d {
    fftw_plan plan;
    fftw_complex* buf;
    int n;
};

struct Plan2d {
    fftw_plan plan;
    fftw_complex* buf;
    int nt, n;
};

// Plans are cached per thread and intentionally leaked; the planner state is
// global, so creation is guarded by a single mutex.
Plan1d& plan_1d(int n, int sign) {
    using Key = std::pair<int, int>;
    static thread_local auto* cache = new std::map<Key, Plan1d>;
    auto it = cache->find({n, sign});
    if (it != cache->end()) return it->second;

    std::lock_guard<std::mutex> lock(planner_mutex());
    Plan1d p;
    p.n = n;
    p.buf = fftw_alloc_complex(static_cast<size_t>(n));
    p.plan = fftw_plan_dft_1d(n, p.buf, p.buf, sign, FFTW_ESTIMATE);
    return cache->emplace(Key{n, sign}, p).first->second;
}

Plan2d& plan_2d(int nt, int n, int sign) {
    using Key = std::pair<std::pair<int, int>, int>;
    static thread_local auto* cache = new std::map<Key, Plan2d>;
    Key key{{nt, n}, sign};
    auto it = cache->find(key);
    if (it != cache->end()) return it->second;

    std::lock_guard<std::mutex> lock(planner_mutex());
    Plan2d p;
    p.nt = nt;
    p.n = n;
    p.buf = fftw_alloc_complex(static_cast<size_t>(nt) * n);
    p.plan = fftw_plan_dft_2d(nt, n, p.buf, p.buf, sign, FFTW_ESTIMATE);
    return cache->emplace(key, p).first->second;
}

// std::complex<double> is layout-compatible with fftw_complex (double[2])
double* raw(std::vector<std::complex<double>>& v) { return reinterpret_cast<double*>(v.data()); }

}  // namespace

void forward(std::vector<std::complex<double>>& data) {
    const int n = static_cast<int>(data.size());
    Plan1d& p = plan_1d(n, FFTW_FORWARD);
    std::memcpy(p.buf, raw(data), sizeof(fftw_complex) * n);
    fftw_execute(p.plan);
    std::memcpy(raw(data), p.buf, sizeof(fftw_complex) * n);
}

void backward(std::vector<std::complex<double>>& data) {
    const int n = static_cast<int>(data.size());
    Plan1d& p = plan_1d(n, FFTW_BACKWARD);
    std::memcpy(p.buf, raw(data), sizeof(fftw_complex) * n);
    fftw_execute(p.plan);
    const double inv = 1.0 / n;
    for (int i = 0; i < n; ++i) {
        data[static_cast<size_t>(i)] = std::complex<double>(p.buf[i][0] * inv, p.buf[i][1] * inv);
    }
}

void forward_2d(std::vector<std::complex<double>>& data, int nt, int n) {
    Plan2d& p = plan_2d(nt, n, FFTW_FORWARD);
    std::memcpy(p.buf, raw(data), sizeof(fftw_complex) * data.size());
    fftw_execute(p.plan);
    std::memcpy(raw(data), p.buf, sizeof(fftw_complex) * data.size());
}

}  // namespace gardner::fft
