#include "kcgh/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <tuple>
#include <vector>

// std::complex<double> is layout-compatible with fftw_complex (C99 _Complex),
// which FFTW documents explicitly; the casts below rely on that.

namespace kcgh::fft {

namespace {

std::mutex plan_mutex;
std::map<std::tuple<int, int, int>, fftw_plan> plan_cache;

// Plans are created once per (w, h, direction) with FFTW_ESTIMATE so the
// algorithm choice never depends on runtime timing, and FFTW_UNALIGNED so
// one plan serves every caller buffer. fftw_execute_dft on a shared plan
// with fresh arrays is thread-safe; planning is not, hence the lock.
fftw_plan get_plan(int width, int height, int sign, cplx* in, cplx* out) {
    const std::tuple<int, int, int> key{width, height, sign};
    std::lock_guard<std::mutex> lock(plan_mutex);
    auto it = plan_cache.find(key);
    if (it != plan_cache.end()) return it->second;
    fftw_plan plan = fftw_plan_dft_2d(height, width,
                                      reinterpret_cast<fftw_complex*>(in),
                                      reinterpret_cast<fftw_complex*>(out),
                                      sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
    plan_cache.emplace(key, plan);
    return plan;
}

void execute(int width, int height, const cplx* in, cplx* out, int sign) {
    cplx* in_mut = const_cast<cplx*>(in); // FFTW_ESTIMATE planning never writes
    fftw_plan plan = get_plan(width, height, sign, in_mut, out);
    fftw_execute_dft(plan, reinterpret_cast<fftw_complex*>(in_mut),
                     reinterpret_cast<fftw_complex*>(out));
}

} // namespace

void forward(int width, int height, const cplx* in, cplx* out) {
    if (in == out) {
        std::vector<cplx> tmp(in, in + static_cast<size_t>(width) * height);
        execute(width, height, tmp.data(), out, FFTW_FORWARD);
        return;
    }
    execute(width, height, in, out, FFTW_FORWARD);
}

void inverse(int width, int height, const cplx* in, cplx* out) {
    const size_t n = static_cast<size_t>(width) * height;
    if (in == out) {
        std::vector<cplx> tmp(in, in + n);
        execute(width, height, tmp.data(), out, FFTW_BACKWARD);
    } else {
        execute(width, height, in, out, FFTW_BACKWARD);
    }
    const double scale = 1.0 / static_cast<double>(n);
    for (size_t p = 0; p < n; ++p) out[p] *= scale;
}

void shift(int width, int height, cplx* data) {
    const int hw = width / 2, hh = height / 2;
    // even-width rows: swap halves in place
    for (int y = 0; y < height; ++y) {
        cplx* row = data + static_cast<size_t>(y) * width;
        for (int x = 0; x < hw; ++x) std::swap(row[x], row[x + hw]);
    }
    for (int y = 0; y < hh; ++y) {
        cplx* a = data + static_cast<size_t>(y) * width;
        cplx* b = data + static_cast<size_t>(y + hh) * width;
        for (int x = 0; x < width; ++x) std::swap(a[x], b[x]);
    }
}

} // namespace kcgh::fft
