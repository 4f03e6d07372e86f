#pragma once

// Shared test utilities: seeded random fields, a naive O(N^4) DFT-based
// propagation oracle that is independent of the FFT backend, and the
// compact-support band-limited patch used by round-trip checks.

#include <cmath>
#include <numbers>
#include <vector>

#include "kcgh/fft.hpp"
#include "kcgh/propagation.hpp"
#include "kcgh/scene_synth.hpp"

namespace testutil {

using kcgh::ComplexField;
using kcgh::cplx;

constexpr double pi = std::numbers::pi;

inline ComplexField random_field(int w, int h, uint64_t seed, double amp = 1.0) {
    kcgh::Rng rng(seed);
    ComplexField f(w, h);
    for (auto& v : f.data)
        v = cplx{rng.uniform(-amp, amp), rng.uniform(-amp, amp)};
    return f;
}

inline kcgh::ScalarField random_image(int w, int h, uint64_t seed, double lo = 0.0,
                                      double hi = 1.0) {
    kcgh::Rng rng(seed);
    kcgh::ScalarField f(w, h);
    for (auto& v : f.data) v = rng.uniform(lo, hi);
    return f;
}

inline double max_abs_diff(const ComplexField& a, const ComplexField& b) {
    double m = 0.0;
    for (size_t p = 0; p < a.size(); ++p) m = std::max(m, std::abs(a.data[p] - b.data[p]));
    return m;
}

// PSNR over complex fields, peak = max modulus of the reference.
inline double psnr_complex(const ComplexField& ref, const ComplexField& got) {
    double peak = 0.0, se = 0.0;
    for (size_t p = 0; p < ref.size(); ++p) {
        peak = std::max(peak, std::abs(ref.data[p]));
        const cplx d = ref.data[p] - got.data[p];
        se += std::norm(d);
    }
    const double mse = se / static_cast<double>(ref.size());
    if (mse == 0.0) return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(peak * peak / mse);
}

// Same, restricted to the centered region x region window.
inline double psnr_complex_center(const ComplexField& ref, const ComplexField& got,
                                  int region) {
    const int ox = (ref.width - region) / 2, oy = (ref.height - region) / 2;
    double peak = 0.0, se = 0.0;
    for (int y = 0; y < region; ++y)
        for (int x = 0; x < region; ++x) {
            const cplx r = ref.at(x + ox, y + oy);
            peak = std::max(peak, std::abs(r));
            se += std::norm(r - got.at(x + ox, y + oy));
        }
    const double mse = se / (static_cast<double>(region) * region);
    if (mse == 0.0) return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(peak * peak / mse);
}

// Slow direct DFT, natural bin order; sign = -1 forward, +1 inverse
// (inverse includes the 1/(w*h) factor).
inline std::vector<cplx> naive_dft(const std::vector<cplx>& in, int w, int h, int sign) {
    std::vector<cplx> out(in.size());
    for (int ky = 0; ky < h; ++ky)
        for (int kx = 0; kx < w; ++kx) {
            cplx acc{0.0, 0.0};
            for (int y = 0; y < h; ++y)
                for (int x = 0; x < w; ++x) {
                    const double ang = 2.0 * pi * (static_cast<double>(kx) * x / w +
                                                   static_cast<double>(ky) * y / h);
                    acc += in[static_cast<size_t>(y) * w + x] *
                           std::polar(1.0, sign * ang);
                }
            out[static_cast<size_t>(ky) * w + kx] = acc;
        }
    if (sign > 0)
        for (auto& v : out) v /= static_cast<double>(w) * h;
    return out;
}

// Independent end-to-end propagation oracle: centered padding, direct DFT,
// the spectral filter evaluated from its definition, direct inverse, crop.
inline ComplexField naive_propagate(const ComplexField& f, double z, double lam,
                                    double pitch, bool band_limited,
                                    kcgh::PaddingMode mode) {
    const int w = f.width, h = f.height, pw = 2 * w, ph = 2 * h;
    const int ox = (pw - w) / 2, oy = (ph - h) / 2;

    std::vector<cplx> padded(static_cast<size_t>(pw) * ph, cplx{0.0, 0.0});
    for (int y = 0; y < ph; ++y)
        for (int x = 0; x < pw; ++x) {
            if (mode == kcgh::PaddingMode::zero) {
                if (x >= ox && x < ox + w && y >= oy && y < oy + h)
                    padded[static_cast<size_t>(y) * pw + x] = f.at(x - ox, y - oy);
            } else {
                const int sx = std::clamp(x - ox, 0, w - 1);
                const int sy = std::clamp(y - oy, 0, h - 1);
                padded[static_cast<size_t>(y) * pw + x] = f.at(sx, sy);
            }
        }

    std::vector<cplx> spec = naive_dft(padded, pw, ph, -1);

    const double dfx = 1.0 / (pw * pitch), dfy = 1.0 / (ph * pitch);
    const double az = std::abs(z);
    const double flx = 1.0 / (lam * std::sqrt(4.0 * dfx * dfx * az * az + 1.0));
    const double fly = 1.0 / (lam * std::sqrt(4.0 * dfy * dfy * az * az + 1.0));
    for (int ky = 0; ky < ph; ++ky)
        for (int kx = 0; kx < pw; ++kx) {
            const int sx = kx < pw / 2 ? kx : kx - pw;
            const int sy = ky < ph / 2 ? ky : ky - ph;
            const double fx = sx * dfx, fy = sy * dfy;
            const double radicand = 1.0 / (lam * lam) - fx * fx - fy * fy;
            cplx val{0.0, 0.0};
            if (radicand >= 0.0 &&
                !(band_limited && (std::abs(fx) > flx || std::abs(fy) > fly)))
                val = std::polar(1.0, 2.0 * pi * z * std::sqrt(radicand));
            spec[static_cast<size_t>(ky) * pw + kx] *= val;
        }

    const std::vector<cplx> back = naive_dft(spec, pw, ph, +1);
    ComplexField out(w, h);
    out.plane_z = f.plane_z + z;
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            out.at(x, y) = back[static_cast<size_t>(y + oy) * pw + (x + ox)];
    return out;
}

// Random complex patch, spectrum-limited to frac * Nyquist per axis, Hann
// tapered, centered on a grid x grid field. Compact support plus interior
// margin keeps round trips crop-lossless.
inline ComplexField bandlimited_patch(int patch, int grid, double frac, uint64_t seed) {
    ComplexField noise = random_field(patch, patch, seed);
    std::vector<cplx> spec(noise.size());
    kcgh::fft::forward(patch, patch, noise.data.data(), spec.data());
    const double keep = frac * (patch / 2);
    for (int ky = 0; ky < patch; ++ky)
        for (int kx = 0; kx < patch; ++kx) {
            const int sx = kx < patch / 2 ? kx : kx - patch;
            const int sy = ky < patch / 2 ? ky : ky - patch;
            if (std::abs(sx) > keep || std::abs(sy) > keep)
                spec[static_cast<size_t>(ky) * patch + kx] = 0.0;
        }
    kcgh::fft::inverse(patch, patch, spec.data(), noise.data.data());

    ComplexField out(grid, grid);
    const int off = (grid - patch) / 2;
    for (int y = 0; y < patch; ++y) {
        const double wy = 0.5 - 0.5 * std::cos(2.0 * pi * (y + 0.5) / patch);
        for (int x = 0; x < patch; ++x) {
            const double wx = 0.5 - 0.5 * std::cos(2.0 * pi * (x + 0.5) / patch);
            out.at(x + off, y + off) = noise.at(x, y) * (wx * wy);
        }
    }
    return out;
}

} // namespace testutil
