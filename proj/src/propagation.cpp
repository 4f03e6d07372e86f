#include "kcgh/propagation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <list>
#include <map>
#include <mutex>
#include <numbers>
#include <set>

#include "kcgh/fft.hpp"

namespace kcgh {

namespace {

constexpr double pi = std::numbers::pi;

uint64_t bits_of(double v) {
    uint64_t b;
    std::memcpy(&b, &v, sizeof b);
    return b;
}

struct TfKey {
    int w, h;
    uint64_t pitch, lambda, z;
    bool bl;
    auto operator<=>(const TfKey&) const = default;
};

size_t tf_cache_capacity = 96;

std::mutex tf_mutex;
std::list<std::pair<TfKey, std::shared_ptr<const TransferFunction>>> tf_lru;
std::map<TfKey, decltype(tf_lru)::iterator> tf_index;
size_t tf_lookups = 0, tf_misses = 0;

std::mutex warn_mutex;
std::set<std::tuple<uint64_t, uint64_t, int>> warned;

void warn_beyond_zmax(double z, double zmax, double wavelength, int n) {
    std::lock_guard<std::mutex> lock(warn_mutex);
    if (!warned.emplace(bits_of(z), bits_of(wavelength), n).second) return;
    std::fprintf(stderr,
                 "kcgh: warning: |z| = %.4f mm exceeds z_max = %.4f mm for lambda = %.0f nm "
                 "(aliasing likely)\n",
                 std::abs(z) * 1e3, zmax * 1e3, wavelength * 1e9);
}

} // namespace

TransferFunction make_transfer_function(double wavelength, double pixel_pitch,
                                        int padded_width, int padded_height, double z,
                                        bool band_limited) {
    if (!(wavelength > 0.0) || !(pixel_pitch > 0.0))
        throw DomainError("transfer function needs positive wavelength and pitch");
    if (padded_width < 1 || padded_height < 1)
        throw DimensionError("transfer function needs a positive grid");

    TransferFunction tf;
    tf.width = padded_width;
    tf.height = padded_height;
    tf.wavelength = wavelength;
    tf.z = z;
    tf.band_limited = band_limited;
    tf.data.resize(static_cast<size_t>(padded_width) * padded_height);

    const double dfx = 1.0 / (padded_width * pixel_pitch);
    const double dfy = 1.0 / (padded_height * pixel_pitch);
    const double inv_l2 = 1.0 / (wavelength * wavelength);
    const double az = std::abs(z);
    const double flx = 1.0 / (wavelength * std::sqrt(4.0 * dfx * dfx * az * az + 1.0));
    const double fly = 1.0 / (wavelength * std::sqrt(4.0 * dfy * dfy * az * az + 1.0));

    for (int iy = 0; iy < padded_height; ++iy) {
        const double fy = (iy - padded_height / 2) * dfy;
        cplx* row = tf.data.data() + static_cast<size_t>(iy) * padded_width;
        for (int ix = 0; ix < padded_width; ++ix) {
            const double fx = (ix - padded_width / 2) * dfx;
            const double radicand = inv_l2 - fx * fx - fy * fy;
            if (radicand < 0.0 ||
                (band_limited && (std::abs(fx) > flx || std::abs(fy) > fly))) {
                row[ix] = {0.0, 0.0};
                continue;
            }
            row[ix] = std::polar(1.0, 2.0 * pi * z * std::sqrt(radicand));
        }
    }
    return tf;
}

std::shared_ptr<const TransferFunction> get_transfer_function(double wavelength,
                                                              double pixel_pitch,
                                                              int padded_width,
                                                              int padded_height, double z,
                                                              bool band_limited) {
    const TfKey key{padded_width, padded_height, bits_of(pixel_pitch), bits_of(wavelength),
                    bits_of(z), band_limited};
    {
        std::lock_guard<std::mutex> lock(tf_mutex);
        ++tf_lookups;
        auto it = tf_index.find(key);
        if (it != tf_index.end()) {
            tf_lru.splice(tf_lru.begin(), tf_lru, it->second);
            return tf_lru.front().second;
        }
        ++tf_misses;
    }
    auto tf = std::make_shared<const TransferFunction>(make_transfer_function(
        wavelength, pixel_pitch, padded_width, padded_height, z, band_limited));
    std::lock_guard<std::mutex> lock(tf_mutex);
    auto it = tf_index.find(key); // a racing thread may have filled it meanwhile
    if (it != tf_index.end()) {
        tf_lru.splice(tf_lru.begin(), tf_lru, it->second);
        return tf_lru.front().second;
    }
    tf_lru.emplace_front(key, tf);
    tf_index[key] = tf_lru.begin();
    if (tf_lru.size() > tf_cache_capacity) {
        tf_index.erase(tf_lru.back().first);
        tf_lru.pop_back();
    }
    return tf;
}

void clear_transfer_cache() {
    std::lock_guard<std::mutex> lock(tf_mutex);
    tf_lru.clear();
    tf_index.clear();
    tf_lookups = tf_misses = 0;
}

size_t transfer_cache_lookups() {
    std::lock_guard<std::mutex> lock(tf_mutex);
    return tf_lookups;
}

size_t transfer_cache_misses() {
    std::lock_guard<std::mutex> lock(tf_mutex);
    return tf_misses;
}

void set_transfer_cache_capacity(size_t capacity) {
    std::lock_guard<std::mutex> lock(tf_mutex);
    tf_cache_capacity = std::max<size_t>(1, capacity);
    while (tf_lru.size() > tf_cache_capacity) {
        tf_index.erase(tf_lru.back().first);
        tf_lru.pop_back();
    }
}

ComplexField pad_to(const ComplexField& field, int new_width, int new_height,
                    PaddingMode mode) {
    if (new_width < field.width || new_height < field.height)
        throw DimensionError("pad_to: target smaller than field");
    const int ox = (new_width - field.width) / 2;
    const int oy = (new_height - field.height) / 2;
    ComplexField out(new_width, new_height);
    out.plane_z = field.plane_z;
    if (mode == PaddingMode::zero) {
        for (int y = 0; y < field.height; ++y)
            std::copy_n(field.data.begin() + static_cast<size_t>(y) * field.width,
                        field.width,
                        out.data.begin() + static_cast<size_t>(y + oy) * new_width + ox);
        return out;
    }
    for (int y = 0; y < new_height; ++y) {
        const int sy = std::clamp(y - oy, 0, field.height - 1);
        for (int x = 0; x < new_width; ++x) {
            const int sx = std::clamp(x - ox, 0, field.width - 1);
            out.at(x, y) = field.at(sx, sy);
        }
    }
    return out;
}

ComplexField apply_padding(const ComplexField& field, PaddingMode mode) {
    return pad_to(field, 2 * field.width, 2 * field.height, mode);
}

ComplexField crop_padding(const ComplexField& padded, int width, int height) {
    if (width > padded.width || height > padded.height)
        throw DimensionError("crop_padding: window larger than field");
    const int ox = (padded.width - width) / 2;
    const int oy = (padded.height - height) / 2;
    ComplexField out(width, height);
    out.plane_z = padded.plane_z;
    for (int y = 0; y < height; ++y)
        std::copy_n(padded.data.begin() + static_cast<size_t>(y + oy) * padded.width + ox,
                    width, out.data.begin() + static_cast<size_t>(y) * width);
    return out;
}

std::vector<cplx> forward_spectrum(const ComplexField& padded) {
    std::vector<cplx> spectrum(padded.size());
    fft::forward(padded.width, padded.height, padded.data.data(), spectrum.data());
    return spectrum;
}

ComplexField spectrum_to_plane(const std::vector<cplx>& spectrum, int padded_width,
                               int padded_height, const TransferFunction& tf,
                               bool fft_shift) {
    if (tf.width != padded_width || tf.height != padded_height)
        throw DimensionError("spectrum_to_plane: transfer function shape mismatch");
    if (spectrum.size() != static_cast<size_t>(padded_width) * padded_height)
        throw DimensionError("spectrum_to_plane: spectrum size mismatch");

    ComplexField out(padded_width, padded_height);
    std::copy(spectrum.begin(), spectrum.end(), out.data.begin());

    if (fft_shift) {
        fft::shift(padded_width, padded_height, out.data.data());
        for (size_t p = 0; p < out.size(); ++p) out.data[p] *= tf.data[p];
        fft::shift(padded_width, padded_height, out.data.data());
    } else {
        const int hw = padded_width / 2, hh = padded_height / 2;
        for (int y = 0; y < padded_height; ++y) {
            const int cy = (y + hh) % padded_height;
            for (int x = 0; x < padded_width; ++x) {
                const int cx = (x + hw) % padded_width;
                out.data[static_cast<size_t>(y) * padded_width + x] *=
                    tf.data[static_cast<size_t>(cy) * padded_width + cx];
            }
        }
    }
    fft::inverse(padded_width, padded_height, out.data.data(), out.data.data());
    return out;
}

namespace {

ComplexField propagate_core(const ComplexField& field, double z, double wavelength,
                            double pixel_pitch, const PropagationOptions& options) {
    const int pw = 2 * field.width, ph = 2 * field.height;
    const ComplexField padded = pad_to(field, pw, ph, options.padding);
    auto tf = get_transfer_function(wavelength, pixel_pitch, pw, ph, z,
                                    options.band_limited);
    const std::vector<cplx> spectrum = forward_spectrum(padded);
    ComplexField plane = spectrum_to_plane(spectrum, pw, ph, *tf, options.fft_shift);
    return crop_padding(plane, field.width, field.height);
}

} // namespace

ComplexField propagate(const ComplexField& field, double z, const OpticalConfig& config,
                       int channel, const PropagationOptions& options) {
    if (field.width != config.width || field.height != config.height)
        throw DimensionError("propagate: field shape does not match the configuration");
    const double lam = config.wavelength(channel);

    const double zmax = compute_z_max(config, channel);
    if (std::abs(z) > zmax * (1.0 + 1e-12))
        warn_beyond_zmax(z, zmax, lam, std::max(config.width, config.height));

    ComplexField out = propagate_core(field, z, lam, config.pixel_pitch, options);

    if (options.ringing_correction) {
        ComplexField ones(field.width, field.height, cplx{1.0, 0.0});
        const ComplexField ref = propagate_core(ones, z, lam, config.pixel_pitch, options);
        for (size_t p = 0; p < out.size(); ++p) {
            const cplx d = ref.data[p];
            const double m2 = d.real() * d.real() + d.imag() * d.imag();
            if (m2 < 1e-12) continue;
            const cplx r = out.data[p];
            // r * conj(d) / |d|^2, expanded so that r == d yields exactly 1
            out.data[p] = {(r.real() * d.real() + r.imag() * d.imag()) / m2,
                           (r.imag() * d.real() - r.real() * d.imag()) / m2};
        }
    }

    out.plane_z = field.plane_z + z;
    return out;
}

} // namespace kcgh
