#pragma once

#include <memory>
#include <vector>

#include "kcgh/field.hpp"
#include "kcgh/optical.hpp"

namespace kcgh {

enum class PaddingMode { zero, edge };

struct PropagationOptions {
    PaddingMode padding = PaddingMode::zero;
    bool band_limited = true;
    bool ringing_correction = false;
    bool fft_shift = true;
};

// Free-space transfer function sampled on the padded grid, DC-centered
// layout (frequency (0,0) at bin (width/2, height/2)).
struct TransferFunction {
    int width = 0;
    int height = 0;
    double wavelength = 0.0;
    double z = 0.0;
    bool band_limited = false;
    std::vector<cplx> data;
};

// Evaluate the transfer function for distance z (meters, sign = direction).
// Evanescent bins are exactly zero; with band limiting, bins beyond the
// per-axis local-frequency bound 1/(lambda*sqrt((2*df*|z|)^2+1)) are zeroed.
TransferFunction make_transfer_function(double wavelength, double pixel_pitch,
                                        int padded_width, int padded_height, double z,
                                        bool band_limited);

// Cached variant. Entries are immutable and shared; the cache keeps the most
// recently used transfer functions (default capacity 96), keyed by shape,
// pitch, wavelength, z and the band-limit flag.
std::shared_ptr<const TransferFunction> get_transfer_function(double wavelength,
                                                              double pixel_pitch,
                                                              int padded_width,
                                                              int padded_height, double z,
                                                              bool band_limited);
void clear_transfer_cache();
size_t transfer_cache_lookups();
size_t transfer_cache_misses();
void set_transfer_cache_capacity(size_t capacity);

// Embed the field centered on a larger grid. zero fills with exact zeros,
// edge replicates the nearest border sample.
ComplexField pad_to(const ComplexField& field, int new_width, int new_height,
                    PaddingMode mode);

// The pipeline's standard 2x-per-axis padding.
ComplexField apply_padding(const ComplexField& field, PaddingMode mode);

// Take the centered width x height window back out.
ComplexField crop_padding(const ComplexField& padded, int width, int height);

// Forward DFT of an already padded field, natural bin order.
std::vector<cplx> forward_spectrum(const ComplexField& padded);

// Multiply a natural-order spectrum by the centered transfer function and
// inverse-transform. The two fft_shift settings multiply identical operand
// pairs (one physically reorders, one index-maps), so results are bitwise
// equal. Returns the padded-domain field.
ComplexField spectrum_to_plane(const std::vector<cplx>& spectrum, int padded_width,
                               int padded_height, const TransferFunction& tf,
                               bool fft_shift);

// Band-limited angular spectrum propagation over distance z (meters).
// Positive z moves from the hologram plane toward the scene. The field is
// padded 2x per axis, filtered, cropped back; output plane_z is
// field.plane_z + z. With ringing_correction the result is divided by the
// equally-propagated all-ones field (pixels where that reference has
// modulus below 1e-6 are left uncorrected).
ComplexField propagate(const ComplexField& field, double z, const OpticalConfig& config,
                       int channel, const PropagationOptions& options = {});

} // namespace kcgh
