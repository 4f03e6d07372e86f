#pragma once

#include "kcgh/generation.hpp"

namespace kcgh {

// Amplitude image of the hologram propagated to plane z (meters, toward the
// scene). The hologram must sit at plane z = 0.
ScalarField reconstruct_at(const ComplexField& hologram, double z,
                           const OpticalConfig& config, int channel,
                           const PropagationOptions& options = {});

// reconstruct_at over a list of planes.
std::vector<ScalarField> focal_stack(const ComplexField& hologram,
                                     const std::vector<double>& zs,
                                     const OpticalConfig& config, int channel,
                                     const PropagationOptions& options = {});

// All-in-focus composite: sum over layers of the band-masked amplitude of
// the reconstruction at that layer's plane. The layer grid is rebuilt from
// the frame's depth map with n_fip_layers layers (decoupled from however
// many layers generated the hologram). The hologram's spectrum is
// transformed once and reused across planes; the result is bitwise equal to
// summing per-plane reconstruct_at calls.
ScalarField focal_image_projection(const ComplexField& hologram, const RgbdFrame& frame,
                                   int n_fip_layers, int channel,
                                   const PropagationOptions& options = {});

// 10*log10(peak^2 / MSE); +infinity when the images are identical.
double psnr(const ScalarField& a, const ScalarField& b, double peak = 1.0);

// Mean structural similarity: 11x11 Gaussian window (sigma 1.5), K1 = 0.01,
// K2 = 0.03, unit dynamic range, valid-region convolution. Images must be
// at least 11 pixels in each dimension.
double ssim(const ScalarField& a, const ScalarField& b);

struct MetricsRecord {
    Method method = Method::ap;
    int fip_layers = 0;
    std::vector<double> psnr_channel;
    std::vector<double> ssim_channel;
    double psnr_mean = 0.0;
    double ssim_mean = 0.0;
};

// FIP-based PSNR/SSIM of every channel against the frame's intensity
// images, plus arithmetic channel means. fip_layers == 0 means "use the
// sample's own layer count".
MetricsRecord evaluate_sample(const HologramSample& sample, const RgbdFrame& frame,
                              int fip_layers = 0, const PropagationOptions& options = {});

} // namespace kcgh
