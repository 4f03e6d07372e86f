#include "kcgh/quality.hpp"

#include <array>
#include <cmath>
#include <limits>

namespace kcgh {

ScalarField reconstruct_at(const ComplexField& hologram, double z,
                           const OpticalConfig& config, int channel,
                           const PropagationOptions& options) {
    if (hologram.plane_z != 0.0)
        throw StateError("reconstruct_at: hologram must sit at plane z = 0");
    return amplitude_of(propagate(hologram, z, config, channel, options));
}

std::vector<ScalarField> focal_stack(const ComplexField& hologram,
                                     const std::vector<double>& zs,
                                     const OpticalConfig& config, int channel,
                                     const PropagationOptions& options) {
    std::vector<ScalarField> out;
    out.reserve(zs.size());
    for (double z : zs) out.push_back(reconstruct_at(hologram, z, config, channel, options));
    return out;
}

ScalarField focal_image_projection(const ComplexField& hologram, const RgbdFrame& frame,
                                   int n_fip_layers, int channel,
                                   const PropagationOptions& options) {
    if (hologram.plane_z != 0.0)
        throw StateError("focal_image_projection: hologram must sit at plane z = 0");
    if (hologram.width != frame.config.width || hologram.height != frame.config.height)
        throw DimensionError("focal_image_projection: hologram shape mismatch");
    if (n_fip_layers < 1)
        throw DomainError("focal_image_projection: layer count must be >= 1");

    OpticalConfig fip_config = frame.config;
    fip_config.n_layers = n_fip_layers;
    const ScalarField depth = frame.depth_meters();
    const LayerGrid grid = build_layer_grid(depth, frame.validity, fip_config);

    ScalarField out(hologram.width, hologram.height);

    if (options.ringing_correction) {
        // the per-plane reference field makes spectrum reuse inapplicable
        for (int i = 0; i < grid.n_layers; ++i) {
            const ScalarField rec =
                reconstruct_at(hologram, grid.z_of(i), frame.config, channel, options);
            const BinaryMask mask = band_mask(depth, frame.validity, grid, i, 1);
            for (size_t p = 0; p < out.size(); ++p)
                if (mask.data[p]) out.data[p] += rec.data[p];
        }
        return out;
    }

    const int pw = 2 * hologram.width, ph = 2 * hologram.height;
    const ComplexField padded = pad_to(hologram, pw, ph, options.padding);
    const std::vector<cplx> spectrum = forward_spectrum(padded);
    const double lam = frame.config.wavelength(channel);

    for (int i = 0; i < grid.n_layers; ++i) {
        auto tf = get_transfer_function(lam, frame.config.pixel_pitch, pw, ph, grid.z_of(i),
                                        options.band_limited);
        const ComplexField plane =
            spectrum_to_plane(spectrum, pw, ph, *tf, options.fft_shift);
        const ComplexField rec = crop_padding(plane, hologram.width, hologram.height);
        const BinaryMask mask = band_mask(depth, frame.validity, grid, i, 1);
        for (size_t p = 0; p < out.size(); ++p)
            if (mask.data[p]) out.data[p] += std::abs(rec.data[p]);
    }
    return out;
}

double psnr(const ScalarField& a, const ScalarField& b, double peak) {
    require_same_shape(a, b, "psnr");
    if (!(peak > 0.0)) throw DomainError("psnr: peak must be positive");
    double se = 0.0;
    for (size_t p = 0; p < a.size(); ++p) {
        const double d = a.data[p] - b.data[p];
        se += d * d;
    }
    const double mse = se / static_cast<double>(a.size());
    if (mse == 0.0) return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(peak * peak / mse);
}

namespace {

constexpr int ssim_win = 11;
constexpr int ssim_rad = 5;

std::array<double, ssim_win> ssim_kernel() {
    std::array<double, ssim_win> g{};
    const double sigma = 1.5;
    double sum = 0.0;
    for (int i = 0; i < ssim_win; ++i) {
        const double d = i - ssim_rad;
        g[i] = std::exp(-d * d / (2.0 * sigma * sigma));
        sum += g[i];
    }
    for (double& v : g) v /= sum;
    return g;
}

// Separable valid-region Gaussian filtering: (W-10) x (H-10) output.
ScalarField gauss_valid(const ScalarField& img) {
    static const std::array<double, ssim_win> g = ssim_kernel();
    const int w = img.width, h = img.height;
    const int ow = w - 2 * ssim_rad, oh = h - 2 * ssim_rad;
    ScalarField tmp(ow, h);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < ow; ++x) {
            double s = 0.0;
            for (int t = 0; t < ssim_win; ++t) s += g[t] * img.at(x + t, y);
            tmp.at(x, y) = s;
        }
    ScalarField out(ow, oh);
    for (int y = 0; y < oh; ++y)
        for (int x = 0; x < ow; ++x) {
            double s = 0.0;
            for (int t = 0; t < ssim_win; ++t) s += g[t] * tmp.at(x, y + t);
            out.at(x, y) = s;
        }
    return out;
}

} // namespace

double ssim(const ScalarField& a, const ScalarField& b) {
    require_same_shape(a, b, "ssim");
    if (a.width < ssim_win || a.height < ssim_win)
        throw DomainError("ssim: images must be at least 11x11");

    ScalarField aa(a.width, a.height), bb(a.width, a.height), ab(a.width, a.height);
    for (size_t p = 0; p < a.size(); ++p) {
        aa.data[p] = a.data[p] * a.data[p];
        bb.data[p] = b.data[p] * b.data[p];
        ab.data[p] = a.data[p] * b.data[p];
    }
    const ScalarField mu1 = gauss_valid(a), mu2 = gauss_valid(b);
    const ScalarField e_aa = gauss_valid(aa), e_bb = gauss_valid(bb), e_ab = gauss_valid(ab);

    const double c1 = 0.01 * 0.01, c2 = 0.03 * 0.03; // (K * L)^2 with L = 1
    double acc = 0.0;
    for (size_t p = 0; p < mu1.size(); ++p) {
        const double m1 = mu1.data[p], m2 = mu2.data[p];
        const double v1 = e_aa.data[p] - m1 * m1;
        const double v2 = e_bb.data[p] - m2 * m2;
        const double cov = e_ab.data[p] - m1 * m2;
        acc += ((2.0 * m1 * m2 + c1) * (2.0 * cov + c2)) /
               ((m1 * m1 + m2 * m2 + c1) * (v1 + v2 + c2));
    }
    return acc / static_cast<double>(mu1.size());
}

MetricsRecord evaluate_sample(const HologramSample& sample, const RgbdFrame& frame,
                              int fip_layers, const PropagationOptions& options) {
    sample.validate();
    frame.validate();
    if (sample.channels.size() != frame.intensity.size())
        throw StateError("evaluate_sample: sample/frame channel count mismatch");
    if (fip_layers == 0) fip_layers = sample.n_layers > 0 ? sample.n_layers : frame.config.n_layers;

    MetricsRecord rec;
    rec.method = sample.method;
    rec.fip_layers = fip_layers;
    const int nc = static_cast<int>(sample.channels.size());
    for (int c = 0; c < nc; ++c) {
        const ScalarField fip = focal_image_projection(sample.channels[static_cast<size_t>(c)],
                                                       frame, fip_layers, c, options);
        rec.psnr_channel.push_back(psnr(fip, frame.intensity[static_cast<size_t>(c)], 1.0));
        rec.ssim_channel.push_back(ssim(fip, frame.intensity[static_cast<size_t>(c)]));
    }
    for (double v : rec.psnr_channel) rec.psnr_mean += v / nc;
    for (double v : rec.ssim_channel) rec.ssim_mean += v / nc;
    return rec;
}

} // namespace kcgh
