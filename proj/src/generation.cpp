#include "kcgh/generation.hpp"

#include <cmath>
#include <numbers>

namespace kcgh {

namespace {

constexpr double pi = std::numbers::pi;

// Band-masked intensity times the layer phase, living at the layer's plane.
ComplexField stamp_layer(const RgbdFrame& frame, int channel, const LayerGrid& grid,
                         const BinaryMask& band, int layer) {
    const ScalarField& img = frame.intensity[static_cast<size_t>(channel)];
    const cplx ph = layer_phase(grid, layer, frame.config, channel);
    ComplexField out(img.width, img.height);
    out.plane_z = grid.z_of(layer);
    for (size_t p = 0; p < img.size(); ++p)
        if (band.data[p]) out.data[p] = img.data[p] * ph;
    return out;
}

// Shared far-to-near compositing loop; the two generators differ only in
// the band width of the stamp and in what occludes the incoming field.
ComplexField composite(const RgbdFrame& frame, int channel, int band_k, bool cumulative,
                       const PropagationOptions& options, const StepObserver& observer) {
    frame.config.wavelength(channel); // bounds check before any work
    const ScalarField depth = frame.depth_meters();
    const LayerGrid grid = build_layer_grid(depth, frame.validity, frame.config);
    const int n = grid.n_layers;

    ComplexField u = stamp_layer(frame, channel, grid,
                                 band_mask(depth, frame.validity, grid, 0, band_k), 0);
    if (observer) {
        const ComplexField zero(u.width, u.height);
        observer(GenerationStep{0, zero, zero, u});
    }

    for (int i = 1; i < n; ++i) {
        const ComplexField arrived =
            propagate(u, -grid.delta_z, frame.config, channel, options);
        const BinaryMask occluder =
            cumulative ? complement(one_sided_mask(depth, frame.validity, grid, i, 1))
                       : complement(band_mask(depth, frame.validity, grid, i, band_k));
        const ComplexField occluded = hadamard(arrived, occluder);
        const ComplexField stamp = stamp_layer(
            frame, channel, grid, band_mask(depth, frame.validity, grid, i, band_k), i);
        ComplexField updated = occluded;
        // stamp and occluded supports are disjoint, so addition is selection
        for (size_t p = 0; p < updated.size(); ++p) updated.data[p] += stamp.data[p];
        updated.plane_z = arrived.plane_z;
        if (observer) observer(GenerationStep{i, arrived, occluded, updated});
        u = std::move(updated);
    }

    if (u.plane_z == 0.0) return u; // nearest content already at the hologram plane
    ComplexField holo = propagate(u, -u.plane_z, frame.config, channel, options);
    holo.plane_z = 0.0;
    return holo;
}

} // namespace

cplx layer_phase(const LayerGrid& grid, int layer, const OpticalConfig& config,
                 int channel) {
    const double z = grid.z_of(layer);
    switch (config.layer_phase_mode) {
        case LayerPhaseMode::zero: return {1.0, 0.0};
        case LayerPhaseMode::literal_z: return std::polar(1.0, -z);
        case LayerPhaseMode::wavenumber_scaled:
            return std::polar(1.0, -2.0 * pi / config.wavelength(channel) * z);
    }
    return {1.0, 0.0};
}

ComplexField generate_smlbm(const RgbdFrame& frame, int channel,
                            const PropagationOptions& options,
                            const StepObserver& observer) {
    return composite(frame, channel, 1, true, options, observer);
}

ComplexField generate_advlbm(const RgbdFrame& frame, int channel,
                             const PropagationOptions& options,
                             const StepObserver& observer) {
    return composite(frame, channel, 2, false, options, observer);
}

ComplexField amplitude_projection_refine(const ComplexField& hologram,
                                         const RgbdFrame& frame, int channel,
                                         const PropagationOptions& options, int sweeps,
                                         const ProjectionObserver& observer) {
    if (hologram.width != frame.config.width || hologram.height != frame.config.height)
        throw DimensionError("amplitude_projection_refine: hologram shape mismatch");
    if (hologram.plane_z != 0.0)
        throw StateError("amplitude_projection_refine: hologram must sit at plane z = 0");
    if (sweeps < 1) throw DomainError("amplitude_projection_refine: sweeps must be >= 1");

    const ScalarField depth = frame.depth_meters();
    const LayerGrid grid = build_layer_grid(depth, frame.validity, frame.config);
    const ScalarField& img = frame.intensity[static_cast<size_t>(channel)];
    const int n = grid.n_layers;

    ComplexField h = hologram;
    for (int s = 0; s < sweeps; ++s) {
        ComplexField u = grid.z_of(0) == 0.0
                             ? h
                             : propagate(h, grid.z_of(0), frame.config, channel, options);
        for (int i = 0; i < n; ++i) {
            if (i > 0) u = propagate(u, -grid.delta_z, frame.config, channel, options);
            const BinaryMask mask = band_mask(depth, frame.validity, grid, i, 1);
            ComplexField projected = u;
            for (size_t p = 0; p < u.size(); ++p) {
                if (!mask.data[p]) continue;
                const cplx v = u.data[p];
                const double arg = (v.real() == 0.0 && v.imag() == 0.0)
                                       ? 0.0
                                       : std::atan2(v.imag(), v.real());
                projected.data[p] = std::polar(img.data[p], arg);
            }
            if (observer) observer(ProjectionStep{i, u, projected, mask});
            u = std::move(projected);
        }
        if (u.plane_z == 0.0) {
            h = std::move(u);
        } else {
            h = propagate(u, -u.plane_z, frame.config, channel, options);
            h.plane_z = 0.0;
        }
    }
    return h;
}

ComplexField generate_aplbm(const RgbdFrame& frame, int channel,
                            const PropagationOptions& options, int sweeps) {
    const ComplexField base = generate_advlbm(frame, channel, options);
    return amplitude_projection_refine(base, frame, channel, options, sweeps);
}

HologramSample generate_color(const RgbdFrame& frame, Method method,
                              const PropagationOptions& options, int sweeps) {
    frame.validate();
    const ScalarField depth = frame.depth_meters();
    const LayerGrid grid = build_layer_grid(depth, frame.validity, frame.config);

    HologramSample sample;
    sample.method = method;
    sample.config = frame.config;
    sample.n_layers = grid.n_layers;
    sample.channels.reserve(static_cast<size_t>(frame.config.channels()));
    for (int c = 0; c < frame.config.channels(); ++c) {
        switch (method) {
            case Method::sm: sample.channels.push_back(generate_smlbm(frame, c, options)); break;
            case Method::adv: sample.channels.push_back(generate_advlbm(frame, c, options)); break;
            case Method::ap: sample.channels.push_back(generate_aplbm(frame, c, options, sweeps)); break;
        }
    }
    return sample;
}

} // namespace kcgh
