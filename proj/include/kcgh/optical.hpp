#pragma once

#include <vector>

#include "kcgh/errors.hpp"

namespace kcgh {

// Initial phase stamped onto each layer before occlusion compositing.
//   zero              exp(0), all layers in phase
//   literal_z         exp(-i * z_i), z_i in meters
//   wavenumber_scaled exp(-i * k * z_i) with k = 2*pi/lambda
enum class LayerPhaseMode { zero, literal_z, wavenumber_scaled };

// Physical and discretization parameters shared by the whole pipeline.
// All lengths are meters.
struct OpticalConfig {
    int width = 512;
    int height = 512;
    double pixel_pitch = 3.6e-6;
    std::vector<double> wavelengths{638e-9, 532e-9, 450e-9};
    double depth_range = 20.3336e-3;
    int n_layers = 32;
    LayerPhaseMode layer_phase_mode = LayerPhaseMode::wavenumber_scaled;
    bool allow_depth_beyond_zmax = false;

    int channels() const { return static_cast<int>(wavelengths.size()); }
    double wavelength(int channel) const;

    // Defaults for a given resolution: the depth range scales linearly with
    // the larger grid dimension (20.3336 mm at 512).
    static OpticalConfig defaults_for(int width, int height);

    // Throws ConfigError when any parameter is non-physical or the depth
    // range exceeds the aliasing-free bound of the shortest-z_max channel.
    void validate() const;
};

// Largest aliasing-free propagation distance for one channel:
//   z_max = N * dx * sqrt(4 * (dx/lambda)^2 - 1),  N = max(width, height).
// Throws ConfigError when the pitch does not satisfy dx > lambda/2.
double compute_z_max(const OpticalConfig& config, int channel);

} // namespace kcgh
