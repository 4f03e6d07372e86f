#include "kcgh/optical.hpp"

#include <algorithm>
#include <cmath>

namespace kcgh {

double OpticalConfig::wavelength(int channel) const {
    if (channel < 0 || channel >= channels())
        throw std::out_of_range("channel " + std::to_string(channel) + " out of range (" +
                                std::to_string(channels()) + " channels)");
    return wavelengths[static_cast<size_t>(channel)];
}

OpticalConfig OpticalConfig::defaults_for(int width, int height) {
    OpticalConfig c;
    c.width = width;
    c.height = height;
    const int n = std::max(width, height);
    switch (n) {
        case 256: c.depth_range = 10.1668e-3; break;
        case 512: c.depth_range = 20.3336e-3; break;
        case 1024: c.depth_range = 40.6672e-3; break;
        case 2048: c.depth_range = 81.3344e-3; break;
        default: c.depth_range = 20.3336e-3 * n / 512.0; break;
    }
    return c;
}

void OpticalConfig::validate() const {
    if (width < 1 || height < 1)
        throw ConfigError("resolution must be positive, got " + std::to_string(width) + "x" +
                          std::to_string(height));
    if (!(pixel_pitch > 0.0) || !std::isfinite(pixel_pitch))
        throw ConfigError("pixel pitch must be positive and finite");
    if (wavelengths.empty())
        throw ConfigError("at least one wavelength is required");
    for (double lam : wavelengths)
        if (!(lam > 0.0) || !std::isfinite(lam))
            throw ConfigError("wavelengths must be positive and finite");
    if (!(depth_range > 0.0) || !std::isfinite(depth_range))
        throw ConfigError("depth range must be positive and finite");
    if (n_layers < 1)
        throw ConfigError("layer count must be >= 1, got " + std::to_string(n_layers));

    if (!allow_depth_beyond_zmax) {
        for (int c = 0; c < channels(); ++c) {
            const double zm = compute_z_max(*this, c);
            if (depth_range > zm)
                throw ConfigError("depth range " + std::to_string(depth_range * 1e3) +
                                  " mm exceeds z_max " + std::to_string(zm * 1e3) +
                                  " mm for channel " + std::to_string(c) +
                                  " (set allow_depth_beyond_zmax to override)");
        }
    }
}

double compute_z_max(const OpticalConfig& config, int channel) {
    const double lam = config.wavelength(channel);
    const double dx = config.pixel_pitch;
    const double r = 4.0 * (dx / lam) * (dx / lam) - 1.0;
    if (r <= 0.0)
        throw ConfigError("pixel pitch must exceed lambda/2 for a real aliasing bound");
    const int n = std::max(config.width, config.height);
    return n * dx * std::sqrt(r);
}

} // namespace kcgh
