#include "kcgh/layering.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace kcgh {

double LayerGrid::z_of(int i) const {
    if (i < 0 || i >= n_layers)
        throw std::out_of_range("layer " + std::to_string(i) + " out of range (" +
                                std::to_string(n_layers) + " layers)");
    return max_depth - i * delta_z;
}

LayerGrid build_layer_grid(const ScalarField& depth, const BinaryMask& validity,
                           const OpticalConfig& config) {
    require_same_shape(depth, validity, "build_layer_grid");
    if (depth.width != config.width || depth.height != config.height)
        throw DimensionError("build_layer_grid: depth shape does not match the configuration");

    bool any = false;
    double max_depth = 0.0;
    for (size_t p = 0; p < depth.size(); ++p) {
        if (!validity.data[p]) continue;
        const double d = depth.data[p];
        if (!std::isfinite(d) || d < 0.0 || d > config.depth_range * (1.0 + 1e-12))
            throw ValidationError("build_layer_grid: depth outside [0, depth_range]");
        any = true;
        max_depth = std::max(max_depth, d);
    }
    if (!any) throw SceneError("build_layer_grid: no valid pixels");

    LayerGrid grid;
    if (max_depth == 0.0) {
        // flat scene at the hologram-side end: one layer at z = 0
        grid.n_layers = 1;
        grid.delta_z = config.depth_range / config.n_layers;
        grid.max_depth = 0.0;
        return grid;
    }
    grid.n_layers = config.n_layers;
    grid.delta_z = max_depth / config.n_layers;
    grid.max_depth = max_depth;
    return grid;
}

namespace {

void check_band_args(const LayerGrid& grid, int layer, int k) {
    if (layer < 0 || layer >= grid.n_layers)
        throw std::out_of_range("band layer " + std::to_string(layer) + " out of range (" +
                                std::to_string(grid.n_layers) + " layers)");
    if (k < 1) throw std::out_of_range("band width must be >= 1, got " + std::to_string(k));
}

} // namespace

// Membership tests share one upper/lower bound expression per call so that
// adjacent bands split exactly at the same floating-point threshold.
BinaryMask band_mask(const ScalarField& depth, const BinaryMask& validity,
                     const LayerGrid& grid, int layer, int k) {
    require_same_shape(depth, validity, "band_mask");
    check_band_args(grid, layer, k);

    const double upper = grid.max_depth - layer * grid.delta_z;
    const bool open_near = layer + k >= grid.n_layers; // widen to include depth 0
    const double lower = grid.max_depth - (layer + k) * grid.delta_z;

    BinaryMask out(depth.width, depth.height);
    for (size_t p = 0; p < depth.size(); ++p) {
        if (!validity.data[p]) continue;
        const double d = depth.data[p];
        const bool below_upper = d <= upper;
        const bool above_lower = open_near ? d >= 0.0 : d > lower;
        out.data[p] = (below_upper && above_lower) ? 1 : 0;
    }
    return out;
}

BinaryMask one_sided_mask(const ScalarField& depth, const BinaryMask& validity,
                          const LayerGrid& grid, int layer, int k) {
    require_same_shape(depth, validity, "one_sided_mask");
    check_band_args(grid, layer, k);

    const bool open_near = layer + k >= grid.n_layers;
    const double lower = grid.max_depth - (layer + k) * grid.delta_z;

    BinaryMask out(depth.width, depth.height);
    for (size_t p = 0; p < depth.size(); ++p) {
        if (!validity.data[p]) continue;
        const double d = depth.data[p];
        out.data[p] = (open_near ? d >= 0.0 : d > lower) ? 1 : 0;
    }
    return out;
}

} // namespace kcgh
