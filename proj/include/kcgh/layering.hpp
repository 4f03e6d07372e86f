#pragma once

#include "kcgh/field.hpp"
#include "kcgh/optical.hpp"

namespace kcgh {

// Uniform depth discretization. Layer 0 is the farthest plane from the
// hologram; layer i sits at z_of(i) = max_depth - i * delta_z.
struct LayerGrid {
    int n_layers = 1;
    double delta_z = 0.0;
    double max_depth = 0.0;

    double z_of(int i) const;
};

// Grid over the depth map's valid pixels: delta_z = max_depth / n_layers
// with max_depth = max depth over valid pixels. An all-zero depth collapses
// to a single layer at z = 0. Depth is in meters, within
// [0, config.depth_range]. Throws SceneError when no pixel is valid.
LayerGrid build_layer_grid(const ScalarField& depth, const BinaryMask& validity,
                           const OpticalConfig& config);

// Band membership mask for layer i with width k (in layers):
//   max_depth - i*delta_z >= depth > max_depth - (i+k)*delta_z
// Layer 0's upper bound includes max_depth exactly; when i+k runs past the
// last layer the lower bound widens to include depth 0. Invalid pixels are
// never members. Bands of the same k partition the valid pixels.
BinaryMask band_mask(const ScalarField& depth, const BinaryMask& validity,
                     const LayerGrid& grid, int layer, int k);

// One-sided variant: keeps only the near-side bound
//   depth > max_depth - (i+k)*delta_z
// so the mask covers band i..i+k-1 plus everything farther, i.e. the union
// of band_mask(0..i+k-1, 1). Same widening rule at the near end.
BinaryMask one_sided_mask(const ScalarField& depth, const BinaryMask& validity,
                          const LayerGrid& grid, int layer, int k);

} // namespace kcgh
