#pragma once

#include "kcgh/sample.hpp"

namespace kcgh {

// Deterministic 64-bit generator (splitmix64). Not std::mt19937 +
// distributions: the distributions' output is implementation-defined, and
// synthesized scenes must be identical across standard libraries.
struct Rng {
    uint64_t state;

    explicit Rng(uint64_t seed) : state(seed) {}
    uint64_t next();

    // uniform in [0, 1)
    double uniform();
    // uniform in [lo, hi)
    double uniform(double lo, double hi);
    // uniform integer in [0, n)
    uint64_t below(uint64_t n);
};

// Independent stream k derived from a base seed; object parameters never
// depend on how many draws other objects consumed.
uint64_t substream(uint64_t seed, uint64_t k);

enum class ShapeKind { rectangle, ellipse, textured_patch };

enum class TextureMode { flat, gradient, stripes };

// One placed scene object, fully determined by the seed.
struct PlacedObject {
    ShapeKind shape = ShapeKind::rectangle;
    double cx = 0.0, cy = 0.0;      // center, pixels
    double half_w = 0.0, half_h = 0.0;
    double angle = 0.0;             // radians
    double z = 0.0;                 // meters from the hologram plane
    TextureMode texture = TextureMode::flat;
    double tex_a[3] = {0.0, 0.0, 0.0}; // per-channel base value
    double tex_b[3] = {0.0, 0.0, 0.0}; // per-channel second value
    double stripe_freq = 0.0;          // cycles across the shape (stripes)
};

struct SceneParams {
    int grid_rows = 3;
    int grid_cols = 3;
    int n_objects = 5;
    double scale_min = 0.20; // object size as a fraction of the grid width
    double scale_max = 0.30;
    double z_min = 0.0;      // placement depth range, meters; z_max == 0
    double z_max = 0.0;      // means "use config.depth_range"
    uint64_t seed = 1;

    void validate(const OpticalConfig& config) const;
};

// Draw object placements: one object per distinct grid cell (jittered), a
// depth uniform over (z_min, z_max], per-channel procedural texture.
std::vector<PlacedObject> place_objects(const SceneParams& params,
                                        const OpticalConfig& config);

// Z-buffer rasterization (nearest object wins). Uncovered pixels are
// invalid with zero intensity and depth 1.
RgbdFrame rasterize(const std::vector<PlacedObject>& objects,
                    const OpticalConfig& config);

// place_objects + rasterize.
RgbdFrame synthesize_scene(const SceneParams& params, const OpticalConfig& config);

} // namespace kcgh
