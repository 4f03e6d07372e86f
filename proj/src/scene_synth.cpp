#include "kcgh/scene_synth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace kcgh {

namespace {
constexpr double pi = std::numbers::pi;
constexpr uint64_t golden = 0x9E3779B97F4A7C15ULL;
constexpr uint64_t placement_tag = 0xF00DF00DF00DF00DULL;
} // namespace

uint64_t Rng::next() {
    state += golden;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double Rng::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

double Rng::uniform(double lo, double hi) { return lo + uniform() * (hi - lo); }

uint64_t Rng::below(uint64_t n) { return n > 0 ? next() % n : 0; }

uint64_t substream(uint64_t seed, uint64_t k) {
    Rng r(seed ^ (golden * (k + 1)));
    return r.next();
}

void SceneParams::validate(const OpticalConfig& config) const {
    if (grid_rows < 1 || grid_cols < 1)
        throw ParamsError("scene grid must be at least 1x1");
    if (n_objects < 1)
        throw ParamsError("scene needs at least one object");
    if (n_objects > grid_rows * grid_cols)
        throw ParamsError("object count " + std::to_string(n_objects) +
                          " exceeds grid capacity " + std::to_string(grid_rows * grid_cols));
    if (!(scale_min > 0.0) || scale_min > scale_max || scale_max > 1.0)
        throw ParamsError("object scale range must satisfy 0 < min <= max <= 1");
    const double hi = z_max == 0.0 ? config.depth_range : z_max;
    if (z_min < 0.0 || z_min > hi || hi > config.depth_range * (1.0 + 1e-12))
        throw ParamsError("placement depth range must satisfy 0 <= z_min <= z_max <= depth_range");
}

std::vector<PlacedObject> place_objects(const SceneParams& params,
                                        const OpticalConfig& config) {
    params.validate(config);
    const double z_hi = params.z_max == 0.0 ? config.depth_range : params.z_max;
    const double z_lo = params.z_min;

    // distinct cells, chosen by a dedicated stream so object streams stay put
    std::vector<int> cells(static_cast<size_t>(params.grid_rows) * params.grid_cols);
    for (size_t i = 0; i < cells.size(); ++i) cells[i] = static_cast<int>(i);
    Rng shuffle_rng(substream(params.seed, placement_tag));
    for (size_t i = cells.size() - 1; i > 0; --i)
        std::swap(cells[i], cells[shuffle_rng.below(i + 1)]);

    const double cell_w = static_cast<double>(config.width) / params.grid_cols;
    const double cell_h = static_cast<double>(config.height) / params.grid_rows;

    std::vector<PlacedObject> objects;
    objects.reserve(static_cast<size_t>(params.n_objects));
    for (int k = 0; k < params.n_objects; ++k) {
        Rng rng(substream(params.seed, static_cast<uint64_t>(k)));
        PlacedObject o;

        // fixed draw order; every branch consumes the same number of draws
        switch (rng.below(3)) {
            case 0: o.shape = ShapeKind::rectangle; break;
            case 1: o.shape = ShapeKind::ellipse; break;
            default: o.shape = ShapeKind::textured_patch; break;
        }
        const int cell = cells[static_cast<size_t>(k)];
        const int row = cell / params.grid_cols, col = cell % params.grid_cols;
        o.cx = (col + 0.5) * cell_w + rng.uniform(-0.25, 0.25) * cell_w;
        o.cy = (row + 0.5) * cell_h + rng.uniform(-0.25, 0.25) * cell_h;
        o.half_w = 0.5 * rng.uniform(params.scale_min, params.scale_max) * config.width;
        o.half_h = o.half_w * rng.uniform(0.6, 1.0);
        o.angle = rng.uniform(0.0, 2.0 * pi);
        o.z = z_hi - rng.uniform() * (z_hi - z_lo); // uniform over (z_lo, z_hi]
        o.texture = o.shape == ShapeKind::textured_patch
                        ? TextureMode::stripes
                        : (rng.below(2) == 0 ? TextureMode::flat : TextureMode::gradient);
        for (int c = 0; c < 3; ++c) {
            o.tex_a[c] = rng.uniform(0.2, 1.0);
            o.tex_b[c] = rng.uniform(0.2, 1.0);
        }
        o.stripe_freq = rng.uniform(2.0, 6.0);
        objects.push_back(o);
    }
    return objects;
}

RgbdFrame rasterize(const std::vector<PlacedObject>& objects,
                    const OpticalConfig& config) {
    config.validate();
    const int w = config.width, h = config.height, nc = config.channels();

    RgbdFrame frame;
    frame.config = config;
    frame.intensity.assign(static_cast<size_t>(nc), ScalarField(w, h, 0.0));
    frame.depth = ScalarField(w, h, 1.0);
    frame.validity = BinaryMask(w, h, 0);

    ScalarField zbuf(w, h, std::numeric_limits<double>::infinity());

    for (const PlacedObject& o : objects) {
        const double c = std::cos(o.angle), s = std::sin(o.angle);
        const double reach = std::abs(c) * o.half_w + std::abs(s) * o.half_h +
                             std::abs(s) * o.half_w + std::abs(c) * o.half_h;
        const int x0 = std::max(0, static_cast<int>(std::floor(o.cx - reach)));
        const int x1 = std::min(w - 1, static_cast<int>(std::ceil(o.cx + reach)));
        const int y0 = std::max(0, static_cast<int>(std::floor(o.cy - reach)));
        const int y1 = std::min(h - 1, static_cast<int>(std::ceil(o.cy + reach)));

        for (int y = y0; y <= y1; ++y)
            for (int x = x0; x <= x1; ++x) {
                const double dx = x - o.cx, dy = y - o.cy;
                const double u = c * dx + s * dy;
                const double v = -s * dx + c * dy;
                bool inside;
                if (o.shape == ShapeKind::ellipse) {
                    const double eu = u / o.half_w, ev = v / o.half_h;
                    inside = eu * eu + ev * ev <= 1.0;
                } else {
                    inside = std::abs(u) <= o.half_w && std::abs(v) <= o.half_h;
                }
                if (!inside || o.z >= zbuf.at(x, y)) continue;

                zbuf.at(x, y) = o.z;
                frame.validity.at(x, y) = 1;
                frame.depth.at(x, y) = o.z / config.depth_range;
                const double t = (u + o.half_w) / (2.0 * o.half_w);
                for (int ch = 0; ch < nc; ++ch) {
                    const int ti = std::min(ch, 2);
                    double val = o.tex_a[ti];
                    if (o.texture == TextureMode::gradient)
                        val = o.tex_a[ti] + (o.tex_b[ti] - o.tex_a[ti]) * t;
                    else if (o.texture == TextureMode::stripes)
                        val = o.tex_a[ti] + (o.tex_b[ti] - o.tex_a[ti]) *
                                                (0.5 + 0.5 * std::cos(2.0 * pi * o.stripe_freq * t));
                    frame.intensity[static_cast<size_t>(ch)].at(x, y) = val;
                }
            }
    }
    return frame;
}

RgbdFrame synthesize_scene(const SceneParams& params, const OpticalConfig& config) {
    return rasterize(place_objects(params, config), config);
}

} // namespace kcgh
