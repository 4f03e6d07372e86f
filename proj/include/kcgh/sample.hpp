#pragma once

#include <string>
#include <vector>

#include "kcgh/field.hpp"
#include "kcgh/optical.hpp"

namespace kcgh {

enum class Method { sm, adv, ap };

const char* method_name(Method m);
Method method_from_name(const std::string& name); // throws ParamsError

// One synthetic capture: per-channel intensity in [0,1], a normalized depth
// map (0 = hologram plane side, 1 = far end of the depth range) and the
// validity mask marking pixels covered by scene content.
struct RgbdFrame {
    std::vector<ScalarField> intensity;
    ScalarField depth;
    BinaryMask validity;
    OpticalConfig config;

    // Depth in meters: depth * config.depth_range.
    ScalarField depth_meters() const;

    // Shape/channel/range consistency; throws on violation.
    void validate() const;
};

// A generated hologram: one complex field per wavelength channel, all at
// plane z = 0. Provenance (seed, id) travels with the sample in memory and
// in manifests; nothing time-dependent is ever attached.
struct HologramSample {
    std::vector<ComplexField> channels;
    Method method = Method::ap;
    OpticalConfig config;
    int n_layers = 0;
    uint64_t seed = 0;
    std::string id;

    void validate() const;
};

} // namespace kcgh
