#pragma once

#include <functional>

#include "kcgh/layering.hpp"
#include "kcgh/propagation.hpp"
#include "kcgh/sample.hpp"

namespace kcgh {

// Initial phase factor stamped onto layer i's content, unit modulus.
cplx layer_phase(const LayerGrid& grid, int layer, const OpticalConfig& config,
                 int channel);

// View into one step of the far-to-near compositing recurrence. Layer 0 is
// the initial stamp (propagated/occluded are zero fields there); layer
// i >= 1 sees the field arriving from layer i-1, that field after occlusion
// masking, and the composite after stamping.
struct GenerationStep {
    int layer;
    const ComplexField& propagated;
    const ComplexField& occluded;
    const ComplexField& updated;
};
using StepObserver = std::function<void(const GenerationStep&)>;

// View into one amplitude-projection step: the field arriving at the layer,
// the band mask applied there, and the field after the in-band amplitude
// was replaced by the target image.
struct ProjectionStep {
    int layer;
    const ComplexField& propagated;
    const ComplexField& updated;
    const BinaryMask& mask;
};
using ProjectionObserver = std::function<void(const ProjectionStep&)>;

// Silhouette-method generator: single-layer bands, cumulative silhouette
// occlusion (everything at or behind the current layer blocks the incoming
// field). Returns the channel's hologram at plane z = 0.
ComplexField generate_smlbm(const RgbdFrame& frame, int channel,
                            const PropagationOptions& options = {},
                            const StepObserver& observer = {});

// Advanced generator: double-width bands, occlusion by the complement of
// the current band pair only. With a single-layer grid this degenerates to
// exactly the silhouette method.
ComplexField generate_advlbm(const RgbdFrame& frame, int channel,
                             const PropagationOptions& options = {},
                             const StepObserver& observer = {});

// One or more far-to-near amplitude-projection sweeps over an existing
// hologram: at each layer the in-band amplitude is replaced by the target
// intensity image while the phase is kept. The hologram must sit at plane
// z = 0; the result does too.
ComplexField amplitude_projection_refine(const ComplexField& hologram,
                                         const RgbdFrame& frame, int channel,
                                         const PropagationOptions& options = {},
                                         int sweeps = 1,
                                         const ProjectionObserver& observer = {});

// The full AP generator: advanced compositing followed by projection sweeps.
ComplexField generate_aplbm(const RgbdFrame& frame, int channel,
                            const PropagationOptions& options = {}, int sweeps = 1);

// All channels of one frame with the chosen method. Seed and id fields of
// the returned sample are left for the caller to fill.
HologramSample generate_color(const RgbdFrame& frame, Method method,
                              const PropagationOptions& options = {}, int sweeps = 1);

} // namespace kcgh
