#pragma once

#include "kcgh/field.hpp"
#include "kcgh/optical.hpp"

namespace kcgh {

// Phase-only encoding of one complex channel. phase holds wrapped angles in
// (-pi, pi]; normalization is the peak modulus divided out before encoding.
struct PhaseOnlyHologram {
    ScalarField phase;
    double normalization = 1.0;
};

// Double-phase encoding: each pixel's normalized amplitude A and phase phi
// become theta = phi +- arccos(A), interleaved on a 2x2 checkerboard
// (even x+y takes the + branch). A zero field encodes with normalization 1.
PhaseOnlyHologram dpac_encode(const ComplexField& field);

// Inverse of the checkerboard interleave: every non-overlapping 2x2 block
// is replaced by the mean of its unit phasors times the stored
// normalization. Dimensions must be even.
ComplexField dpac_decode(const PhaseOnlyHologram& encoded);

// Linear phase ramp tilting the carrier by angle_deg along one axis
// (0 = x, 1 = y): per-pixel step 2*pi*sin(angle)*pitch/lambda, wrapped.
// Angles beyond the grid's diffraction bound asin(lambda/(2*pitch)) throw.
ScalarField off_axis_ramp(const OpticalConfig& config, int channel, double angle_deg,
                          int axis = 0);

// Multiply the field by exp(i * ramp).
ComplexField apply_carrier(const ComplexField& field, const ScalarField& ramp);

} // namespace kcgh
