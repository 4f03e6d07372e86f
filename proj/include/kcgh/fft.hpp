#pragma once

#include "kcgh/field.hpp"

namespace kcgh::fft {

// Out-of-place 2D transforms on row-major buffers of width*height samples.
// forward is unnormalized; inverse divides by width*height, so
// inverse(forward(x)) == x up to rounding. in and out may alias.
void forward(int width, int height, const cplx* in, cplx* out);
void inverse(int width, int height, const cplx* in, cplx* out);

// Quadrant swap moving DC to the center bin (w/2, h/2). Self-inverse for
// even dimensions; the propagation pipeline only shifts padded (even) grids.
void shift(int width, int height, cplx* data);

} // namespace kcgh::fft
