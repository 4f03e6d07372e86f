#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "kcgh/errors.hpp"

namespace kcgh {

using cplx = std::complex<double>;

// Row-major real-valued image. Index p = y * width + x.
struct ScalarField {
    int width = 0;
    int height = 0;
    std::vector<double> data;

    ScalarField() = default;
    ScalarField(int w, int h, double fill = 0.0)
        : width(w), height(h), data(static_cast<size_t>(w) * h, fill) {}

    size_t size() const { return data.size(); }
    double& at(int x, int y) { return data[static_cast<size_t>(y) * width + x]; }
    double at(int x, int y) const { return data[static_cast<size_t>(y) * width + x]; }
    bool same_shape(int w, int h) const { return width == w && height == h; }
};

// Row-major 0/1 mask.
struct BinaryMask {
    int width = 0;
    int height = 0;
    std::vector<uint8_t> data;

    BinaryMask() = default;
    BinaryMask(int w, int h, uint8_t fill = 0)
        : width(w), height(h), data(static_cast<size_t>(w) * h, fill) {}

    size_t size() const { return data.size(); }
    uint8_t& at(int x, int y) { return data[static_cast<size_t>(y) * width + x]; }
    uint8_t at(int x, int y) const { return data[static_cast<size_t>(y) * width + x]; }
    size_t count() const {
        size_t n = 0;
        for (uint8_t v : data) n += (v != 0);
        return n;
    }
};

// Row-major complex wavefield sampled on the pixel grid.
// plane_z is the field's distance from the hologram plane in meters, >= 0.
struct ComplexField {
    int width = 0;
    int height = 0;
    double plane_z = 0.0;
    std::vector<cplx> data;

    ComplexField() = default;
    ComplexField(int w, int h, cplx fill = {0.0, 0.0})
        : width(w), height(h), data(static_cast<size_t>(w) * h, fill) {}

    size_t size() const { return data.size(); }
    cplx& at(int x, int y) { return data[static_cast<size_t>(y) * width + x]; }
    cplx at(int x, int y) const { return data[static_cast<size_t>(y) * width + x]; }
};

// Pixelwise selection: field value where mask is set, exact zero elsewhere.
ComplexField hadamard(const ComplexField& field, const BinaryMask& mask);

// Flip every mask bit.
BinaryMask complement(const BinaryMask& mask);

// |v| per pixel.
ScalarField amplitude_of(const ComplexField& field);

// arg(v) per pixel in (-pi, pi]; arg(0) defined as 0.
ScalarField phase_of(const ComplexField& field);

// amp * exp(i * phase) per pixel; amplitudes must be >= 0.
ComplexField from_amplitude_phase(const ScalarField& amp, const ScalarField& phase);

// Wrap an angle into (-pi, pi].
double wrap_phase(double a);

// Shape guards shared across modules.
void require_same_shape(const ComplexField& a, const BinaryMask& b, const char* what);
void require_same_shape(const ScalarField& a, const ScalarField& b, const char* what);
void require_same_shape(const ScalarField& a, const BinaryMask& b, const char* what);
void require_same_shape(const ComplexField& a, const ComplexField& b, const char* what);

} // namespace kcgh
