#include "kcgh/field.hpp"

#include <cmath>
#include <numbers>

namespace kcgh {

namespace {
constexpr double pi = std::numbers::pi;

[[noreturn]] void shape_error(const char* what, int aw, int ah, int bw, int bh) {
    throw DimensionError(std::string(what) + ": shape mismatch " + std::to_string(aw) + "x" +
                         std::to_string(ah) + " vs " + std::to_string(bw) + "x" +
                         std::to_string(bh));
}
} // namespace

void require_same_shape(const ComplexField& a, const BinaryMask& b, const char* what) {
    if (a.width != b.width || a.height != b.height)
        shape_error(what, a.width, a.height, b.width, b.height);
}

void require_same_shape(const ScalarField& a, const ScalarField& b, const char* what) {
    if (a.width != b.width || a.height != b.height)
        shape_error(what, a.width, a.height, b.width, b.height);
}

void require_same_shape(const ScalarField& a, const BinaryMask& b, const char* what) {
    if (a.width != b.width || a.height != b.height)
        shape_error(what, a.width, a.height, b.width, b.height);
}

void require_same_shape(const ComplexField& a, const ComplexField& b, const char* what) {
    if (a.width != b.width || a.height != b.height)
        shape_error(what, a.width, a.height, b.width, b.height);
}

ComplexField hadamard(const ComplexField& field, const BinaryMask& mask) {
    require_same_shape(field, mask, "hadamard");
    ComplexField out(field.width, field.height);
    out.plane_z = field.plane_z;
    for (size_t p = 0; p < field.size(); ++p)
        out.data[p] = mask.data[p] ? field.data[p] : cplx{0.0, 0.0};
    return out;
}

BinaryMask complement(const BinaryMask& mask) {
    BinaryMask out(mask.width, mask.height);
    for (size_t p = 0; p < mask.size(); ++p)
        out.data[p] = mask.data[p] ? 0 : 1;
    return out;
}

ScalarField amplitude_of(const ComplexField& field) {
    ScalarField out(field.width, field.height);
    for (size_t p = 0; p < field.size(); ++p)
        out.data[p] = std::abs(field.data[p]);
    return out;
}

ScalarField phase_of(const ComplexField& field) {
    ScalarField out(field.width, field.height);
    for (size_t p = 0; p < field.size(); ++p) {
        const cplx v = field.data[p];
        if (v.real() == 0.0 && v.imag() == 0.0) {
            out.data[p] = 0.0;
            continue;
        }
        double a = std::atan2(v.imag(), v.real());
        if (a <= -pi) a = pi; // atan2 hits -pi only through signed zeros
        out.data[p] = a;
    }
    return out;
}

ComplexField from_amplitude_phase(const ScalarField& amp, const ScalarField& phase) {
    require_same_shape(amp, phase, "from_amplitude_phase");
    ComplexField out(amp.width, amp.height);
    for (size_t p = 0; p < amp.size(); ++p) {
        if (amp.data[p] < 0.0)
            throw DomainError("from_amplitude_phase: negative amplitude");
        out.data[p] = std::polar(amp.data[p], phase.data[p]);
    }
    return out;
}

double wrap_phase(double a) {
    double w = std::remainder(a, 2.0 * pi);
    if (w <= -pi) w += 2.0 * pi;
    return w;
}

} // namespace kcgh
