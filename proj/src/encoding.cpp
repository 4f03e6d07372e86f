#include "kcgh/encoding.hpp"

#include <cmath>
#include <numbers>

namespace kcgh {

namespace {
constexpr double pi = std::numbers::pi;
}

PhaseOnlyHologram dpac_encode(const ComplexField& field) {
    double peak = 0.0;
    for (const cplx& v : field.data) peak = std::max(peak, std::abs(v));

    PhaseOnlyHologram out;
    out.normalization = peak > 0.0 ? peak : 1.0;
    out.phase = ScalarField(field.width, field.height);

    for (int y = 0; y < field.height; ++y)
        for (int x = 0; x < field.width; ++x) {
            const cplx v = field.at(x, y);
            const double amp = std::abs(v) / out.normalization;
            const double phi = (v.real() == 0.0 && v.imag() == 0.0)
                                   ? 0.0
                                   : std::atan2(v.imag(), v.real());
            const double delta = std::acos(amp);
            const double theta = ((x + y) % 2 == 0) ? phi + delta : phi - delta;
            out.phase.at(x, y) = wrap_phase(theta);
        }
    return out;
}

ComplexField dpac_decode(const PhaseOnlyHologram& encoded) {
    const ScalarField& ph = encoded.phase;
    if (ph.width % 2 != 0 || ph.height % 2 != 0)
        throw DimensionError("dpac_decode: dimensions must be even");

    ComplexField out(ph.width, ph.height);
    for (int by = 0; by < ph.height; by += 2)
        for (int bx = 0; bx < ph.width; bx += 2) {
            cplx acc{0.0, 0.0};
            for (int dy = 0; dy < 2; ++dy)
                for (int dx = 0; dx < 2; ++dx)
                    acc += std::polar(1.0, ph.at(bx + dx, by + dy));
            const cplx v = acc * (0.25 * encoded.normalization);
            for (int dy = 0; dy < 2; ++dy)
                for (int dx = 0; dx < 2; ++dx) out.at(bx + dx, by + dy) = v;
        }
    return out;
}

ScalarField off_axis_ramp(const OpticalConfig& config, int channel, double angle_deg,
                          int axis) {
    const double lam = config.wavelength(channel);
    if (axis != 0 && axis != 1) throw DomainError("off_axis_ramp: axis must be 0 or 1");

    const double bound = std::asin(lam / (2.0 * config.pixel_pitch));
    const double angle = angle_deg * pi / 180.0;
    if (std::abs(angle) > bound)
        throw DomainError("off_axis_ramp: angle " + std::to_string(angle_deg) +
                          " deg exceeds the diffraction bound " +
                          std::to_string(bound * 180.0 / pi) + " deg");

    const double step = 2.0 * pi * std::sin(angle) * config.pixel_pitch / lam;
    ScalarField out(config.width, config.height);
    for (int y = 0; y < config.height; ++y)
        for (int x = 0; x < config.width; ++x)
            out.at(x, y) = wrap_phase(step * (axis == 0 ? x : y));
    return out;
}

ComplexField apply_carrier(const ComplexField& field, const ScalarField& ramp) {
    if (field.width != ramp.width || field.height != ramp.height)
        throw DimensionError("apply_carrier: field and ramp shapes differ");
    ComplexField out(field.width, field.height);
    out.plane_z = field.plane_z;
    for (size_t p = 0; p < field.size(); ++p)
        out.data[p] = field.data[p] * std::polar(1.0, ramp.data[p]);
    return out;
}

} // namespace kcgh
