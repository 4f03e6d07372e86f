#include "kcgh/sample.hpp"

#include <cmath>

namespace kcgh {

const char* method_name(Method m) {
    switch (m) {
        case Method::sm: return "sm";
        case Method::adv: return "adv";
        case Method::ap: return "ap";
    }
    return "?";
}

Method method_from_name(const std::string& name) {
    if (name == "sm") return Method::sm;
    if (name == "adv") return Method::adv;
    if (name == "ap") return Method::ap;
    throw ParamsError("unknown method '" + name + "' (expected sm, adv or ap)");
}

ScalarField RgbdFrame::depth_meters() const {
    ScalarField out(depth.width, depth.height);
    for (size_t p = 0; p < depth.size(); ++p)
        out.data[p] = depth.data[p] * config.depth_range;
    return out;
}

void RgbdFrame::validate() const {
    config.validate();
    if (static_cast<int>(intensity.size()) != config.channels())
        throw StateError("frame has " + std::to_string(intensity.size()) +
                         " intensity channels, config expects " +
                         std::to_string(config.channels()));
    if (!depth.same_shape(config.width, config.height))
        throw DimensionError("frame depth shape does not match the configuration");
    require_same_shape(depth, validity, "frame");
    for (const ScalarField& ch : intensity) {
        require_same_shape(ch, depth, "frame");
        for (double v : ch.data)
            if (!std::isfinite(v) || v < 0.0 || v > 1.0)
                throw ValidationError("frame intensity outside [0, 1]");
    }
    for (size_t p = 0; p < depth.size(); ++p) {
        const double d = depth.data[p];
        if (!std::isfinite(d) || d < 0.0 || d > 1.0)
            throw ValidationError("frame depth outside [0, 1]");
    }
}

void HologramSample::validate() const {
    config.validate();
    if (static_cast<int>(channels.size()) != config.channels())
        throw StateError("hologram has " + std::to_string(channels.size()) +
                         " channels, config expects " + std::to_string(config.channels()));
    for (const ComplexField& ch : channels) {
        if (ch.width != config.width || ch.height != config.height)
            throw DimensionError("hologram channel shape does not match the configuration");
        if (ch.plane_z != 0.0)
            throw StateError("hologram channel not at plane z = 0");
        for (const cplx& v : ch.data)
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
                throw ValidationError("hologram contains non-finite samples");
    }
}

} // namespace kcgh
