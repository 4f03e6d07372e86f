// Python bindings: numpy views of the core types plus the main operations
// (scene synthesis, propagation, generation, evaluation, encoding, storage).

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "kcgh/encoding.hpp"
#include "kcgh/generation.hpp"
#include "kcgh/quality.hpp"
#include "kcgh/scene_synth.hpp"
#include "kcgh/storage.hpp"

namespace py = pybind11;
using namespace kcgh;

namespace {

using DoubleArray = py::array_t<double, py::array::c_style | py::array::forcecast>;
using ComplexArray =
    py::array_t<std::complex<double>, py::array::c_style | py::array::forcecast>;
using ByteArray = py::array_t<uint8_t, py::array::c_style | py::array::forcecast>;

py::array_t<double> to_numpy(const ScalarField& f) {
    py::array_t<double> a({f.height, f.width});
    std::copy(f.data.begin(), f.data.end(), a.mutable_data());
    return a;
}

py::array_t<std::complex<double>> to_numpy(const ComplexField& f) {
    py::array_t<std::complex<double>> a({f.height, f.width});
    std::copy(f.data.begin(), f.data.end(), a.mutable_data());
    return a;
}

py::array_t<uint8_t> to_numpy(const BinaryMask& m) {
    py::array_t<uint8_t> a({m.height, m.width});
    std::copy(m.data.begin(), m.data.end(), a.mutable_data());
    return a;
}

ScalarField scalar_from(const DoubleArray& a) {
    if (a.ndim() != 2) throw DimensionError("expected a 2-d array");
    ScalarField f(static_cast<int>(a.shape(1)), static_cast<int>(a.shape(0)));
    std::copy(a.data(), a.data() + a.size(), f.data.begin());
    return f;
}

ComplexField complex_from(const ComplexArray& a, double plane_z = 0.0) {
    if (a.ndim() != 2) throw DimensionError("expected a 2-d array");
    ComplexField f(static_cast<int>(a.shape(1)), static_cast<int>(a.shape(0)));
    std::copy(a.data(), a.data() + a.size(), f.data.begin());
    f.plane_z = plane_z;
    return f;
}

BinaryMask mask_from(const ByteArray& a) {
    if (a.ndim() != 2) throw DimensionError("expected a 2-d array");
    BinaryMask m(static_cast<int>(a.shape(1)), static_cast<int>(a.shape(0)));
    for (py::ssize_t i = 0; i < a.size(); ++i) m.data[static_cast<size_t>(i)] = a.data()[i] ? 1 : 0;
    return m;
}

PropagationOptions options_from(bool band_limited, const std::string& padding) {
    PropagationOptions o;
    o.band_limited = band_limited;
    if (padding == "zero") o.padding = PaddingMode::zero;
    else if (padding == "edge") o.padding = PaddingMode::edge;
    else throw ParamsError("unknown padding mode '" + padding + "' (zero|edge)");
    return o;
}

py::dict metrics_dict(const MetricsRecord& rec) {
    py::dict d;
    d["method"] = method_name(rec.method);
    d["fip_layers"] = rec.fip_layers;
    d["psnr_channel"] = rec.psnr_channel;
    d["ssim_channel"] = rec.ssim_channel;
    d["psnr_mean"] = rec.psnr_mean;
    d["ssim_mean"] = rec.ssim_mean;
    return d;
}

} // namespace

PYBIND11_MODULE(_kcgh, m) {
    m.doc() = "layer-based holography core";

    py::register_exception<Error>(m, "Error");

    py::class_<OpticalConfig>(m, "OpticalConfig")
        .def(py::init<>())
        .def_readwrite("width", &OpticalConfig::width)
        .def_readwrite("height", &OpticalConfig::height)
        .def_readwrite("pixel_pitch", &OpticalConfig::pixel_pitch)
        .def_readwrite("wavelengths", &OpticalConfig::wavelengths)
        .def_readwrite("depth_range", &OpticalConfig::depth_range)
        .def_readwrite("n_layers", &OpticalConfig::n_layers)
        .def_readwrite("allow_depth_beyond_zmax", &OpticalConfig::allow_depth_beyond_zmax)
        .def("channels", &OpticalConfig::channels)
        .def("wavelength", &OpticalConfig::wavelength, py::arg("channel"))
        .def("validate", &OpticalConfig::validate)
        .def_static("defaults_for", &OpticalConfig::defaults_for, py::arg("width"),
                    py::arg("height"))
        .def("__repr__", [](const OpticalConfig& c) {
            return "OpticalConfig(" + std::to_string(c.width) + "x" +
                   std::to_string(c.height) + ", " + std::to_string(c.channels()) +
                   " channels, " + std::to_string(c.n_layers) + " layers)";
        });

    py::class_<SceneParams>(m, "SceneParams")
        .def(py::init([](int grid_rows, int grid_cols, int n_objects, double scale_min,
                         double scale_max, double z_min, double z_max, uint64_t seed) {
                 SceneParams p;
                 p.grid_rows = grid_rows;
                 p.grid_cols = grid_cols;
                 p.n_objects = n_objects;
                 p.scale_min = scale_min;
                 p.scale_max = scale_max;
                 p.z_min = z_min;
                 p.z_max = z_max;
                 p.seed = seed;
                 return p;
             }),
             py::arg("grid_rows") = SceneParams{}.grid_rows,
             py::arg("grid_cols") = SceneParams{}.grid_cols,
             py::arg("n_objects") = SceneParams{}.n_objects,
             py::arg("scale_min") = SceneParams{}.scale_min,
             py::arg("scale_max") = SceneParams{}.scale_max,
             py::arg("z_min") = SceneParams{}.z_min,
             py::arg("z_max") = SceneParams{}.z_max,
             py::arg("seed") = SceneParams{}.seed)
        .def_readwrite("grid_rows", &SceneParams::grid_rows)
        .def_readwrite("grid_cols", &SceneParams::grid_cols)
        .def_readwrite("n_objects", &SceneParams::n_objects)
        .def_readwrite("scale_min", &SceneParams::scale_min)
        .def_readwrite("scale_max", &SceneParams::scale_max)
        .def_readwrite("z_min", &SceneParams::z_min)
        .def_readwrite("z_max", &SceneParams::z_max)
        .def_readwrite("seed", &SceneParams::seed);

    py::class_<RgbdFrame>(m, "RgbdFrame")
        .def(py::init([](const py::list& intensity, const DoubleArray& depth,
                         const ByteArray& validity, const OpticalConfig& config) {
                 RgbdFrame f;
                 for (const auto& plane : intensity)
                     f.intensity.push_back(scalar_from(plane.cast<DoubleArray>()));
                 f.depth = scalar_from(depth);
                 f.validity = mask_from(validity);
                 f.config = config;
                 f.validate();
                 return f;
             }),
             py::arg("intensity"), py::arg("depth"), py::arg("validity"),
             py::arg("config"))
        .def_property_readonly("intensity",
                               [](const RgbdFrame& f) {
                                   py::list planes;
                                   for (const ScalarField& plane : f.intensity)
                                       planes.append(to_numpy(plane));
                                   return planes;
                               })
        .def_property_readonly("depth", [](const RgbdFrame& f) { return to_numpy(f.depth); })
        .def_property_readonly("validity",
                               [](const RgbdFrame& f) { return to_numpy(f.validity); })
        .def_readonly("config", &RgbdFrame::config)
        .def("validate", &RgbdFrame::validate);

    py::class_<HologramSample>(m, "HologramSample")
        .def_property_readonly("channels",
                               [](const HologramSample& s) {
                                   py::list fields;
                                   for (const ComplexField& c : s.channels)
                                       fields.append(to_numpy(c));
                                   return fields;
                               })
        .def_property_readonly(
            "method", [](const HologramSample& s) { return method_name(s.method); })
        .def_readonly("n_layers", &HologramSample::n_layers)
        .def_readonly("seed", &HologramSample::seed)
        .def_readonly("id", &HologramSample::id)
        .def_readonly("config", &HologramSample::config);

    m.def("z_max", &compute_z_max, py::arg("config"), py::arg("channel") = 0,
          "aliasing-free propagation bound in meters");

    m.def(
        "synthesize_scene",
        [](const SceneParams& params, const OpticalConfig& config) {
            return synthesize_scene(params, config);
        },
        py::arg("params"), py::arg("config"));

    m.def(
        "propagate",
        [](const ComplexArray& field, double z, const OpticalConfig& config, int channel,
           bool band_limited, const std::string& padding) {
            return to_numpy(propagate(complex_from(field), z, config, channel,
                                      options_from(band_limited, padding)));
        },
        py::arg("field"), py::arg("z"), py::arg("config"), py::arg("channel") = 0,
        py::arg("band_limited") = true, py::arg("padding") = "zero",
        "angular-spectrum propagation of a hologram-plane field by z meters");

    m.def(
        "generate",
        [](const RgbdFrame& frame, const std::string& method, int sweeps,
           bool band_limited, const std::string& padding) {
            return generate_color(frame, method_from_name(method),
                                  options_from(band_limited, padding), sweeps);
        },
        py::arg("frame"), py::arg("method") = "ap", py::arg("sweeps") = 1,
        py::arg("band_limited") = true, py::arg("padding") = "zero",
        "generate one hologram sample (methods: sm, adv, ap)");

    m.def(
        "evaluate",
        [](const HologramSample& sample, const RgbdFrame& frame, int fip_layers) {
            return metrics_dict(evaluate_sample(sample, frame, fip_layers));
        },
        py::arg("sample"), py::arg("frame"), py::arg("fip_layers") = 0,
        "per-channel and mean FIP metrics of a sample against its frame");

    m.def(
        "reconstruct_at",
        [](const ComplexArray& hologram, double z, const OpticalConfig& config,
           int channel) {
            return to_numpy(reconstruct_at(complex_from(hologram), z, config, channel));
        },
        py::arg("hologram"), py::arg("z"), py::arg("config"), py::arg("channel") = 0,
        "amplitude image of the hologram propagated to plane z");

    m.def(
        "focal_image_projection",
        [](const ComplexArray& hologram, const RgbdFrame& frame, int n_fip_layers,
           int channel) {
            return to_numpy(focal_image_projection(complex_from(hologram), frame,
                                                   n_fip_layers, channel));
        },
        py::arg("hologram"), py::arg("frame"), py::arg("n_fip_layers"),
        py::arg("channel") = 0, "all-in-focus composite over band-masked focal planes");

    m.def(
        "psnr",
        [](const DoubleArray& a, const DoubleArray& b, double peak) {
            return psnr(scalar_from(a), scalar_from(b), peak);
        },
        py::arg("a"), py::arg("b"), py::arg("peak") = 1.0);

    m.def(
        "ssim",
        [](const DoubleArray& a, const DoubleArray& b) {
            return ssim(scalar_from(a), scalar_from(b));
        },
        py::arg("a"), py::arg("b"));

    m.def(
        "dpac_encode",
        [](const ComplexArray& field) {
            const PhaseOnlyHologram enc = dpac_encode(complex_from(field));
            return py::make_tuple(to_numpy(enc.phase), enc.normalization);
        },
        py::arg("field"), "double-phase encoding: (wrapped phase, normalization)");

    m.def(
        "dpac_decode",
        [](const DoubleArray& phase, double normalization) {
            PhaseOnlyHologram enc;
            enc.phase = scalar_from(phase);
            enc.normalization = normalization;
            return to_numpy(dpac_decode(enc));
        },
        py::arg("phase"), py::arg("normalization") = 1.0);

    m.def(
        "off_axis_ramp",
        [](const OpticalConfig& config, int channel, double angle_deg, int axis) {
            return to_numpy(off_axis_ramp(config, channel, angle_deg, axis));
        },
        py::arg("config"), py::arg("channel"), py::arg("angle_deg"), py::arg("axis") = 0);

    m.def(
        "write_container",
        [](const std::filesystem::path& path, const py::list& planes,
           const std::string& kind) {
            ContainerKind k;
            if (kind == "intensity") k = ContainerKind::intensity;
            else if (kind == "depth") k = ContainerKind::depth;
            else if (kind == "amplitude") k = ContainerKind::amplitude;
            else if (kind == "phase") k = ContainerKind::phase;
            else throw ParamsError("unknown container kind '" + kind + "'");
            std::vector<ScalarField> fields;
            for (const auto& plane : planes)
                fields.push_back(scalar_from(plane.cast<DoubleArray>()));
            write_container(path, pack_fields(fields, k));
        },
        py::arg("path"), py::arg("planes"), py::arg("kind"));

    m.def(
        "read_container",
        [](const std::filesystem::path& path) {
            const Container c = read_container(path);
            const char* kinds[] = {"intensity", "depth", "amplitude", "phase",
                                   "complex_field"};
            py::list planes;
            if (c.kind == ContainerKind::complex_field)
                for (const ComplexField& f : unpack_complex(c)) planes.append(to_numpy(f));
            else
                for (const ScalarField& f : unpack_fields(c)) planes.append(to_numpy(f));
            py::dict d;
            d["kind"] = kinds[static_cast<int>(c.kind)];
            d["planes"] = planes;
            return d;
        },
        py::arg("path"));

    m.def(
        "write_pfm",
        [](const std::filesystem::path& path, const DoubleArray& image) {
            write_pfm(path, scalar_from(image));
        },
        py::arg("path"), py::arg("image"));

    m.def(
        "read_pfm",
        [](const std::filesystem::path& path) { return to_numpy(read_pfm(path)); },
        py::arg("path"));
}
