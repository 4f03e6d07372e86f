// kcgh: scene synthesis, hologram generation, evaluation and encoding as
// reproducible batch runs. Every command writes its resolved configuration
// next to its artifacts; rerunning with the same flags and seed reproduces
// identical bytes.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <mutex>
#include <numbers>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "kcgh/encoding.hpp"
#include "kcgh/errors.hpp"
#include "kcgh/generation.hpp"
#include "kcgh/quality.hpp"
#include "kcgh/scene_synth.hpp"
#include "kcgh/storage.hpp"

namespace fs = std::filesystem;
using namespace kcgh;

namespace {

// ---------------------------------------------------------------------------
// run configuration: config file -> flag overrides -> validation

struct RunConfig {
    OpticalConfig optical;
    SceneParams scene;
    uint64_t seed = 1;
    int jobs = 0; // 0 = hardware concurrency
    fs::path out = "out";
    PropagationOptions prop;

    int resolved_jobs() const {
        if (jobs > 0) return jobs;
        const unsigned hc = std::thread::hardware_concurrency();
        return hc > 0 ? static_cast<int>(hc) : 1;
    }
};

// optional<> distinguishes "flag not given" from any explicit value, so a
// bad explicit value fails validation instead of being ignored
struct Overrides {
    std::optional<int> width, height, n_layers, objects;
    std::optional<double> pitch, depth_range;
    std::vector<double> wavelengths;
    std::string phase_mode, padding;
    bool allow_beyond = false;
    std::optional<uint64_t> seed;
};

nlohmann::json scene_to_json(const SceneParams& p) {
    return {{"grid_rows", p.grid_rows},   {"grid_cols", p.grid_cols},
            {"n_objects", p.n_objects},   {"scale_min", p.scale_min},
            {"scale_max", p.scale_max},   {"z_min", p.z_min},
            {"z_max", p.z_max},           {"seed", p.seed}};
}

void scene_from_json(const nlohmann::json& j, SceneParams& p) {
    for (const auto& [key, value] : j.items()) {
        try {
            if (key == "grid_rows") p.grid_rows = value.get<int>();
            else if (key == "grid_cols") p.grid_cols = value.get<int>();
            else if (key == "n_objects") p.n_objects = value.get<int>();
            else if (key == "scale_min") p.scale_min = value.get<double>();
            else if (key == "scale_max") p.scale_max = value.get<double>();
            else if (key == "z_min") p.z_min = value.get<double>();
            else if (key == "z_max") p.z_max = value.get<double>();
            else if (key == "seed") p.seed = value.get<uint64_t>();
            else throw ConfigError("unknown scene key '" + key + "'");
        } catch (const nlohmann::json::exception& e) {
            throw ConfigError("scene key '" + key + "': " + e.what());
        }
    }
}

// strict numeric parse: the whole token must be consumed
double parse_double(const std::string& s, const std::string& what) {
    try {
        size_t used = 0;
        const double v = std::stod(s, &used);
        if (used == s.size() && std::isfinite(v)) return v;
    } catch (const std::exception&) {
    }
    throw ParamsError("bad " + what + " value '" + s + "'");
}

int parse_int(const std::string& s, const std::string& what) {
    try {
        size_t used = 0;
        const int v = std::stoi(s, &used);
        if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw ParamsError("bad " + what + " value '" + s + "'");
}

PaddingMode padding_from(const std::string& s) {
    if (s == "zero") return PaddingMode::zero;
    if (s == "edge") return PaddingMode::edge;
    throw ParamsError("unknown padding mode '" + s + "' (zero|edge)");
}

const char* padding_name(PaddingMode m) {
    return m == PaddingMode::zero ? "zero" : "edge";
}

// Load the optional config file, then apply flag overrides on top.
RunConfig resolve_config(const std::string& config_file, const Overrides& ov,
                         const std::string& out_flag) {
    RunConfig rc;
    if (!config_file.empty()) {
        std::ifstream in(config_file);
        if (!in) throw IoError("cannot open config file '" + config_file + "'");
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw ConfigError("config file '" + config_file + "': " + e.what());
        }
        if (!j.is_object()) throw ConfigError("config file must hold a JSON object");
        for (const auto& [key, value] : j.items()) {
            if (key == "optical") rc.optical = config_from_json(value);
            else if (key == "scene") scene_from_json(value, rc.scene);
            else if (key == "seed") rc.seed = value.get<uint64_t>();
            else if (key == "jobs") rc.jobs = value.get<int>();
            else if (key == "padding") rc.prop.padding = padding_from(value.get<std::string>());
            else if (key == "out") rc.out = value.get<std::string>();
            else throw ConfigError("unknown run-config key '" + key + "'");
        }
    }

    if (ov.width) rc.optical.width = *ov.width;
    if (ov.height) rc.optical.height = *ov.height;
    if (ov.pitch) rc.optical.pixel_pitch = *ov.pitch;
    if (!ov.wavelengths.empty()) rc.optical.wavelengths = ov.wavelengths;
    if (ov.depth_range) rc.optical.depth_range = *ov.depth_range;
    if (ov.n_layers) rc.optical.n_layers = *ov.n_layers;
    if (!ov.phase_mode.empty()) {
        nlohmann::json j{{"layer_phase_mode", ov.phase_mode}};
        rc.optical.layer_phase_mode = config_from_json(j).layer_phase_mode;
    }
    if (ov.allow_beyond) rc.optical.allow_depth_beyond_zmax = true;
    if (!ov.padding.empty()) rc.prop.padding = padding_from(ov.padding);
    if (ov.seed) rc.seed = *ov.seed;
    if (ov.objects) rc.scene.n_objects = *ov.objects;
    if (!out_flag.empty()) rc.out = out_flag;

    // a depth range tied to the resolution unless explicitly configured
    if (!ov.depth_range && config_file.empty())
        rc.optical.depth_range =
            OpticalConfig::defaults_for(rc.optical.width, rc.optical.height).depth_range;

    rc.optical.validate();
    rc.scene.seed = rc.seed;
    return rc;
}

// resolved settings echoed next to every run's artifacts
void write_run_config(const fs::path& dir, const RunConfig& rc, const std::string& command,
                      const nlohmann::json& extra) {
    nlohmann::json j{{"command", command},
                     {"optical", config_to_json(rc.optical)},
                     {"scene", scene_to_json(rc.scene)},
                     {"seed", rc.seed},
                     {"padding", padding_name(rc.prop.padding)}};
    for (const auto& [key, value] : extra.items()) j[key] = value;
    std::ofstream out(dir / "run_config.json");
    out << j.dump(2) << "\n";
}

// ---------------------------------------------------------------------------
// sample-level work queue (deterministic: outputs are indexed, the queue
// only changes completion order)

void parallel_for(int n, int jobs, const std::function<void(int)>& fn) {
    if (n <= 0) return;
    jobs = std::min(jobs, n);
    if (jobs <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    std::mutex error_mutex;
    std::exception_ptr error;
    for (int t = 0; t < jobs; ++t)
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                }
            }
        });
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

std::string sample_id(int index) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "s%04d", index);
    return buf;
}

// ---------------------------------------------------------------------------
// subcommand bodies

int cmd_scenegen(const RunConfig& rc, int count) {
    if (count < 1) throw ParamsError("scene count must be >= 1");
    rc.scene.validate(rc.optical);
    fs::create_directories(rc.out);

    std::vector<ManifestRecord> records(static_cast<size_t>(count));
    const std::string hash = config_hash(rc.optical);
    parallel_for(count, rc.resolved_jobs(), [&](int i) {
        SceneParams p = rc.scene;
        p.seed = substream(rc.seed, static_cast<uint64_t>(i));
        const RgbdFrame frame = synthesize_scene(p, rc.optical);
        ManifestRecord& r = records[static_cast<size_t>(i)];
        r.id = sample_id(i);
        r.seed = p.seed;
        r.config_hash = hash;
        r.generator = "scene";
        r.files = save_frame(rc.out, r.id, frame);
    });
    write_manifest(rc.out, records);
    write_run_config(rc.out, rc, "scenegen", {{"count", count}});
    std::printf("wrote %d frames to %s\n", count, rc.out.string().c_str());
    return 0;
}

int cmd_generate(const RunConfig& rc, const std::string& method_name_str, int sweeps) {
    const Method method = method_from_name(method_name_str);
    std::vector<ManifestRecord> records = read_manifest(rc.out);
    if (records.empty()) throw SceneError("no samples in '" + rc.out.string() + "'");

    parallel_for(static_cast<int>(records.size()), rc.resolved_jobs(), [&](int i) {
        ManifestRecord& r = records[static_cast<size_t>(i)];
        const RgbdFrame frame = load_frame(rc.out, r, rc.optical);
        HologramSample sample = generate_color(frame, method, rc.prop, sweeps);
        sample.seed = r.seed;
        sample.id = r.id;
        const auto files = save_hologram(rc.out, r.id, sample);
        r.files["hologram_" + method_name_str] = files.at("hologram");
        r.generator = method_name_str;
    });
    write_manifest(rc.out, records);
    write_run_config(rc.out, rc, "generate",
                     {{"method", method_name_str}, {"sweeps", sweeps}});
    std::printf("generated %zu %s holograms in %s\n", records.size(),
                method_name_str.c_str(), rc.out.string().c_str());
    return 0;
}

std::vector<std::string> methods_in(const std::vector<ManifestRecord>& records) {
    std::vector<std::string> out;
    for (const char* m : {"sm", "adv", "ap"})
        if (!records.empty() &&
            records[0].files.count("hologram_" + std::string(m)) > 0)
            out.push_back(m);
    return out;
}

HologramSample load_method_hologram(const fs::path& dir, const ManifestRecord& r,
                                    const std::string& method, const OpticalConfig& config) {
    const auto it = r.files.find("hologram_" + method);
    if (it == r.files.end())
        throw IoError("sample '" + r.id + "' has no " + method +
                      " hologram; run `kcgh generate --method " + method + "` first");
    ManifestRecord view = r;
    view.generator = method;
    view.files["hologram"] = it->second;
    return load_hologram(dir, view, config);
}

int cmd_evaluate(const RunConfig& rc, std::vector<std::string> methods, int fip_layers) {
    std::vector<ManifestRecord> records = read_manifest(rc.out);
    if (records.empty()) throw SceneError("no samples in '" + rc.out.string() + "'");
    if (methods.empty()) methods = methods_in(records);
    if (methods.empty())
        throw IoError("no holograms found in '" + rc.out.string() +
                      "'; run `kcgh generate` first");

    const int n = static_cast<int>(records.size());
    std::vector<std::vector<MetricsRecord>> per_method(methods.size());
    for (auto& v : per_method) v.resize(static_cast<size_t>(n));

    parallel_for(n, rc.resolved_jobs(), [&](int i) {
        ManifestRecord& r = records[static_cast<size_t>(i)];
        const RgbdFrame frame = load_frame(rc.out, r, rc.optical);
        nlohmann::json metrics = nlohmann::json::object();
        for (size_t m = 0; m < methods.size(); ++m) {
            const HologramSample sample =
                load_method_hologram(rc.out, r, methods[m], rc.optical);
            const MetricsRecord rec = evaluate_sample(sample, frame, fip_layers, rc.prop);
            per_method[m][static_cast<size_t>(i)] = rec;
            nlohmann::json chans_p = nlohmann::json::array(),
                           chans_s = nlohmann::json::array();
            for (double v : rec.psnr_channel) chans_p.push_back(json_number(v));
            for (double v : rec.ssim_channel) chans_s.push_back(json_number(v));
            metrics[methods[m]] = {{"psnr_channel", chans_p},
                                   {"ssim_channel", chans_s},
                                   {"psnr_mean", json_number(rec.psnr_mean)},
                                   {"ssim_mean", json_number(rec.ssim_mean)},
                                   {"fip_layers", rec.fip_layers}};
        }
        r.metrics = metrics;
    });

    std::vector<MetricsRecord> all;
    for (const auto& group : per_method)
        all.insert(all.end(), group.begin(), group.end());
    const std::vector<MetricsRow> rows = aggregate_metrics(all);
    write_metrics_csv(rc.out / "metrics.csv", rows);
    std::ofstream(rc.out / "metrics.json") << metrics_rows_json(rows).dump(2) << "\n";
    write_manifest(rc.out, records);
    write_run_config(rc.out, rc, "evaluate",
                     {{"methods", methods}, {"fip_layers", fip_layers}});

    for (const MetricsRow& row : rows)
        if (row.channel == "mean")
            std::printf("%-4s %-9s avg %8.4f  (min %.4f, max %.4f)\n", row.method.c_str(),
                        row.metric.c_str(), row.avg, row.min, row.max);
    return 0;
}

int cmd_reconstruct(const RunConfig& rc, const std::string& id, const std::string& method,
                    std::vector<double> zs, int stack) {
    const std::vector<ManifestRecord> records = read_manifest(rc.out);
    const ManifestRecord* rec = nullptr;
    for (const ManifestRecord& r : records)
        if (r.id == id) rec = &r;
    if (!rec) throw IoError("no sample '" + id + "' in '" + rc.out.string() + "'");

    if (zs.empty() && stack < 1)
        throw ParamsError("reconstruct needs --z or --stack");
    if (!zs.empty() && stack >= 1)
        throw ParamsError("--z and --stack are mutually exclusive");
    if (zs.empty()) {
        // stack planes at band midpoints of the full depth range
        for (int k = 0; k < stack; ++k)
            zs.push_back((k + 0.5) * rc.optical.depth_range / stack);
    }

    const HologramSample sample = load_method_hologram(rc.out, *rec, method, rc.optical);
    nlohmann::json planes = nlohmann::json::array();
    for (size_t k = 0; k < zs.size(); ++k) {
        for (int c = 0; c < rc.optical.channels(); ++c) {
            const ScalarField amp =
                reconstruct_at(sample.channels[static_cast<size_t>(c)], zs[k], rc.optical,
                               c, rc.prop);
            char name[64];
            std::snprintf(name, sizeof name, "%s_%s_z%03zu_c%d.pfm", id.c_str(),
                          method.c_str(), k, c);
            write_pfm(rc.out / name, amp);
        }
        planes.push_back(zs[k]);
    }
    std::ofstream(rc.out / (id + "_" + method + "_planes.json"))
        << nlohmann::json{{"id", id}, {"method", method}, {"planes", planes}}.dump(2)
        << "\n";
    std::printf("reconstructed %zu planes for %s/%s\n", zs.size(), id.c_str(),
                method.c_str());
    return 0;
}

int cmd_encode(const RunConfig& rc, const std::string& id, const std::string& method,
               double angle_deg, const std::string& axis) {
    const std::vector<ManifestRecord> records = read_manifest(rc.out);
    const ManifestRecord* rec = nullptr;
    for (const ManifestRecord& r : records)
        if (r.id == id) rec = &r;
    if (!rec) throw IoError("no sample '" + id + "' in '" + rc.out.string() + "'");
    const int axis_idx = axis == "x" ? 0 : axis == "y" ? 1 : -1;
    if (axis_idx < 0) throw ParamsError("axis must be x or y");

    const HologramSample sample = load_method_hologram(rc.out, *rec, method, rc.optical);
    std::vector<ScalarField> phases;
    nlohmann::json norms = nlohmann::json::array();
    for (int c = 0; c < rc.optical.channels(); ++c) {
        ComplexField field = sample.channels[static_cast<size_t>(c)];
        if (angle_deg != 0.0)
            field = apply_carrier(field, off_axis_ramp(rc.optical, c, angle_deg, axis_idx));
        const PhaseOnlyHologram enc = dpac_encode(field);
        char name[64];
        std::snprintf(name, sizeof name, "%s_%s_phase_c%d.png", id.c_str(),
                      method.c_str(), c);
        write_png16(rc.out / name, enc.phase);
        // container copy stores the normalized angle plane
        ScalarField stored(enc.phase.width, enc.phase.height);
        for (size_t p = 0; p < stored.size(); ++p)
            stored.data[p] = (enc.phase.data[p] + std::numbers::pi) /
                             (2.0 * std::numbers::pi);
        phases.push_back(std::move(stored));
        norms.push_back(enc.normalization);
    }
    write_container(rc.out / (id + "_" + method + "_phase.kcgh"),
                    pack_fields(phases, ContainerKind::phase));
    std::ofstream(rc.out / (id + "_" + method + "_phase.json"))
        << nlohmann::json{{"id", id},
                          {"method", method},
                          {"normalization", norms},
                          {"angle_deg", angle_deg},
                          {"axis", axis}}
               .dump(2)
        << "\n";
    std::printf("encoded %s/%s (%d channels)\n", id.c_str(), method.c_str(),
                rc.optical.channels());
    return 0;
}

int cmd_zmax(const RunConfig& rc) {
    for (int c = 0; c < rc.optical.channels(); ++c) {
        const double zm = compute_z_max(rc.optical, c);
        std::printf("channel %d (lambda %.0f nm): z_max = %.2f mm\n", c,
                    rc.optical.wavelength(c) * 1e9, zm * 1e3);
    }
    return 0;
}

int cmd_sweep(RunConfig rc, const std::string& axis, const std::vector<std::string>& values,
              const std::string& method, int count, int fip_layers, int sweeps) {
    if (values.empty()) throw ParamsError("sweep needs at least one --values entry");
    const fs::path root = rc.out;
    fs::create_directories(root);

    // axis,value,method,channel,metric,min,avg,max
    std::string table = "axis,value,method,channel,metric,min,avg,max\n";
    nlohmann::json jrows = nlohmann::json::array();
    for (const std::string& value : values) {
        RunConfig run = rc;
        run.out = root / (axis + "_" + value);
        if (axis == "depth_range") {
            run.optical.depth_range = parse_double(value, "depth_range");
            run.optical.validate();
        } else if (axis == "n_layers") {
            run.optical.n_layers = parse_int(value, "n_layers");
            run.optical.validate();
        } else if (axis == "padding") {
            run.prop.padding = padding_from(value);
        } else {
            throw ParamsError("unknown sweep axis '" + axis +
                              "' (depth_range|n_layers|padding)");
        }
        cmd_scenegen(run, count);
        cmd_generate(run, method, sweeps);
        cmd_evaluate(run, {method}, fip_layers);

        // fold this run's rows into the sweep table
        std::ifstream mj(run.out / "metrics.json");
        nlohmann::json rows;
        mj >> rows;
        for (const auto& row : rows) {
            table += axis + "," + value + "," + row["method"].get<std::string>() + "," +
                     row["channel"].get<std::string>() + "," +
                     row["metric"].get<std::string>() + "," + row["min"].dump() + "," +
                     row["avg"].dump() + "," + row["max"].dump() + "\n";
            nlohmann::json jr = row;
            jr["axis"] = axis;
            jr["value"] = value;
            jrows.push_back(jr);
        }
    }
    std::ofstream(root / "sweep.csv") << table;
    std::ofstream(root / "sweep.json") << jrows.dump(2) << "\n";
    write_run_config(root, rc, "sweep",
                     {{"axis", axis},
                      {"values", values},
                      {"method", method},
                      {"count", count}});
    std::printf("sweep over %s complete: %zu runs in %s\n", axis.c_str(), values.size(),
                root.string().c_str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"layer-based holography batch tool"};
    app.require_subcommand(1);

    std::string config_file, out_flag;
    Overrides ov;
    app.add_option("--config", config_file, "JSON run-config file");
    app.add_option("--out", out_flag, "dataset / output directory");
    app.add_option("--seed", ov.seed, "master seed");

    // optical overrides
    int jobs_flag = 0;
    app.add_option("--width", ov.width, "grid width, pixels");
    app.add_option("--height", ov.height, "grid height, pixels");
    app.add_option("--pitch", ov.pitch, "pixel pitch, meters");
    app.add_option("--wavelengths", ov.wavelengths, "wavelengths, meters")->delimiter(',');
    app.add_option("--depth-range", ov.depth_range, "scene depth range, meters");
    app.add_option("--layers", ov.n_layers, "layer count");
    app.add_option("--phase-mode", ov.phase_mode,
                   "layer phase mode (zero|literal_z|wavenumber_scaled)");
    app.add_option("--padding", ov.padding, "propagation padding (zero|edge)");
    app.add_flag("--allow-depth-beyond-zmax", ov.allow_beyond,
                 "accept depth ranges beyond the aliasing bound");
    app.add_option("--objects", ov.objects, "objects per synthesized scene");
    app.add_option("--parallel", jobs_flag, "worker threads (0 = all cores)");

    int count = 20, stack = 0, fip_layers = 0, sweeps = 1;
    std::string method = "ap", rid, axis = "x", sweep_axis;
    std::vector<std::string> methods, sweep_values;
    std::vector<double> zs;
    double angle_deg = 0.0;

    CLI::App* c_scene = app.add_subcommand("scenegen", "synthesize RGB-D frames");
    c_scene->add_option("--count", count, "number of scenes");

    CLI::App* c_gen = app.add_subcommand("generate", "frames -> holograms");
    c_gen->add_option("--method", method, "sm|adv|ap")->required();
    c_gen->add_option("--sweeps", sweeps, "projection sweeps (ap only)");

    CLI::App* c_eval = app.add_subcommand("evaluate", "holograms -> metric tables");
    c_eval->add_option("--methods", methods, "methods to score (default: all present)")->delimiter(',');
    c_eval->add_option("--fip-layers", fip_layers,
                       "focal planes for the metric (0 = generator layer count)");

    CLI::App* c_rec = app.add_subcommand("reconstruct", "emit focal-stack images");
    c_rec->add_option("--id", rid, "sample id")->required();
    c_rec->add_option("--method", method, "hologram method")->required();
    c_rec->add_option("--z", zs, "plane depths, meters")->delimiter(',');
    c_rec->add_option("--stack", stack, "evenly spaced plane count");

    CLI::App* c_enc = app.add_subcommand("encode", "phase-only DPAC output");
    c_enc->add_option("--id", rid, "sample id")->required();
    c_enc->add_option("--method", method, "hologram method")->required();
    c_enc->add_option("--angle", angle_deg, "off-axis carrier angle, degrees");
    c_enc->add_option("--axis", axis, "carrier axis (x|y)");

    CLI::App* c_sweep = app.add_subcommand("sweep", "cartesian parameter sweep");
    c_sweep->add_option("--axis", sweep_axis, "depth_range|n_layers|padding")->required();
    c_sweep->add_option("--values", sweep_values, "axis values")->required()->delimiter(',');
    c_sweep->add_option("--method", method, "generator method");
    c_sweep->add_option("--count", count, "scenes per run");
    c_sweep->add_option("--fip-layers", fip_layers, "focal planes for the metric");
    c_sweep->add_option("--sweeps", sweeps, "projection sweeps (ap only)");

    CLI::App* c_zmax = app.add_subcommand("zmax", "print the aliasing-free bound");

    // global flags are accepted on either side of the subcommand name
    for (CLI::App* sub : {c_scene, c_gen, c_eval, c_rec, c_enc, c_sweep, c_zmax})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e); // prints help text / diagnostics
        return code == 0 ? 0 : 2;
    }

    try {
        RunConfig rc = resolve_config(config_file, ov, out_flag);
        if (jobs_flag > 0) rc.jobs = jobs_flag;

        if (c_scene->parsed()) return cmd_scenegen(rc, count);
        if (c_gen->parsed()) return cmd_generate(rc, method, sweeps);
        if (c_eval->parsed()) return cmd_evaluate(rc, methods, fip_layers);
        if (c_rec->parsed()) return cmd_reconstruct(rc, rid, method, zs, stack);
        if (c_enc->parsed()) return cmd_encode(rc, rid, method, angle_deg, axis);
        if (c_sweep->parsed())
            return cmd_sweep(rc, sweep_axis, sweep_values, method, count, fip_layers, sweeps);
        if (c_zmax->parsed()) return cmd_zmax(rc);
        return 10;
    } catch (const Error& e) {
        std::fprintf(stderr, "kcgh: error: %s\n", e.what());
        return e.exit_code();
    } catch (const std::exception& e) {
        std::fprintf(stderr, "kcgh: error: %s\n", e.what());
        return 10;
    }
}
