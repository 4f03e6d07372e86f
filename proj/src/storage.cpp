#include "kcgh/storage.hpp"

#include <png.h>

#include <algorithm>
#include <atomic>
#include <bit>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>

static_assert(std::endian::native == std::endian::little,
              "container serialization assumes a little-endian host");

namespace kcgh {

namespace fs = std::filesystem;

namespace {

constexpr double pi = std::numbers::pi;
constexpr uint32_t container_version = 1;

std::atomic<uint64_t> temp_counter{0};

fs::path temp_path_for(const fs::path& path) {
    const uint64_t n = temp_counter.fetch_add(1);
    return path.parent_path() /
           (path.filename().string() + ".tmp" + std::to_string(n));
}

// All writers funnel through here: serialize fully, then rename into place.
void atomic_write(const fs::path& path, const std::string& bytes) {
    const fs::path tmp = temp_path_for(path);
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot open '" + tmp.string() + "' for writing");
        out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
        if (!out) {
            std::error_code ec;
            fs::remove(tmp, ec);
            throw IoError("short write to '" + tmp.string() + "'");
        }
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw IoError("cannot move temp file into '" + path.string() + "'");
    }
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return std::move(ss).str();
}

void append_u32(std::string& buf, uint32_t v) {
    buf.append(reinterpret_cast<const char*>(&v), 4);
}

std::string format_double(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[32];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, end);
}

void validate_payload(const Container& c) {
    const size_t plane = static_cast<size_t>(c.width) * c.height;
    const size_t planes = c.payload.size() / std::max<size_t>(plane, 1);
    for (size_t i = 0; i < c.payload.size(); ++i) {
        const float v = c.payload[i];
        if (!std::isfinite(v))
            throw ValidationError("container payload contains a non-finite sample");
        const size_t plane_idx = i / plane;
        bool unit_range = false, non_negative = false;
        switch (c.kind) {
            case ContainerKind::intensity:
            case ContainerKind::depth:
            case ContainerKind::phase: unit_range = true; break;
            case ContainerKind::amplitude: non_negative = true; break;
            case ContainerKind::complex_field:
                // planes alternate amplitude, normalized phase
                if (plane_idx % 2 == 0) non_negative = true;
                else unit_range = true;
                break;
        }
        if (unit_range && (v < 0.0f || v > 1.0f))
            throw ValidationError("container payload outside [0, 1]");
        if (non_negative && v < 0.0f)
            throw ValidationError("container amplitude below 0");
    }
    (void)planes;
}

} // namespace

void write_container(const fs::path& path, const Container& c) {
    if (c.width < 1 || c.height < 1 || c.channels < 1)
        throw ValidationError("container dimensions must be positive");
    const size_t plane = static_cast<size_t>(c.width) * c.height;
    const size_t n_planes =
        static_cast<size_t>(c.channels) * (c.kind == ContainerKind::complex_field ? 2 : 1);
    if (c.payload.size() != plane * n_planes)
        throw ValidationError("container payload size does not match header");
    validate_payload(c);

    std::string buf;
    buf.reserve(21 + c.payload.size() * 4);
    buf.append("KCGH", 4);
    append_u32(buf, container_version);
    append_u32(buf, c.width);
    append_u32(buf, c.height);
    append_u32(buf, c.channels);
    buf.push_back(static_cast<char>(c.kind));
    buf.append(reinterpret_cast<const char*>(c.payload.data()), c.payload.size() * 4);
    atomic_write(path, buf);
}

Container read_container(const fs::path& path) {
    const std::string buf = read_file(path);
    if (buf.size() < 21) throw FormatError("'" + path.string() + "': truncated header");
    if (std::memcmp(buf.data(), "KCGH", 4) != 0)
        throw FormatError("'" + path.string() + "': bad magic");

    uint32_t version, w, h, ch;
    std::memcpy(&version, buf.data() + 4, 4);
    std::memcpy(&w, buf.data() + 8, 4);
    std::memcpy(&h, buf.data() + 12, 4);
    std::memcpy(&ch, buf.data() + 16, 4);
    if (version != container_version)
        throw FormatError("'" + path.string() + "': unsupported version " +
                          std::to_string(version));
    const uint8_t kind_byte = static_cast<uint8_t>(buf[20]);
    if (kind_byte > static_cast<uint8_t>(ContainerKind::complex_field))
        throw FormatError("'" + path.string() + "': unknown kind " +
                          std::to_string(kind_byte));
    if (w < 1 || h < 1 || ch < 1)
        throw FormatError("'" + path.string() + "': degenerate dimensions");

    Container c;
    c.width = w;
    c.height = h;
    c.channels = ch;
    c.kind = static_cast<ContainerKind>(kind_byte);
    const size_t n_planes =
        static_cast<size_t>(ch) * (c.kind == ContainerKind::complex_field ? 2 : 1);
    const size_t expect = static_cast<size_t>(w) * h * n_planes * 4;
    if (buf.size() - 21 != expect)
        throw FormatError("'" + path.string() + "': payload size mismatch (have " +
                          std::to_string(buf.size() - 21) + ", want " +
                          std::to_string(expect) + ")");
    c.payload.resize(expect / 4);
    std::memcpy(c.payload.data(), buf.data() + 21, expect);
    for (float v : c.payload)
        if (!std::isfinite(v))
            throw FormatError("'" + path.string() + "': non-finite sample");
    return c;
}

Container pack_fields(const std::vector<ScalarField>& fields, ContainerKind kind) {
    if (fields.empty()) throw ValidationError("pack_fields: no fields");
    if (kind == ContainerKind::complex_field)
        throw ValidationError("pack_fields: use pack_hologram for complex data");
    Container c;
    c.width = static_cast<uint32_t>(fields[0].width);
    c.height = static_cast<uint32_t>(fields[0].height);
    c.channels = static_cast<uint32_t>(fields.size());
    c.kind = kind;
    c.payload.reserve(fields.size() * fields[0].size());
    for (const ScalarField& f : fields) {
        require_same_shape(f, fields[0], "pack_fields");
        for (double v : f.data) c.payload.push_back(static_cast<float>(v));
    }
    return c;
}

std::vector<ScalarField> unpack_fields(const Container& c) {
    if (c.kind == ContainerKind::complex_field)
        throw FormatError("unpack_fields: container holds complex data");
    const size_t plane = static_cast<size_t>(c.width) * c.height;
    std::vector<ScalarField> out;
    out.reserve(c.channels);
    for (uint32_t ch = 0; ch < c.channels; ++ch) {
        ScalarField f(static_cast<int>(c.width), static_cast<int>(c.height));
        for (size_t p = 0; p < plane; ++p) f.data[p] = c.payload[ch * plane + p];
        out.push_back(std::move(f));
    }
    return out;
}

Container pack_hologram(const HologramSample& sample) {
    sample.validate();
    Container c;
    c.width = static_cast<uint32_t>(sample.config.width);
    c.height = static_cast<uint32_t>(sample.config.height);
    c.channels = static_cast<uint32_t>(sample.channels.size());
    c.kind = ContainerKind::complex_field;
    const size_t plane = static_cast<size_t>(c.width) * c.height;
    c.payload.reserve(plane * 2 * sample.channels.size());
    for (const ComplexField& f : sample.channels) {
        for (const cplx& v : f.data) c.payload.push_back(static_cast<float>(std::abs(v)));
        for (const cplx& v : f.data) {
            const double a = (v.real() == 0.0 && v.imag() == 0.0)
                                 ? 0.0
                                 : std::atan2(v.imag(), v.real());
            c.payload.push_back(static_cast<float>((wrap_phase(a) + pi) / (2.0 * pi)));
        }
    }
    return c;
}

std::vector<ComplexField> unpack_complex(const Container& c) {
    if (c.kind != ContainerKind::complex_field)
        throw FormatError("unpack_complex: container is not complex");
    const size_t plane = static_cast<size_t>(c.width) * c.height;
    std::vector<ComplexField> out;
    out.reserve(c.channels);
    for (uint32_t ch = 0; ch < c.channels; ++ch) {
        ComplexField f(static_cast<int>(c.width), static_cast<int>(c.height));
        const float* amp = c.payload.data() + static_cast<size_t>(ch) * 2 * plane;
        const float* phs = amp + plane;
        for (size_t p = 0; p < plane; ++p)
            f.data[p] = std::polar(static_cast<double>(amp[p]),
                                   static_cast<double>(phs[p]) * 2.0 * pi - pi);
        out.push_back(std::move(f));
    }
    return out;
}

void write_pfm(const fs::path& path, const ScalarField& field) {
    if (field.width < 1 || field.height < 1)
        throw ValidationError("write_pfm: empty field");
    for (double v : field.data)
        if (!std::isfinite(v)) throw ValidationError("write_pfm: non-finite sample");

    std::string buf = "Pf\n" + std::to_string(field.width) + " " +
                      std::to_string(field.height) + "\n-1.0\n";
    for (int y = field.height - 1; y >= 0; --y)
        for (int x = 0; x < field.width; ++x) {
            const float v = static_cast<float>(field.at(x, y));
            buf.append(reinterpret_cast<const char*>(&v), 4);
        }
    atomic_write(path, buf);
}

ScalarField read_pfm(const fs::path& path) {
    const std::string buf = read_file(path);
    size_t pos = 0;
    auto token = [&]() -> std::string {
        while (pos < buf.size() && std::isspace(static_cast<unsigned char>(buf[pos]))) ++pos;
        const size_t start = pos;
        while (pos < buf.size() && !std::isspace(static_cast<unsigned char>(buf[pos]))) ++pos;
        if (start == pos) throw FormatError("'" + path.string() + "': truncated PFM header");
        return buf.substr(start, pos - start);
    };

    const std::string magic = token();
    if (magic == "PF")
        throw FormatError("'" + path.string() + "': color PFM not supported");
    if (magic != "Pf") throw FormatError("'" + path.string() + "': bad PFM magic");
    int w, h;
    double scale;
    try {
        w = std::stoi(token());
        h = std::stoi(token());
        scale = std::stod(token());
    } catch (const std::exception&) {
        throw FormatError("'" + path.string() + "': malformed PFM header");
    }
    if (w < 1 || h < 1 || scale == 0.0)
        throw FormatError("'" + path.string() + "': bad PFM dimensions or scale");
    ++pos; // single whitespace separates header from samples

    const size_t need = static_cast<size_t>(w) * h * 4;
    if (buf.size() - pos != need)
        throw FormatError("'" + path.string() + "': PFM payload size mismatch");

    const bool big_endian = scale > 0.0;
    ScalarField out(w, h);
    const char* src = buf.data() + pos;
    for (int y = h - 1; y >= 0; --y)
        for (int x = 0; x < w; ++x) {
            uint32_t bits;
            std::memcpy(&bits, src, 4);
            src += 4;
            if (big_endian)
                bits = (bits >> 24) | ((bits >> 8) & 0xFF00u) | ((bits << 8) & 0xFF0000u) |
                       (bits << 24);
            float v;
            std::memcpy(&v, &bits, 4);
            out.at(x, y) = v;
        }
    return out;
}

void write_png16(const fs::path& path, const ScalarField& phase) {
    if (phase.width < 1 || phase.height < 1)
        throw ValidationError("write_png16: empty field");
    for (double v : phase.data)
        if (!std::isfinite(v) || v <= -pi - 1e-12 || v > pi + 1e-12)
            throw ValidationError("write_png16: phase outside (-pi, pi]");

    const fs::path tmp = temp_path_for(path);
    FILE* fp = std::fopen(tmp.string().c_str(), "wb");
    if (!fp) throw IoError("cannot open '" + tmp.string() + "' for writing");

    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    png_infop info = png ? png_create_info_struct(png) : nullptr;
    if (!png || !info) {
        if (png) png_destroy_write_struct(&png, &info);
        std::fclose(fp);
        std::error_code ec;
        fs::remove(tmp, ec);
        throw IoError("libpng initialization failed");
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        std::fclose(fp);
        std::error_code ec;
        fs::remove(tmp, ec);
        throw IoError("libpng write failed for '" + path.string() + "'");
    }

    png_init_io(png, fp);
    png_set_IHDR(png, info, static_cast<png_uint_32>(phase.width),
                 static_cast<png_uint_32>(phase.height), 16, PNG_COLOR_TYPE_GRAY,
                 PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);

    std::vector<uint8_t> row(static_cast<size_t>(phase.width) * 2);
    for (int y = 0; y < phase.height; ++y) {
        for (int x = 0; x < phase.width; ++x) {
            const double t = (phase.at(x, y) + pi) / (2.0 * pi);
            const long q = std::lround(std::clamp(t, 0.0, 1.0) * 65535.0);
            row[static_cast<size_t>(x) * 2] = static_cast<uint8_t>(q >> 8);     // PNG is big-endian
            row[static_cast<size_t>(x) * 2 + 1] = static_cast<uint8_t>(q & 0xFF);
        }
        png_write_row(png, row.data());
    }
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
    std::fclose(fp);

    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw IoError("cannot move temp file into '" + path.string() + "'");
    }
}

uint64_t fnv1a(const void* data, size_t n) {
    const uint8_t* p = static_cast<const uint8_t*>(data);
    uint64_t h = 0xCBF29CE484222325ULL;
    for (size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= 0x100000001B3ULL;
    }
    return h;
}

namespace {
uint64_t bits_of(double v) {
    uint64_t b;
    std::memcpy(&b, &v, sizeof b);
    return b;
}
} // namespace

std::string config_hash(const OpticalConfig& config) {
    std::string s = std::to_string(config.width) + "|" + std::to_string(config.height) +
                    "|" + std::to_string(bits_of(config.pixel_pitch));
    for (double lam : config.wavelengths) s += "|" + std::to_string(bits_of(lam));
    s += "|" + std::to_string(bits_of(config.depth_range)) + "|" +
         std::to_string(config.n_layers) + "|" +
         std::to_string(static_cast<int>(config.layer_phase_mode)) + "|" +
         std::to_string(config.allow_depth_beyond_zmax ? 1 : 0);
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a(s.data(), s.size())));
    return std::string(buf, 16);
}

namespace {

const char* phase_mode_name(LayerPhaseMode m) {
    switch (m) {
        case LayerPhaseMode::zero: return "zero";
        case LayerPhaseMode::literal_z: return "literal_z";
        case LayerPhaseMode::wavenumber_scaled: return "wavenumber_scaled";
    }
    return "?";
}

LayerPhaseMode phase_mode_from(const std::string& s) {
    if (s == "zero") return LayerPhaseMode::zero;
    if (s == "literal_z") return LayerPhaseMode::literal_z;
    if (s == "wavenumber_scaled") return LayerPhaseMode::wavenumber_scaled;
    throw ConfigError("unknown layer phase mode '" + s + "'");
}

} // namespace

nlohmann::json config_to_json(const OpticalConfig& config) {
    return nlohmann::json{{"width", config.width},
                          {"height", config.height},
                          {"pixel_pitch", config.pixel_pitch},
                          {"wavelengths", config.wavelengths},
                          {"depth_range", config.depth_range},
                          {"n_layers", config.n_layers},
                          {"layer_phase_mode", phase_mode_name(config.layer_phase_mode)},
                          {"allow_depth_beyond_zmax", config.allow_depth_beyond_zmax}};
}

OpticalConfig config_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ConfigError("config must be a JSON object");
    OpticalConfig c;
    for (const auto& [key, value] : j.items()) {
        try {
            if (key == "width") c.width = value.get<int>();
            else if (key == "height") c.height = value.get<int>();
            else if (key == "pixel_pitch") c.pixel_pitch = value.get<double>();
            else if (key == "wavelengths") c.wavelengths = value.get<std::vector<double>>();
            else if (key == "depth_range") c.depth_range = value.get<double>();
            else if (key == "n_layers") c.n_layers = value.get<int>();
            else if (key == "layer_phase_mode")
                c.layer_phase_mode = phase_mode_from(value.get<std::string>());
            else if (key == "allow_depth_beyond_zmax")
                c.allow_depth_beyond_zmax = value.get<bool>();
            else throw ConfigError("unknown config key '" + key + "'");
        } catch (const nlohmann::json::exception& e) {
            throw ConfigError("config key '" + key + "': " + e.what());
        }
    }
    return c;
}

void write_manifest(const fs::path& dir, const std::vector<ManifestRecord>& records) {
    std::string buf;
    std::vector<std::string> seen;
    for (const ManifestRecord& r : records) {
        if (r.id.empty()) throw ValidationError("manifest record without id");
        for (const std::string& s : seen)
            if (s == r.id) throw ValidationError("duplicate manifest id '" + r.id + "'");
        seen.push_back(r.id);
        nlohmann::json line{{"id", r.id},
                            {"seed", r.seed},
                            {"config_hash", r.config_hash},
                            {"generator", r.generator},
                            {"files", r.files},
                            {"metrics", r.metrics.is_null() ? nlohmann::json() : r.metrics}};
        buf += line.dump();
        buf += '\n';
    }
    atomic_write(dir / "manifest.jsonl", buf);
}

std::vector<ManifestRecord> read_manifest(const fs::path& dir) {
    const fs::path path = dir / "manifest.jsonl";
    const std::string buf = read_file(path);
    std::vector<ManifestRecord> out;
    size_t start = 0;
    int lineno = 0;
    while (start < buf.size()) {
        size_t end = buf.find('\n', start);
        if (end == std::string::npos) end = buf.size();
        const std::string line = buf.substr(start, end - start);
        start = end + 1;
        ++lineno;
        if (line.empty()) continue;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
            ManifestRecord r;
            r.id = j.at("id").get<std::string>();
            r.seed = j.at("seed").get<uint64_t>();
            r.config_hash = j.at("config_hash").get<std::string>();
            r.generator = j.at("generator").get<std::string>();
            r.files = j.at("files").get<std::map<std::string, std::string>>();
            r.metrics = j.at("metrics");
            out.push_back(std::move(r));
        } catch (const nlohmann::json::exception& e) {
            throw FormatError(path.string() + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

namespace {

void warn_config_mismatch(const ManifestRecord& record, const OpticalConfig& config) {
    const std::string h = config_hash(config);
    if (!record.config_hash.empty() && record.config_hash != h)
        std::fprintf(stderr,
                     "kcgh: warning: sample '%s' was produced under config %s, "
                     "loading under %s\n",
                     record.id.c_str(), record.config_hash.c_str(), h.c_str());
}

} // namespace

std::map<std::string, std::string> save_frame(const fs::path& dir, const std::string& id,
                                              const RgbdFrame& frame) {
    frame.validate();
    std::map<std::string, std::string> files{{"rgb", id + "_rgb.kcgh"},
                                             {"depth", id + "_depth.kcgh"},
                                             {"valid", id + "_valid.kcgh"}};
    write_container(dir / files["rgb"], pack_fields(frame.intensity, ContainerKind::intensity));
    write_container(dir / files["depth"], pack_fields({frame.depth}, ContainerKind::depth));
    ScalarField valid(frame.validity.width, frame.validity.height);
    for (size_t p = 0; p < valid.size(); ++p)
        valid.data[p] = frame.validity.data[p] ? 1.0 : 0.0;
    write_container(dir / files["valid"], pack_fields({valid}, ContainerKind::intensity));
    return files;
}

RgbdFrame load_frame(const fs::path& dir, const ManifestRecord& record,
                     const OpticalConfig& config) {
    warn_config_mismatch(record, config);
    RgbdFrame frame;
    frame.config = config;
    const Container rgb = read_container(dir / record.files.at("rgb"));
    const Container dep = read_container(dir / record.files.at("depth"));
    const Container val = read_container(dir / record.files.at("valid"));
    if (rgb.kind != ContainerKind::intensity || dep.kind != ContainerKind::depth)
        throw FormatError("frame '" + record.id + "': unexpected container kinds");
    frame.intensity = unpack_fields(rgb);
    const std::vector<ScalarField> d = unpack_fields(dep);
    const std::vector<ScalarField> v = unpack_fields(val);
    if (d.size() != 1 || v.size() != 1)
        throw FormatError("frame '" + record.id + "': depth/valid must be single-channel");
    frame.depth = d[0];
    frame.validity = BinaryMask(frame.depth.width, frame.depth.height);
    for (size_t p = 0; p < frame.validity.size(); ++p)
        frame.validity.data[p] = v[0].data[p] >= 0.5 ? 1 : 0;
    frame.validate();
    return frame;
}

std::map<std::string, std::string> save_hologram(const fs::path& dir, const std::string& id,
                                                 const HologramSample& sample) {
    std::map<std::string, std::string> files{
        {"hologram", id + "_" + method_name(sample.method) + "_holo.kcgh"}};
    write_container(dir / files["hologram"], pack_hologram(sample));
    return files;
}

HologramSample load_hologram(const fs::path& dir, const ManifestRecord& record,
                             const OpticalConfig& config) {
    warn_config_mismatch(record, config);
    HologramSample sample;
    sample.config = config;
    sample.method = method_from_name(record.generator);
    sample.n_layers = config.n_layers;
    sample.seed = record.seed;
    sample.id = record.id;
    sample.channels = unpack_complex(read_container(dir / record.files.at("hologram")));
    sample.validate();
    return sample;
}

void write_metrics_csv(const fs::path& path, const std::vector<MetricsRow>& rows) {
    std::string buf = "method,channel,metric,min,avg,max\n";
    for (const MetricsRow& r : rows)
        buf += r.method + "," + r.channel + "," + r.metric + "," + format_double(r.min) +
               "," + format_double(r.avg) + "," + format_double(r.max) + "\n";
    atomic_write(path, buf);
}

nlohmann::json json_number(double v) {
    if (std::isinf(v)) return v > 0 ? nlohmann::json("inf") : nlohmann::json("-inf");
    return nlohmann::json(v);
}

nlohmann::json metrics_rows_json(const std::vector<MetricsRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const MetricsRow& r : rows)
        arr.push_back({{"method", r.method},
                       {"channel", r.channel},
                       {"metric", r.metric},
                       {"min", json_number(r.min)},
                       {"avg", json_number(r.avg)},
                       {"max", json_number(r.max)}});
    return arr;
}

std::vector<MetricsRow> aggregate_metrics(const std::vector<MetricsRecord>& records) {
    std::vector<MetricsRow> rows;
    for (Method m : {Method::sm, Method::adv, Method::ap}) {
        std::vector<const MetricsRecord*> group;
        for (const MetricsRecord& r : records)
            if (r.method == m) group.push_back(&r);
        if (group.empty()) continue;

        const size_t nc = group[0]->psnr_channel.size();
        auto add_row = [&](const std::string& channel, const std::string& metric,
                           auto getter) {
            double lo = std::numeric_limits<double>::infinity();
            double hi = -std::numeric_limits<double>::infinity();
            double sum = 0.0;
            for (const MetricsRecord* r : group) {
                const double v = getter(*r);
                lo = std::min(lo, v);
                hi = std::max(hi, v);
                sum += v;
            }
            rows.push_back({method_name(m), channel, metric, lo,
                            sum / static_cast<double>(group.size()), hi});
        };
        for (size_t c = 0; c < nc; ++c) {
            add_row(std::to_string(c), "psnr_fip",
                    [c](const MetricsRecord& r) { return r.psnr_channel[c]; });
            add_row(std::to_string(c), "ssim_fip",
                    [c](const MetricsRecord& r) { return r.ssim_channel[c]; });
        }
        add_row("mean", "psnr_fip", [](const MetricsRecord& r) { return r.psnr_mean; });
        add_row("mean", "ssim_fip", [](const MetricsRecord& r) { return r.ssim_mean; });
    }
    return rows;
}

} // namespace kcgh
