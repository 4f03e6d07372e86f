#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "kcgh/quality.hpp"
#include "kcgh/sample.hpp"

namespace kcgh {

// On-disk sample container. Byte layout, all integers little-endian:
//   offset 0   magic "KCGH"
//   offset 4   u32 version (currently 1)
//   offset 8   u32 width
//   offset 12  u32 height
//   offset 16  u32 channels
//   offset 20  u8  kind
//   offset 21  payload: channels planar row-major float32 planes
// A complex_field container stores two planes per channel (amplitude, then
// phase normalized to [0,1] via (phi + pi) / (2*pi)).
enum class ContainerKind : uint8_t {
    intensity = 0,
    depth = 1,
    amplitude = 2,
    phase = 3,
    complex_field = 4,
};

struct Container {
    uint32_t width = 0;
    uint32_t height = 0;
    uint32_t channels = 0;
    ContainerKind kind = ContainerKind::intensity;
    std::vector<float> payload;
};

// Writers validate before touching the filesystem (non-finite samples and
// out-of-range values for the kind are rejected) and write atomically via a
// temp file + rename, so a failed write never leaves a partial file behind.
void write_container(const std::filesystem::path& path, const Container& c);
Container read_container(const std::filesystem::path& path);

Container pack_fields(const std::vector<ScalarField>& fields, ContainerKind kind);
std::vector<ScalarField> unpack_fields(const Container& c);
Container pack_hologram(const HologramSample& sample);
std::vector<ComplexField> unpack_complex(const Container& c);

// Grayscale PFM ("Pf"): header lines magic, "width height", scale; negative
// scale marks little-endian payload. Rows are stored bottom-to-top. Color
// ("PF") files are not produced here and are rejected on read.
void write_pfm(const std::filesystem::path& path, const ScalarField& field);
ScalarField read_pfm(const std::filesystem::path& path);

// 16-bit grayscale PNG of a wrapped-phase image: (-pi, pi] maps linearly
// onto [0, 65535].
void write_png16(const std::filesystem::path& path, const ScalarField& phase);

uint64_t fnv1a(const void* data, size_t n);

// Stable 16-hex-digit digest of every config field (bit patterns, not
// decimal round trips), used to tie manifests to the producing config.
std::string config_hash(const OpticalConfig& config);

nlohmann::json config_to_json(const OpticalConfig& config);
OpticalConfig config_from_json(const nlohmann::json& j); // strict: unknown keys throw

// One dataset entry. Serialized as one JSON object per line in
// <dir>/manifest.jsonl with alphabetically ordered keys:
//   {"config_hash":h, "files":{role:relpath}, "generator":g, "id":id,
//    "metrics":m-or-null, "seed":s}
// Nothing time-dependent is recorded; reruns produce identical bytes.
struct ManifestRecord {
    std::string id;
    uint64_t seed = 0;
    std::string config_hash;
    std::string generator;
    std::map<std::string, std::string> files;
    nlohmann::json metrics; // null when absent
};

void write_manifest(const std::filesystem::path& dir,
                    const std::vector<ManifestRecord>& records);
std::vector<ManifestRecord> read_manifest(const std::filesystem::path& dir);

// Frame and hologram composite IO. Frames become three containers
// ({id}_rgb, {id}_depth, {id}_valid); holograms one complex container.
// Loaders cross-check shapes against the supplied config and warn on
// stderr when the record's config hash disagrees with it.
std::map<std::string, std::string> save_frame(const std::filesystem::path& dir,
                                              const std::string& id,
                                              const RgbdFrame& frame);
RgbdFrame load_frame(const std::filesystem::path& dir, const ManifestRecord& record,
                     const OpticalConfig& config);
std::map<std::string, std::string> save_hologram(const std::filesystem::path& dir,
                                                 const std::string& id,
                                                 const HologramSample& sample);
HologramSample load_hologram(const std::filesystem::path& dir,
                             const ManifestRecord& record, const OpticalConfig& config);

// Aggregate metric table. CSV schema, one header line then rows:
//   method,channel,metric,min,avg,max
// channel is a 0-based index or the word "mean"; metric is psnr_fip or
// ssim_fip; numbers use shortest round-trip formatting, infinities print
// as "inf". The JSON mirror is an array of objects with the same fields.
struct MetricsRow {
    std::string method;
    std::string channel;
    std::string metric;
    double min = 0.0;
    double avg = 0.0;
    double max = 0.0;
};

void write_metrics_csv(const std::filesystem::path& path,
                       const std::vector<MetricsRow>& rows);
nlohmann::json metrics_rows_json(const std::vector<MetricsRow>& rows);

// JSON-safe number: infinities become the strings "inf" / "-inf".
nlohmann::json json_number(double v);

// Aggregate per-sample records into min/avg/max rows, one per
// (method, channel-or-mean, metric).
std::vector<MetricsRow> aggregate_metrics(const std::vector<MetricsRecord>& records);

} // namespace kcgh
