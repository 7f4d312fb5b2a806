#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "sensorfx/effects.hpp"
#include "sensorfx/params_json.hpp"

namespace sensorfx {

namespace fs = std::filesystem;

// --- Images ---------------------------------------------------------------

/// Decodes an 8-bit PNG (gray, RGB or palette) or baseline JPEG into [0, 255]
/// floats. Gray is replicated into all three planes. Throws IoError with
/// kind NotFound, UnsupportedFormat (16-bit, alpha, CMYK, unknown signature)
/// or DecodeFailure.
ImageBuffer load_image(const fs::path& path);

/// Writes an 8-bit RGB PNG, rounding half away from zero and clamping to [0, 255].
void save_image(const ImageBuffer& image, const fs::path& path);

std::uint8_t quantize(float sample) noexcept;

/// Rounds every sample to its stored 8-bit value, as save_image would.
ImageBuffer quantized(const ImageBuffer& image);

// --- Labels ---------------------------------------------------------------

/// Raw annotation bytes, copied verbatim.
struct LabelSet {
    std::string bytes;

    friend bool operator==(const LabelSet&, const LabelSet&) = default;
};

LabelSet read_labels(const fs::path& path);
void write_labels(const LabelSet& labels, const fs::path& path);

// --- Enumeration ----------------------------------------------------------

struct DatasetItem {
    /// Relative to the dataset root.
    fs::path image_path;
    /// Relative to the labels root, when one was given and a label exists.
    std::optional<fs::path> label_path;
    /// Relative image path with '/' separators; the sort and seeding key.
    std::string stable_key;
};

inline const std::vector<std::string> kDefaultImagePatterns{
    "*.png", "*.PNG", "*.jpg", "*.JPG", "*.jpeg", "*.JPEG",
};

/// Recursively lists regular files under `root` whose file name matches one of
/// the glob `patterns`, ordered by byte-wise comparison of stable_key. When
/// `labels_root` is set, each item's label is `<labels_root>/<dir>/<stem>.txt`
/// if that file exists.
std::vector<DatasetItem> enumerate_dataset(const fs::path& root,
                                           const std::vector<std::string>& patterns =
                                               kDefaultImagePatterns,
                                           const std::optional<fs::path>& labels_root = {});

// --- Manifest -------------------------------------------------------------

struct AugmentationRecord {
    /// Source image, relative to the input root (the item's stable_key).
    std::string source;
    /// Output image, relative to the output root, '/' separated.
    std::string output;
    int aug_index = 0;
    std::uint64_t seed = 0;
    AugmentationParams params;

    friend bool operator==(const AugmentationRecord&, const AugmentationRecord&) = default;
};

/// Field order: source, output, aug_index, seed, params.
Json record_to_json(const AugmentationRecord& r);
AugmentationRecord record_from_json(const Json& j);

/// Newline-delimited JSON, one record per line, in the given order.
void write_manifest(const std::vector<AugmentationRecord>& records, const fs::path& path);
std::vector<AugmentationRecord> read_manifest(const fs::path& path);

} // namespace sensorfx
