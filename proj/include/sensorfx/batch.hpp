#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sensorfx/dataset_io.hpp"
#include "sensorfx/sampling.hpp"

namespace sensorfx {

struct JobSpec {
    fs::path input_dir;
    fs::path output_dir;
    /// Built-in default ranges when unset.
    std::optional<fs::path> config_path;
    std::uint64_t global_seed = 0;
    int augs_per_image = 1;
    std::optional<fs::path> labels_dir;
    int jobs = 1;
    /// Defaults to <output_dir>/manifest.jsonl.
    std::optional<fs::path> manifest_path;
};

struct BatchSummary {
    std::size_t items = 0;
    std::size_t produced = 0;
    std::size_t failed = 0;
    /// One message per failed (item, aug_index), in stable_key order.
    std::vector<std::string> errors;
    /// Records of every produced image, in stable_key then aug_index order.
    std::vector<AugmentationRecord> records;
};

/// Throws InvalidArgument for augs_per_image < 1, jobs < 1 or identical
/// input and output directories.
void validate(const JobSpec& spec);

/// `<dir>/<stem>_aug<k>.png`, relative to the output root.
fs::path output_image_path(const DatasetItem& item, int aug_index);
fs::path output_label_path(const DatasetItem& item, int aug_index);

/// Augments every enumerated image augs_per_image times. Item k of image with
/// key K uses seed derive_seed(global_seed, "K#k"). Failures are counted and
/// reported but do not stop the batch. The manifest is written once, in
/// stable_key order, so output bytes do not depend on `jobs`.
BatchSummary run_batch(const JobSpec& spec, const ParamRanges& ranges, std::ostream& log);

} // namespace sensorfx
