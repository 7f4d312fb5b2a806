#include "sensorfx/batch.hpp"

#include <ostream>
#include <set>

#include "sensorfx/error.hpp"

namespace sensorfx {

namespace {

struct TaskResult {
    std::optional<AugmentationRecord> record;
    std::string error;
};

fs::path with_suffix(const DatasetItem& item, int aug_index, const char* extension) {
    fs::path name = item.image_path.stem();
    name += "_aug" + std::to_string(aug_index) + extension;
    return item.image_path.parent_path() / name;
}

TaskResult run_task(const JobSpec& spec, const ParamRanges& ranges, const DatasetItem& item,
                    int aug_index) {
    TaskResult result;
    try {
        const std::uint64_t seed =
            derive_seed({spec.global_seed, item_key(item.stable_key, aug_index)});
        const AugmentationParams params = sample_params(ranges, seed);
        const ImageBuffer source = load_image(spec.input_dir / item.image_path);
        const fs::path out_rel = output_image_path(item, aug_index);
        save_image(augment(source, params), spec.output_dir / out_rel);

        if (spec.labels_dir) {
            if (!item.label_path) {
                throw IoError(IoErrorKind::NotFound, "no label file for " + item.stable_key);
            }
            write_labels(read_labels(*spec.labels_dir / *item.label_path),
                         spec.output_dir / output_label_path(item, aug_index));
        }
        result.record = AugmentationRecord{item.stable_key, out_rel.generic_string(), aug_index,
                                           seed, params};
    } catch (const std::exception& e) {
        result.error = item.stable_key + "#" + std::to_string(aug_index) + ": " + e.what();
    }
    return result;
}

} // namespace

void validate(const JobSpec& spec) {
    if (spec.augs_per_image < 1) {
        throw InvalidArgument("augs_per_image must be >= 1");
    }
    if (spec.jobs < 1) {
        throw InvalidArgument("jobs must be >= 1");
    }
    if (fs::weakly_canonical(spec.input_dir) == fs::weakly_canonical(spec.output_dir)) {
        throw InvalidArgument("output directory must differ from input directory");
    }
}

fs::path output_image_path(const DatasetItem& item, int aug_index) {
    return with_suffix(item, aug_index, ".png");
}

fs::path output_label_path(const DatasetItem& item, int aug_index) {
    return with_suffix(item, aug_index, ".txt");
}

BatchSummary run_batch(const JobSpec& spec, const ParamRanges& ranges, std::ostream& log) {
    validate(spec);
    validate(ranges);

    const std::vector<DatasetItem> items =
        enumerate_dataset(spec.input_dir, kDefaultImagePatterns, spec.labels_dir);

    std::set<fs::path> dirs{spec.output_dir};
    for (const DatasetItem& item : items) {
        dirs.insert(spec.output_dir / item.image_path.parent_path());
    }
    for (const fs::path& dir : dirs) {
        std::error_code ec;
        fs::create_directories(dir, ec);
        if (ec) {
            throw IoError(IoErrorKind::WriteFailure,
                          "cannot create " + dir.string() + ": " + ec.message());
        }
    }

    const auto augs = static_cast<std::size_t>(spec.augs_per_image);
    const auto task_count = static_cast<std::ptrdiff_t>(items.size() * augs);
    std::vector<TaskResult> results(static_cast<std::size_t>(task_count));

#pragma omp parallel for num_threads(spec.jobs) schedule(dynamic, 1)
    for (std::ptrdiff_t t = 0; t < task_count; ++t) {
        const auto task = static_cast<std::size_t>(t);
        results[task] =
            run_task(spec, ranges, items[task / augs], static_cast<int>(task % augs));
    }

    BatchSummary summary;
    summary.items = items.size();
    for (TaskResult& r : results) {
        if (r.record) {
            summary.records.push_back(std::move(*r.record));
        } else {
            log << "error: " << r.error << '\n';
            summary.errors.push_back(std::move(r.error));
        }
    }
    summary.produced = summary.records.size();
    summary.failed = summary.errors.size();

    write_manifest(summary.records,
                   spec.manifest_path.value_or(spec.output_dir / "manifest.jsonl"));
    return summary;
}

} // namespace sensorfx
