#include "commands.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "sensorfx/error.hpp"

namespace sensorfx::cli {

namespace {

int exit_code_for(const IoError& e) {
    return e.kind() == IoErrorKind::WriteFailure ? kFailure : kBadInput;
}

AugmentationParams read_params_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError(IoErrorKind::NotFound, "params file not found: " + path.string());
    }
    std::ostringstream text;
    text << in.rdbuf();
    const Json j = parse_json(text.str(), "params file " + path.string());
    if (j.is_object() && j.contains("params") && j.contains("source")) {
        return record_from_json(j).params;
    }
    return params_from_json(j);
}

ParamRanges ranges_or_default(const std::optional<fs::path>& config) {
    return config ? load_ranges(config->string()) : ParamRanges{};
}

} // namespace

int cmd_augment(const fs::path& input, const fs::path& output, const fs::path& params_file,
                std::ostream& out, std::ostream& err) {
    try {
        const AugmentationParams params = read_params_file(params_file);
        const ImageBuffer image = load_image(input);
        save_image(augment(image, params), output);
        out << params_to_json(params).dump() << '\n';
        return kOk;
    } catch (const IoError& e) {
        err << "sensorfx augment: " << e.what() << '\n';
        return exit_code_for(e);
    } catch (const Error& e) {
        err << "sensorfx augment: " << e.what() << '\n';
        return kBadInput;
    }
}

int cmd_batch(const JobSpec& spec, std::ostream& out, std::ostream& err) {
    BatchSummary summary;
    try {
        summary = run_batch(spec, ranges_or_default(spec.config_path), err);
    } catch (const IoError& e) {
        err << "sensorfx batch: " << e.what() << '\n';
        return exit_code_for(e);
    } catch (const Error& e) {
        err << "sensorfx batch: " << e.what() << '\n';
        return kBadInput;
    }
    out << "images: " << summary.items << ", produced: " << summary.produced
        << ", failed: " << summary.failed << '\n';
    return summary.failed == 0 ? kOk : kFailure;
}

int cmd_sample(const std::optional<fs::path>& config, std::uint64_t seed, std::int64_t count,
               std::ostream& out, std::ostream& err) {
    if (count < 0) {
        err << "sensorfx sample: count must be >= 0\n";
        return kBadInput;
    }
    try {
        const ParamRanges ranges = ranges_or_default(config);
        for (std::int64_t i = 0; i < count; ++i) {
            const std::uint64_t draw_seed = derive_seed({seed, std::to_string(i)});
            out << params_to_json(sample_params(ranges, draw_seed)).dump() << '\n';
        }
        return kOk;
    } catch (const Error& e) {
        err << "sensorfx sample: " << e.what() << '\n';
        return kBadInput;
    }
}

} // namespace sensorfx::cli
