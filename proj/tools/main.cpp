#include <cstdlib>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

int default_jobs() {
    if (const char* env = std::getenv("SENSORFX_JOBS")) {
        const int jobs = std::atoi(env);
        if (jobs >= 1) {
            return jobs;
        }
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

} // namespace

int main(int argc, char** argv) {
    using namespace sensorfx;

    CLI::App app{"Camera sensor effect augmentation for image datasets"};
    app.require_subcommand(1);

    std::string input, output, params;
    auto* augment = app.add_subcommand("augment", "Augment one image with explicit params");
    augment->add_option("--input", input, "Source image (PNG or JPEG)")->required();
    augment->add_option("--output", output, "Output PNG")->required();
    augment->add_option("--params", params, "Params JSON or a manifest line")->required();

    JobSpec spec;
    spec.jobs = default_jobs();
    std::string config, labels, manifest;
    auto* batch = app.add_subcommand("batch", "Augment every image under a directory");
    batch->add_option("--input-dir", spec.input_dir, "Dataset root")->required();
    batch->add_option("--output-dir", spec.output_dir, "Output root")->required();
    batch->add_option("--config", config, "Parameter ranges JSON (built-in defaults if omitted)");
    batch->add_option("--seed", spec.global_seed, "Global seed")->capture_default_str();
    batch->add_option("--augs-per-image", spec.augs_per_image, "Augmentations per image")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    batch->add_option("--labels-dir", labels, "Label root; <dir>/<stem>.txt is copied per output");
    batch->add_option("--manifest", manifest, "Manifest path (default <output-dir>/manifest.jsonl)");
    batch->add_option("--jobs", spec.jobs, "Worker threads (default $SENSORFX_JOBS or all cores)")
        ->check(CLI::PositiveNumber);

    std::uint64_t sample_seed = 0;
    std::int64_t count = 1;
    std::string sample_config;
    auto* sample = app.add_subcommand("sample", "Print parameter draws as NDJSON");
    sample->add_option("--config", sample_config, "Parameter ranges JSON");
    sample->add_option("--seed", sample_seed, "Seed")->capture_default_str();
    sample->add_option("--count", count, "Number of draws")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    if (*augment) {
        return cli::cmd_augment(input, output, params, std::cout, std::cerr);
    }
    if (*batch) {
        if (!config.empty()) {
            spec.config_path = config;
        }
        if (!labels.empty()) {
            spec.labels_dir = labels;
        }
        if (!manifest.empty()) {
            spec.manifest_path = manifest;
        }
        return cli::cmd_batch(spec, std::cout, std::cerr);
    }
    std::optional<sensorfx::fs::path> cfg;
    if (!sample_config.empty()) {
        cfg = sample_config;
    }
    return cli::cmd_sample(cfg, sample_seed, count, std::cout, std::cerr);
}
