#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "sensorfx/batch.hpp"

namespace sensorfx::cli {

enum ExitCode : int {
    kOk = 0,
    /// Processing failed (write errors, failed batch items).
    kFailure = 1,
    /// Bad input: missing files, invalid params or config.
    kBadInput = 2,
};

/// Augments one image with the params in `params_file`, which holds either a
/// params object or a whole manifest record. Prints the applied params.
int cmd_augment(const fs::path& input, const fs::path& output, const fs::path& params_file,
                std::ostream& out, std::ostream& err);

int cmd_batch(const JobSpec& spec, std::ostream& out, std::ostream& err);

/// Prints `count` parameter draws as NDJSON. Draw i uses
/// derive_seed(seed, std::to_string(i)).
int cmd_sample(const std::optional<fs::path>& config, std::uint64_t seed, std::int64_t count,
               std::ostream& out, std::ostream& err);

} // namespace sensorfx::cli
