#pragma once

// Text formats: conformation files (degrees), XYZ export, run traces, batch
// results and JSON configuration.

#include "abfold/benchmark.hpp"
#include "abfold/model.hpp"
#include "abfold/optimizer.hpp"
#include "abfold/stats.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace abfold {

/// Reads angles in degrees separated by commas and/or whitespace. Braces
/// (also the escaped "\{" "\}" of typeset tables) are ignored, as are lines
/// starting with '#'. Values are converted to radians and wrapped. Throws
/// ParseError on a malformed number or when the count is not
/// `expected_dimension`.
Conformation parse_conformation(std::string_view text, std::size_t expected_dimension);
Conformation parse_conformation(std::string_view text, const AbSequence& seq);

/// One line of comma-separated degrees with ten decimals.
std::string serialize_conformation(const Conformation& conf);

/// L + 2 lines: count, comment, then "C x y z" for A and "N x y z" for B.
std::string export_xyz(const AbSequence& seq, const PositionChain& chain,
                       std::optional<double> score = std::nullopt);

inline constexpr std::string_view kTraceHeader = "nse,phase,best_fitness,best_score";
inline constexpr std::string_view kResultsHeader =
    "label,seed,score,nse,time_s,success,nse_phase1,nse_phase2";

void write_trace(std::span<const TraceEvent> trace, std::ostream& out);

/// With `timing` off every time_s field is written as 0 so that reruns are
/// byte-identical.
void write_results_csv(std::span<const RunRecord> records, std::ostream& out, bool timing = true);

std::string aggregate_to_json(const AggregateStats& stats, int indent = 2);
std::string results_to_json(std::span<const RunRecord> records, const AggregateStats& stats,
                            bool timing = true, int indent = 2);

/// Overlays the fields present in a JSON object onto `cfg`. Keys mirror
/// OptimizerConfig: np, p_b, l_b, c, h_c, lambda, seed, base ("population" or
/// "global"), and target_score, nse_limit, time_limit for the stopping
/// condition. Unknown keys are rejected with ConfigError.
void apply_config_json(std::string_view json_text, OptimizerConfig& cfg);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

} // namespace abfold
