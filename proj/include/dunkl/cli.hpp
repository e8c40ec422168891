#pragma once

#include "dunkl/grid.hpp"
#include "dunkl/quadrature.hpp"

#include <json.hpp>

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dunkl::cli {

/// A parsed run configuration. Suite parameters stay as JSON and are
/// validated by the suite itself before any computation.
struct RunConfig {
    std::string suite;
    double alpha = 0.0;
    SupGrid grid;
    QuadSpec quad;
    bool refine = true;
    int jobs = 1;
    std::string log_level = "warn";
    std::optional<std::string> output_path;
    std::string output_format = "json";
    nlohmann::json suite_params = nlohmann::json::object();
    /// key -> values; the runs are the cartesian product in key order.
    std::map<std::string, std::vector<nlohmann::json>> sweep;
};

/// Parses and validates a flat JSON config. Throws DomainError naming the
/// offending key.
RunConfig parse_config(const nlohmann::json& doc);
RunConfig load_config(const std::string& path);

/// The suite parameter blocks of a sweep, one per run.
std::vector<nlohmann::json> expand_sweep(const RunConfig& config);

/// Writes `text` to `path` via a temporary file and rename.
void write_atomic(const std::string& path, const std::string& text);

/// Entry point. Returns 0 on success or pass, 2 on a failed suite or a
/// condition that does not hold, 1 on usage or domain errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dunkl::cli
