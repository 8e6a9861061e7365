#pragma once

#include <string>
#include <vector>

#include "relcone/jobs/payload.hpp"

namespace relcone::jobs {

inline constexpr const char* job_schema = "relcone-job/1";
inline constexpr const char* report_schema = "relcone-report/1";

enum ExitCode : int {
    exit_ok = 0,
    exit_usage = 1, // unreadable file, malformed JSON, bad flags
    exit_validation = 2,
    exit_computation = 3,
};

const std::vector<std::string>& commands();

struct Report {
    json document;
    int exit_code = exit_ok;
};

/// Runs one job document. Never throws for bad input: errors become reports.
Report run(const json& job);

/// Job for a built-in name: homology of a space or relative homology of a map.
/// Throws ValidationError for an unknown name.
json builtin_job(const std::string& name);

/// "sha256:" + hex digest of the canonical serialization of the job.
std::string input_digest(const json& job);

/// Human-readable rendering, derived only from the report document.
std::string render_text(const json& report);

/// Byte-stable JSON serialization (sorted keys, two-space indent, trailing newline).
std::string render_json(const json& report);

} // namespace relcone::jobs
