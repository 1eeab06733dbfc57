#pragma once

// Batch jobs: one JobConfig describes a task, its ring, generators and
// parameters. run_job renders the task's report files.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace stabdiv {

enum class ExitCode : int { ok = 0, usage = 1, parse = 2, assertion = 3 };

struct JobConfig {
  std::string task;  // divide | groebner | stability-scan | rescale | comm-report | estimate41 | reduce5 | hilbert
  std::vector<std::string> variables;
  int channels = 1;
  std::string order;  // empty: graded-lex in declaration order
  std::vector<std::string> generators;

  std::string dividend;                  // divide
  std::string strategy = "CLO_DEFAULT";  // divide
  int degree_min = 0;                    // stability-scan, hilbert
  int degree_max = 10;
  int degree_cap = 12;                   // comm-report, estimate41, reduce5
  int i = 1;                             // comm-report (1-based shift index)
  int j = 1;                             // comm-report, estimate41
  double schatten_p = 2.0;
  double tolerance = 1e-9;
  std::optional<int> window_start;       // hilbert
  std::string output;                    // directory; empty: stdout

  friend bool operator==(const JobConfig&, const JobConfig&) = default;
};

void to_json(nlohmann::json& j, const JobConfig& c);
void from_json(const nlohmann::json& j, JobConfig& c);

const std::vector<std::string>& known_tasks();

/// Throws ValidationError for unknown tasks or inconsistent fields.
void validate(const JobConfig& config);

/// Report files keyed by file name, e.g. {"trace.jsonl", ...}. Deterministic
/// for identical configs. Library errors propagate.
std::map<std::string, std::string> render_job(const JobConfig& config);

struct JobOutcome {
  ExitCode code = ExitCode::ok;
  std::string message;
  std::map<std::string, std::string> files;
};

/// Validates, renders and classifies errors into exit codes; writes the files
/// under config.output when it is set.
JobOutcome run_job(const JobConfig& config);

}  // namespace stabdiv
