// Batch pipeline behind the CLI: runs a command against a parsed spec and
// produces a canonical JSON report (sorted keys, rationals as "p/q"
// strings) or a human-readable text rendering of it.

#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "torimon/monoid_spec.hpp"

namespace torimon {

struct RunFlags {
  std::string format = "json";  // json | text
  std::optional<int> ray;
  std::optional<long> bound;
  int samples = 50;
  std::uint64_t seed = 1;
  std::optional<std::string> x_csv;
  std::optional<std::string> y_csv;
  std::optional<std::string> grid_csv;
  std::optional<std::int64_t> budget_override;  // e.g. from TORIMON_BUDGET
};

/// command is one of: classify, idempotents, center, zero, roots,
/// multiply, verify, report.
nlohmann::json run(const std::string& command, const MonoidSpec& spec, const RunFlags& flags);

std::string emit_report(const nlohmann::json& report, const std::string& format);

}  // namespace torimon
