#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "rrsim/metrics.hpp"
#include "rrsim/model.hpp"

namespace rrsim {

enum class WorkloadFormat { Csv, Json };

inline constexpr std::string_view kCsvHeader = "pid,arrival_ms,burst_ms";

class ParseError : public std::runtime_error {
 public:
  /// `line` is 1-based for CSV; `offset` is a byte offset for JSON.
  ParseError(const std::string& what, std::size_t line, std::size_t offset)
      : std::runtime_error(what), line_(line), offset_(offset) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t line_;
  std::size_t offset_;
};

/// CSV: header `pid,arrival_ms,burst_ms` then one record per line, LF or
/// CRLF. CSV carries no label, so the caller supplies one.
/// JSON: {"label": ..., "processes": [{"pid", "arrival_ms", "burst_ms"}, ...]}.
/// Throws ParseError or WorkloadError.
Workload parse_workload(std::string_view bytes, WorkloadFormat format, std::string csv_label = {});

/// Canonical form: LF line endings, trailing newline, no padding.
std::string serialize_workload(const Workload& workload, WorkloadFormat format);

/// Picks JSON for a ".json" suffix, CSV otherwise.
WorkloadFormat format_for_path(std::string_view path);

/// One banner per cycle with its quantum, a row of pid cells and a row of
/// cumulative end times below them. Idle gaps render as `--`. Rows wrap at
/// `width` columns (minimum 40).
std::string render_gantt(const ExecutionTrace& trace, std::size_t width = 80);

/// Rows `figure,algorithm,metric,case_group,value` for the waiting/turnaround
/// charts (per group) and the percentage-gain charts (grand totals). Expects
/// reports labelled "zero", "nonzero" and "grand".
std::string export_figure_data(std::span<const ComparisonReport> reports);

std::string metrics_to_json(const RunMetrics& metrics, const ExecutionTrace& trace);
std::string metrics_to_csv(const RunMetrics& metrics, const Workload& workload);
std::string metrics_to_text(const RunMetrics& metrics, const Workload& workload);

}  // namespace rrsim
