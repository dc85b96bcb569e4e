#include <algorithm>
#include <stdexcept>

#include "rrsim/io.hpp"

namespace rrsim {

namespace {

const ComparisonReport& report_for(std::span<const ComparisonReport> reports, std::string_view label) {
  auto it = std::find_if(reports.begin(), reports.end(), [&](const ComparisonReport& r) { return r.group_label == label; });
  if (it == reports.end()) throw std::invalid_argument("export_figure_data: missing '" + std::string(label) + "' report");
  return *it;
}

void row(std::string& out, std::string_view figure, const PolicyDescriptor& algorithm, std::string_view metric,
         std::string_view group, const Rational& value) {
  out += std::string(figure) + "," + std::string(display_name(algorithm.name)) + "," + std::string(metric) + "," +
         std::string(group) + "," + to_fixed(value, 2) + "\n";
}

/// Per-case averages plus the group total for one metric.
void group_figure(std::string& out, std::string_view figure, const ComparisonReport& report, bool waiting) {
  const std::string_view avg_metric = waiting ? "waiting_avg" : "tat_avg";
  const std::string_view total_metric = waiting ? "waiting_total" : "tat_total";
  for (const auto& r : report.rows) {
    for (const auto& c : r.cases) {
      row(out, figure, r.algorithm, avg_metric, c.case_label, waiting ? c.metrics.avg_waiting : c.metrics.avg_turnaround);
    }
    row(out, figure, r.algorithm, total_metric, report.group_label, waiting ? r.waiting_total : r.turnaround_total);
  }
}

}  // namespace

std::string export_figure_data(std::span<const ComparisonReport> reports) {
  const auto& zero = report_for(reports, "zero");
  const auto& nonzero = report_for(reports, "nonzero");
  const auto& grand = report_for(reports, "grand");

  std::string out = "figure,algorithm,metric,case_group,value\n";
  group_figure(out, "fig2", zero, true);
  group_figure(out, "fig3", zero, false);
  group_figure(out, "fig4", nonzero, true);
  group_figure(out, "fig5", nonzero, false);
  for (const auto& r : grand.rows) row(out, "fig6", r.algorithm, "waiting_gain_pct", "grand", r.waiting_gain_pct);
  for (const auto& r : grand.rows) row(out, "fig7", r.algorithm, "tat_gain_pct", "grand", r.turnaround_gain_pct);
  return out;
}

}  // namespace rrsim
