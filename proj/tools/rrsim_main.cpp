// rrsim: round-robin scheduling simulator command line.
//
//   rrsim run --algo dabrr --workload case:I --gantt
//   rrsim compare --workload jobs.csv --algos rr:q=25,sarr,dabrr
//   rrsim reproduce-paper --cases all
//   rrsim generate --n 8 --burst-min 5 --burst-max 90 --order random --arrival staggered:10 --seed 3 -o w.csv
//   rrsim export-figures -o figures.csv
//
// Exit codes: 0 success, 1 reproduction mismatch, 2 usage or input error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "rrsim/io.hpp"
#include "rrsim/policies.hpp"
#include "rrsim/reproduce.hpp"
#include "rrsim/workloads.hpp"

namespace {

using namespace rrsim;

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

Workload load_workload(const std::string& source) {
  if (source.rfind("case:", 0) == 0) {
    const auto id = parse_case_id(source.substr(5));
    if (!id) throw UsageError("unknown fixture '" + source.substr(5) + "' (expected I..VI or ILL)");
    return paper_case(*id);
  }
  std::ifstream in(source, std::ios::binary);
  if (!in) throw UsageError("cannot open workload file '" + source + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_workload(buf.str(), format_for_path(source), source);
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << bytes;
}

int cmd_run(const std::string& algo, const std::string& source, const std::string& format, bool gantt) {
  const auto workload = load_workload(source);
  const auto trace = simulate(workload, make_policy(parse_policy_spec(algo)));
  const auto metrics = compute_metrics(trace, workload);
  if (format == "json") {
    std::cout << metrics_to_json(metrics, trace);
  } else if (format == "csv") {
    std::cout << metrics_to_csv(metrics, workload);
  } else {
    std::cout << metrics_to_text(metrics, workload);
  }
  if (gantt) std::cout << "\n" << render_gantt(trace);
  return 0;
}

int cmd_compare(const std::string& source, const std::string& algos, const std::string& baseline_spec) {
  const auto workload = load_workload(source);
  const auto baseline = parse_policy_spec(baseline_spec);
  std::vector<PolicyDescriptor> descriptors{baseline};
  for (const auto& spec : split(algos, ',')) {
    auto d = parse_policy_spec(spec);
    if (std::find(descriptors.begin(), descriptors.end(), d) == descriptors.end()) descriptors.push_back(d);
  }

  std::vector<AlgorithmRuns> runs;
  for (const auto& d : descriptors) {
    const auto trace = simulate(workload, make_policy(d));
    runs.push_back({d, {{workload.label(), compute_metrics(trace, workload)}}});
  }
  const auto report = compare_runs(workload.label(), runs, baseline);

  std::printf("%-16s %-18s %4s %10s %12s %10s %10s\n", "algorithm", "quanta", "cs", "avg_wait", "avg_tat",
              "wait_gain%", "tat_gain%");
  for (const auto& row : report.rows) {
    const auto& m = row.cases.front().metrics;
    std::string quanta;
    for (auto q : m.quanta()) quanta += (quanta.empty() ? "" : ",") + std::to_string(q);
    std::printf("%-16s %-18s %4lld %10s %12s %10s %10s\n", row.algorithm.to_spec().c_str(), quanta.c_str(),
                static_cast<long long>(m.context_switches), to_fixed(m.avg_waiting, 1).c_str(),
                to_fixed(m.avg_turnaround, 1).c_str(), to_fixed(row.waiting_gain_pct, 2).c_str(),
                to_fixed(row.turnaround_gain_pct, 2).c_str());
  }
  return 0;
}

int cmd_reproduce(const std::string& cases_arg, const std::string& format, bool verbose) {
  std::vector<CaseId> cases;
  if (cases_arg == "all") {
    cases.assign(kPaperCases.begin(), kPaperCases.end());
  } else {
    for (const auto& label : split(cases_arg, ',')) {
      const auto id = parse_case_id(label);
      if (!id || *id == CaseId::Illustration) throw UsageError("unknown case '" + label + "' (expected I..VI)");
      cases.push_back(*id);
    }
  }
  const auto report = reproduce_paper(cases);
  std::cout << (format == "json" ? report_to_json(report) : report_to_text(report, verbose));
  return report.exit_status() == 0 ? 0 : kExitMismatch;
}

int cmd_generate(std::size_t n, Millis burst_min, Millis burst_max, const std::string& order,
                 const std::string& arrival, std::uint64_t seed, const std::string& output) {
  GeneratorSpec spec;
  spec.n = n;
  spec.burst_min = burst_min;
  spec.burst_max = burst_max;
  spec.seed = seed;
  if (order == "asc") {
    spec.order = BurstOrder::Ascending;
  } else if (order == "desc") {
    spec.order = BurstOrder::Descending;
  } else if (order == "random") {
    spec.order = BurstOrder::Random;
  } else {
    throw UsageError("--order must be asc, desc or random");
  }
  if (arrival.rfind("staggered:", 0) == 0) {
    try {
      spec.max_gap = std::stoll(arrival.substr(10));
    } catch (const std::exception&) {
      throw UsageError("--arrival staggered:G needs an integer gap");
    }
  } else if (arrival != "zero") {
    throw UsageError("--arrival must be zero or staggered:G");
  }
  try {
    write_file(output, serialize_workload(generate_workload(spec), format_for_path(output)));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return 0;
}

int cmd_export_figures(const std::string& output) {
  const auto reports = paper_comparisons();
  write_file(output, export_figure_data(reports));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Round-robin scheduling simulator with dynamic time quanta"};
  app.require_subcommand(1);

  std::string algo, workload_src, format = "text";
  bool gantt = false;
  auto* run = app.add_subcommand("run", "Simulate one policy on a workload");
  run->add_option("--algo", algo, "Policy spec, e.g. rr:q=25, dabrr, mrr:floor=25")->required();
  run->add_option("--workload", workload_src, "Workload file (.csv/.json) or case:ID")->required();
  run->add_option("--format", format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
  run->add_flag("--gantt", gantt, "Append an ASCII Gantt chart");

  std::string algos, baseline = "rr:q=25";
  auto* compare = app.add_subcommand("compare", "Compare several policies on one workload");
  compare->add_option("--workload", workload_src, "Workload file (.csv/.json) or case:ID")->required();
  compare->add_option("--algos", algos, "Comma-separated policy specs")->required();
  compare->add_option("--baseline", baseline, "Baseline policy for percentage gains");

  std::string cases = "all", report_format = "text";
  bool verbose = false;
  auto* reproduce = app.add_subcommand("reproduce-paper", "Check every published table cell");
  reproduce->add_option("--cases", cases, "Comma-separated case ids (I..VI) or all");
  reproduce->add_option("--format", report_format, "text or json")->check(CLI::IsMember({"text", "json"}));
  reproduce->add_flag("--verbose", verbose, "List matching cells too");

  std::size_t n = 5;
  Millis burst_min = 1, burst_max = 100;
  std::string order = "random", arrival = "zero", output;
  std::uint64_t seed = 0;
  auto* generate = app.add_subcommand("generate", "Write a seeded random workload");
  generate->add_option("--n", n, "Number of processes")->required();
  generate->add_option("--burst-min", burst_min, "Smallest burst (ms)")->required();
  generate->add_option("--burst-max", burst_max, "Largest burst (ms)")->required();
  generate->add_option("--order", order, "asc, desc or random");
  generate->add_option("--arrival", arrival, "zero or staggered:G");
  generate->add_option("--seed", seed, "Generator seed")->required();
  generate->add_option("-o,--output", output, "Output file (.json for JSON, CSV otherwise)")->required();

  std::string figures_out;
  auto* figures = app.add_subcommand("export-figures", "Write chart data as CSV");
  figures->add_option("-o,--output", figures_out, "Output CSV file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*run) return cmd_run(algo, workload_src, format, gantt);
    if (*compare) return cmd_compare(workload_src, algos, baseline);
    if (*reproduce) return cmd_reproduce(cases, report_format, verbose);
    if (*generate) return cmd_generate(n, burst_min, burst_max, order, arrival, seed, output);
    if (*figures) return cmd_export_figures(figures_out);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const WorkloadError& e) {
    std::cerr << "invalid workload: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PolicySpecError& e) {
    std::cerr << "invalid policy: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
