#include "rrsim/io.hpp"

#include <charconv>
#include <json.hpp>
#include <sstream>

namespace rrsim {

namespace {

using nlohmann::json;

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

Millis parse_int(std::string_view field, std::string_view name, std::size_t line) {
  Millis value = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
    throw ParseError("line " + std::to_string(line) + ": " + std::string(name) + " '" + std::string(field) +
                         "' is not an integer",
                     line, 0);
  }
  return value;
}

Workload parse_csv(std::string_view bytes, std::string label) {
  if (bytes.size() >= 3 && bytes.substr(0, 3) == "\xEF\xBB\xBF") bytes.remove_prefix(3);
  std::vector<ProcessSpec> records;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (!bytes.empty()) {
    const auto nl = bytes.find('\n');
    const auto raw = bytes.substr(0, nl);
    bytes.remove_prefix(nl == std::string_view::npos ? bytes.size() : nl + 1);
    ++line_no;
    const auto line = trim(raw);
    if (!header_seen) {
      if (line != kCsvHeader) {
        throw ParseError("line 1: expected header '" + std::string(kCsvHeader) + "'", line_no, 0);
      }
      header_seen = true;
      continue;
    }
    if (line.empty()) continue;

    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
      const auto comma = line.find(',', start);
      fields.push_back(trim(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (fields.size() != 3) {
      throw ParseError("line " + std::to_string(line_no) + ": expected 3 fields, got " + std::to_string(fields.size()),
                       line_no, 0);
    }
    records.push_back({std::string(fields[0]), parse_int(fields[1], "arrival_ms", line_no),
                       parse_int(fields[2], "burst_ms", line_no)});
  }
  if (!header_seen) throw ParseError("empty input: missing header", 1, 0);
  return validate_workload(std::move(records), std::move(label));
}

Workload parse_json(std::string_view bytes) {
  json doc;
  try {
    doc = json::parse(bytes);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what(), 0, e.byte);
  }
  try {
    auto integer = [](const json& p, const char* key) {
      const auto& v = p.at(key);
      if (!v.is_number_integer()) throw ParseError(std::string(key) + " must be an integer", 0, 0);
      return v.get<Millis>();
    };
    std::vector<ProcessSpec> records;
    for (const auto& p : doc.at("processes")) {
      records.push_back({p.at("pid").get<std::string>(), integer(p, "arrival_ms"), integer(p, "burst_ms")});
    }
    return validate_workload(std::move(records), doc.value("label", std::string{}));
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid workload document: ") + e.what(), 0, 0);
  }
}

}  // namespace

Workload parse_workload(std::string_view bytes, WorkloadFormat format, std::string csv_label) {
  return format == WorkloadFormat::Csv ? parse_csv(bytes, std::move(csv_label)) : parse_json(bytes);
}

std::string serialize_workload(const Workload& workload, WorkloadFormat format) {
  if (format == WorkloadFormat::Csv) {
    std::string out(kCsvHeader);
    out += '\n';
    for (const auto& p : workload.processes()) {
      out += p.pid + "," + std::to_string(p.arrival) + "," + std::to_string(p.burst) + "\n";
    }
    return out;
  }
  json doc;
  doc["label"] = workload.label();
  doc["processes"] = json::array();
  for (const auto& p : workload.processes()) {
    doc["processes"].push_back({{"pid", p.pid}, {"arrival_ms", p.arrival}, {"burst_ms", p.burst}});
  }
  return doc.dump(2) + "\n";
}

WorkloadFormat format_for_path(std::string_view path) {
  return path.size() >= 5 && path.substr(path.size() - 5) == ".json" ? WorkloadFormat::Json : WorkloadFormat::Csv;
}

std::string metrics_to_json(const RunMetrics& m, const ExecutionTrace& trace) {
  json doc;
  doc["algorithm"] = m.descriptor.to_spec();
  doc["quanta"] = m.quanta();
  doc["context_switches"] = m.context_switches;
  doc["avg_waiting"] = to_fixed(m.avg_waiting, 1);
  doc["avg_turnaround"] = to_fixed(m.avg_turnaround, 1);
  doc["avg_response"] = to_fixed(m.avg_response, 1);
  doc["makespan_ms"] = m.makespan;
  doc["throughput_per_ms"] = to_fixed(m.throughput, 6);
  doc["cpu_utilization_pct"] = to_fixed(m.cpu_utilization, 2);
  doc["processes"] = json::array();
  for (const auto& p : m.per_process) {
    doc["processes"].push_back({{"pid", p.pid},
                                {"completion_ms", p.completion},
                                {"turnaround_ms", p.turnaround},
                                {"waiting_ms", p.waiting},
                                {"response_ms", p.response}});
  }
  doc["slices"] = json::array();
  for (const auto& s : trace.slices) {
    doc["slices"].push_back({{"pid", s.pid},
                             {"start_ms", s.start},
                             {"end_ms", s.end},
                             {"cycle", s.cycle},
                             {"quantum_ms", s.quantum},
                             {"termination", s.termination == Termination::Completed ? "completed" : "quantum_expired"}});
  }
  doc["idles"] = json::array();
  for (const auto& g : trace.idles) doc["idles"].push_back({{"start_ms", g.start}, {"end_ms", g.end}});
  return doc.dump(2) + "\n";
}

std::string metrics_to_csv(const RunMetrics& m, const Workload& workload) {
  std::string out = "pid,arrival_ms,burst_ms,completion_ms,turnaround_ms,waiting_ms,response_ms\n";
  for (std::size_t i = 0; i < workload.size(); ++i) {
    const auto& p = m.per_process[i];
    out += p.pid + "," + std::to_string(workload[i].arrival) + "," + std::to_string(workload[i].burst) + "," +
           std::to_string(p.completion) + "," + std::to_string(p.turnaround) + "," + std::to_string(p.waiting) + "," +
           std::to_string(p.response) + "\n";
  }
  return out;
}

std::string metrics_to_text(const RunMetrics& m, const Workload& workload) {
  std::ostringstream os;
  os << "algorithm        " << m.descriptor.to_spec() << "\n";
  os << "time quanta      ";
  const auto q = m.quanta();
  for (std::size_t i = 0; i < q.size(); ++i) os << (i ? "," : "") << q[i];
  os << "\ncontext switches " << m.context_switches << "\n";
  os << "avg waiting      " << to_fixed(m.avg_waiting, 1) << "\n";
  os << "avg turnaround   " << to_fixed(m.avg_turnaround, 1) << "\n";
  os << "avg response     " << to_fixed(m.avg_response, 1) << "\n";
  os << "makespan         " << m.makespan << " ms\n";
  os << "throughput       " << to_fixed(m.throughput * 1000, 3) << " processes/s\n";
  os << "cpu utilization  " << to_fixed(m.cpu_utilization, 2) << "%\n\n";
  os << "pid       arrival    burst  complete  turnaround  waiting  response\n";
  for (std::size_t i = 0; i < workload.size(); ++i) {
    const auto& p = m.per_process[i];
    char buf[128];
    std::snprintf(buf, sizeof buf, "%-8s %8lld %8lld %9lld %11lld %8lld %9lld\n", p.pid.c_str(),
                  static_cast<long long>(workload[i].arrival), static_cast<long long>(workload[i].burst),
                  static_cast<long long>(p.completion), static_cast<long long>(p.turnaround),
                  static_cast<long long>(p.waiting), static_cast<long long>(p.response));
    os << buf;
  }
  return os.str();
}

}  // namespace rrsim
