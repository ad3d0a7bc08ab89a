#include "hmkit/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "hmkit/error.hpp"

namespace hmkit {

using ojson = nlohmann::ordered_json;

bool Report::passed() const {
  return std::all_of(suites.begin(), suites.end(), [](const LawReport& r) { return r.passed(); });
}

namespace {

ojson config_json(const RunConfig& c) {
  return ojson{
      {"command", c.command},
      {"n_range", std::to_string(c.n_lo) + ":" + std::to_string(c.n_hi)},
      {"grid", c.grid},
      {"samples", c.samples},
      {"seed", c.seed},
      {"candidate", c.candidate},
      {"format", c.format},
      {"out", c.out},
  };
}

RunConfig config_from(const ojson& j) {
  RunConfig c;
  c.command = j.at("command").get<std::string>();
  const auto range = j.at("n_range").get<std::string>();
  const auto colon = range.find(':');
  if (colon == std::string::npos) throw Error("malformed n_range in report");
  c.n_lo = std::stoul(range.substr(0, colon));
  c.n_hi = std::stoul(range.substr(colon + 1));
  c.grid = j.at("grid").get<std::size_t>();
  c.samples = j.at("samples").get<std::size_t>();
  c.seed = j.at("seed").get<std::uint64_t>();
  c.candidate = j.at("candidate").get<std::string>();
  c.format = j.at("format").get<std::string>();
  c.out = j.at("out").get<std::string>();
  return c;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string emit_json(const Report& report) {
  ojson suites = ojson::array();
  for (const LawReport& r : report.suites) {
    ojson failures = ojson::array();
    for (const LawFailure& f : r.failures) {
      failures.push_back({{"input", f.input}, {"expected", f.expected}, {"actual", f.actual}});
    }
    suites.push_back({
        {"candidate", r.candidate},
        {"law", r.law},
        {"samples", r.samples},
        {"verdict", r.passed() ? "pass" : "fail"},
        {"failures", failures},
    });
  }
  ojson probe = ojson::array();
  for (const ProbeRow& row : report.probe) {
    probe.push_back({
        {"n", row.n},
        {"coordinate_distance", row.coordinate_distance.str()},
        {"metric_distance", row.metric_distance.str()},
        {"image_gap", row.image_gap.str()},
    });
  }
  const ojson doc{
      {"tool_version", report.tool_version},
      {"config", config_json(report.config)},
      {"verdict", report.passed() ? "pass" : "fail"},
      {"suites", suites},
      {"probe", probe},
  };
  return doc.dump() + "\n";
}

Report parse_json(const std::string& text) {
  ojson doc;
  try {
    doc = ojson::parse(text);
  } catch (const ojson::exception& e) {
    throw Error(std::string("malformed report: ") + e.what());
  }
  Report report;
  report.tool_version = doc.at("tool_version").get<std::string>();
  report.config = config_from(doc.at("config"));
  for (const auto& s : doc.at("suites")) {
    LawReport r{s.at("candidate").get<std::string>(), s.at("law").get<std::string>(),
                s.at("samples").get<std::size_t>(), {}};
    for (const auto& f : s.at("failures")) {
      r.fail(f.at("input").get<std::string>(), f.at("expected").get<std::string>(),
             f.at("actual").get<std::string>());
    }
    report.suites.push_back(std::move(r));
  }
  for (const auto& p : doc.at("probe")) {
    report.probe.push_back(ProbeRow{p.at("n").get<std::size_t>(),
                                    Rat::parse(p.at("coordinate_distance").get<std::string>()),
                                    Rat::parse(p.at("metric_distance").get<std::string>()),
                                    Rat::parse(p.at("image_gap").get<std::string>())});
  }
  return report;
}

std::string emit_csv(const Report& report) {
  std::ostringstream out;
  if (!report.probe.empty()) {
    out << "n,coordinate_distance,metric_distance,image_gap\n";
    for (const ProbeRow& r : report.probe) {
      out << r.n << ',' << r.coordinate_distance << ',' << r.metric_distance << ',' << r.image_gap
          << '\n';
    }
  }
  if (report.config.command != "probe") {
    if (!report.probe.empty()) out << '\n';
    out << "candidate,law,samples,failures,verdict\n";
    for (const LawReport& r : report.suites) {
      out << csv_field(r.candidate) << ',' << csv_field(r.law) << ',' << r.samples << ','
          << r.failures.size() << ',' << (r.passed() ? "pass" : "fail") << '\n';
    }
  }
  return out.str();
}

std::string emit_text(const Report& report) {
  std::ostringstream out;
  const RunConfig& c = report.config;
  out << "hmkit " << report.tool_version << "  command=" << c.command << " n=" << c.n_lo << ":"
      << c.n_hi << " grid=" << c.grid << " samples=" << c.samples << " seed=" << c.seed
      << " candidate=" << c.candidate << "\n";
  out << "Scope: dense step-function part of H only; convergence is measured in functional\n"
         "coordinates with d_hm2 reported alongside.\n\n";
  for (const LawReport& r : report.suites) {
    out << (r.passed() ? "[pass] " : "[FAIL] ") << std::left << std::setw(14) << r.candidate << ' '
        << r.law << "  samples=" << r.samples;
    if (r.law.rfind("fiber_uniqueness", 0) == 0) out << "  unique: " << (r.passed() ? "true" : "false");
    out << '\n';
    const std::size_t shown = std::min<std::size_t>(r.failures.size(), 5);
    for (std::size_t i = 0; i < shown; ++i) {
      const LawFailure& f = r.failures[i];
      out << "    input:    " << f.input << "\n    expected: " << f.expected
          << "\n    actual:   " << f.actual << '\n';
    }
    if (r.failures.size() > shown) out << "    ... " << r.failures.size() - shown << " more\n";
  }
  if (!report.probe.empty()) {
    out << "\n" << std::right << std::setw(4) << "n" << std::setw(22) << "coordinate_distance"
        << std::setw(18) << "metric_distance" << std::setw(12) << "image_gap" << '\n';
    for (const ProbeRow& r : report.probe) {
      out << std::setw(4) << r.n << std::setw(22) << r.coordinate_distance.str() << std::setw(18)
          << r.metric_distance.str() << std::setw(12) << r.image_gap.str() << '\n';
    }
  }
  out << "\nverdict: " << (report.passed() ? "pass" : "fail") << '\n';
  return out.str();
}

std::string emit_report(const Report& report, const std::string& format) {
  if (format == "json") return emit_json(report);
  if (format == "csv") return emit_csv(report);
  if (format == "text") return emit_text(report);
  throw Error("unknown report format '" + format + "'");
}

}  // namespace hmkit
