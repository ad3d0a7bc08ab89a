#include "hmkit/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hmkit/error.hpp"

namespace hmkit {

namespace {

const std::vector<std::string> kCommands = {"lemmas", "laws", "fiber", "probe", "all"};

std::optional<std::pair<std::size_t, std::size_t>> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  const std::string lo = text.substr(0, colon);
  const std::string hi = colon == std::string::npos ? lo : text.substr(colon + 1);
  const auto digits = [](const std::string& s) {
    return !s.empty() && s.size() < 10 && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  if (!digits(lo) || !digits(hi)) return std::nullopt;
  return std::pair{std::stoul(lo), std::stoul(hi)};
}

ParsedArgs usage(std::string message) { return ParsedArgs{std::nullopt, kExitUsage, std::move(message)}; }

void run_laws(const RunConfig& c, const MuCandidate& mu, Report& report) {
  const auto spaces = default_spaces();
  report.suites.push_back(check_unit_laws(mu, spaces, c.samples, c.seed));
  report.suites.push_back(check_associativity(mu, spaces, c.samples, c.seed + 1));
  report.suites.push_back(check_naturality(mu, c.samples, c.seed + 2));
  for (std::size_t n = c.n_lo; n <= c.n_hi; ++n) report.suites.push_back(forced_value_chain(n, mu));
}

}  // namespace

ParsedArgs parse_args(const std::vector<std::string>& args) {
  CLI::App app{"Exact verification harness for the Hartman-Mycielski tower", "hmkit"};
  std::string positional;
  std::string command;
  std::string n_range;
  std::size_t single_n = 0;
  std::size_t samples = 0;
  RunConfig config;

  app.add_option("cmd", positional, "lemmas | laws | fiber | probe | all");
  app.add_option("--command", command, "lemmas | laws | fiber | probe | all");
  app.add_option("--n-range", n_range, "LOW:HIGH range of n");
  app.add_option("--n", single_n, "shorthand for --n-range N:N");
  app.add_option("--grid", config.grid, "grid refinement m for the fiber oracle");
  app.add_option("--samples", samples, "random samples per law");
  app.add_option("--seed", config.seed, "64-bit seed");
  app.add_option("--candidate", config.candidate, "multiplication candidate");
  app.add_option("--format", config.format, "json | csv | text");
  app.add_option("--out", config.out, "output path (default: stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    return ParsedArgs{std::nullopt, kExitPass, app.help()};
  } catch (const CLI::ParseError& e) {
    return usage(e.what());
  }

  if (!positional.empty() && !command.empty() && positional != command) {
    return usage("conflicting commands '" + positional + "' and '" + command + "'");
  }
  if (!positional.empty()) config.command = positional;
  if (!command.empty()) config.command = command;
  if (std::find(kCommands.begin(), kCommands.end(), config.command) == kCommands.end()) {
    return usage("unknown command '" + config.command + "'");
  }
  if (app.count("--samples")) {
    if (samples < 1) return usage("--samples must be >= 1");
    config.samples = samples;
  }
  if (app.count("--n") && app.count("--n-range")) return usage("use either --n or --n-range");
  if (app.count("--n")) {
    config.n_lo = config.n_hi = single_n;
  } else if (app.count("--n-range")) {
    const auto range = parse_range(n_range);
    if (!range) return usage("--n-range expects LOW:HIGH");
    config.n_lo = range->first;
    config.n_hi = range->second;
  } else if (config.command == "fiber") {
    config.n_hi = 3;
  }
  if (config.n_lo < 1 || config.n_hi < config.n_lo) return usage("n range needs 1 <= LOW <= HIGH");
  if (config.grid < 1) return usage("--grid must be >= 1");
  if (!find_candidate(config.candidate)) return usage("unknown candidate '" + config.candidate + "'");
  if (config.format != "json" && config.format != "csv" && config.format != "text") {
    return usage("--format must be json, csv or text");
  }
  return ParsedArgs{config, kExitPass, ""};
}

Report execute(const RunConfig& c) {
  const MuCandidate mu = *find_candidate(c.candidate);
  Report report;
  report.config = c;
  const bool all = c.command == "all";
  if (all || c.command == "lemmas") {
    for (auto& r : lemma_suite(c.samples, c.seed)) report.suites.push_back(std::move(r));
  }
  if (all || c.command == "laws") run_laws(c, mu, report);
  if (all || c.command == "fiber") {
    const std::size_t n_hi = all ? std::min<std::size_t>(c.n_hi, 3) : c.n_hi;
    const std::size_t m_lo = all ? 1 : c.grid;
    const std::size_t m_hi = all ? std::min<std::size_t>(c.grid, 2) : c.grid;
    for (std::size_t n = c.n_lo; n <= n_hi; ++n) {
      for (std::size_t m = m_lo; m <= m_hi; ++m) report.suites.push_back(fiber_report(n, m));
    }
  }
  if (all || c.command == "probe") {
    report.probe = discontinuity_probe(mu, c.n_lo, c.n_hi);
    report.suites.push_back(probe_report(mu.name, report.probe));
  }
  return report;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  Report report;
  try {
    report = execute(config);
  } catch (const BudgetExceeded& e) {
    err << "hmkit: " << e.what() << '\n';
    return kExitBudgetOrIo;
  }
  const std::string text = emit_report(report, config.format);
  if (config.out.empty()) {
    out << text;
  } else {
    std::ofstream file(config.out, std::ios::binary);
    file << text;
    file.close();
    if (!file) {
      err << "hmkit: cannot write report to '" << config.out << "'\n";
      return kExitBudgetOrIo;
    }
  }
  return report.passed() ? kExitPass : kExitFail;
}

int cli_main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const ParsedArgs parsed = parse_args(args);
  if (!parsed.config) {
    (parsed.exit_code == kExitPass ? std::cout : std::cerr) << parsed.message << '\n';
    return parsed.exit_code;
  }
  try {
    return run(*parsed.config, std::cout, std::cerr);
  } catch (const Error& e) {
    std::cerr << "hmkit: " << e.what() << '\n';
    return kExitFail;
  }
}

}  // namespace hmkit
