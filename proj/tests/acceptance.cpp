#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "hmkit/candidates.hpp"
#include "hmkit/cli.hpp"
#include "hmkit/laws.hpp"

using namespace hmkit;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* name, double limit_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o{false, ""};
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = limit_s <= 0 || secs < limit_s;
  const bool pass = o.ok && in_time;
  if (!pass) ++failures;
  std::printf("%s  %d  %-34s %7.3fs", pass ? "PASS" : "FAIL", id, name, secs);
  if (limit_s > 0) std::printf(" (limit %.0fs)", limit_s);
  if (!o.detail.empty()) std::printf("  %s", o.detail.c_str());
  if (!in_time) std::printf("  too slow");
  std::printf("\n");
}

Outcome all_pass(const std::vector<LawReport>& reports) {
  std::string detail;
  bool ok = true;
  for (const LawReport& r : reports) {
    if (!r.passed()) {
      ok = false;
      detail += r.law + ": " + r.failures.front().input + "; ";
    }
  }
  return {ok, detail};
}

MuCandidate diagonal() { return *find_candidate("diagonal"); }

}  // namespace

int main() {
  criterion(1, "discontinuity probe n=1..32", 1, [] {
    const auto rows = discontinuity_probe(diagonal(), 32);
    if (rows.size() != 32) return Outcome{false, "wrong row count"};
    for (const ProbeRow& r : rows) {
      const Rat inv(1, static_cast<std::int64_t>(r.n));
      if (r.metric_distance != inv || r.coordinate_distance != inv || r.image_gap != Rat(1)) {
        return Outcome{false, "mismatch at n=" + std::to_string(r.n)};
      }
    }
    return Outcome{true, "gap 1 at every n"};
  });

  criterion(2, "forcing chain n=1..16", 5, [] {
    std::vector<LawReport> reports;
    for (std::size_t n = 1; n <= 16; ++n) reports.push_back(forced_value_chain(n, diagonal()));
    return all_pass(reports);
  });

  criterion(3, "fiber uniqueness", 30, [] {
    std::string detail;
    for (auto [n, m] : std::vector<std::pair<std::size_t, std::size_t>>{{1, 1}, {2, 2}, {2, 3}, {3, 2}}) {
      const FiberResult r = fiber_uniqueness(n, m);
      if (!r.unique || !r.others.empty()) {
        return Outcome{false, "not unique at (" + std::to_string(n) + "," + std::to_string(m) + ")"};
      }
      detail += "(" + std::to_string(n) + "," + std::to_string(m) + "):" + std::to_string(r.enumerated) + " ";
    }
    return Outcome{true, detail};
  });

  criterion(4, "linearity and monotonicity", 5, [] {
    return all_pass({check_linearity(1000, 41), check_monotonicity(1000, 42)});
  });

  criterion(5, "coordinate naturality and unit", 5, [] {
    return all_pass({check_coordinate_naturality(1000, 51), check_unit_coordinates(1000, 52)});
  });

  criterion(6, "monad laws", 10, [] {
    const auto spaces = default_spaces();
    Outcome o = all_pass({check_unit_laws(diagonal(), spaces, 500, 61),
                          check_associativity(diagonal(), spaces, 200, 62),
                          check_naturality(diagonal(), 500, 63)});
    if (!o.ok) return o;
    const MuCandidate broken = *find_candidate("constant-left");
    for (const LawReport& r : {check_unit_laws(broken, spaces, 500, 61),
                               check_associativity(broken, spaces, 200, 62),
                               check_naturality(broken, 500, 63)}) {
      if (!r.passed() && !r.failures.front().input.empty()) {
        return Outcome{true, "constant-left fails " + r.law + " (" + std::to_string(r.failures.size()) + " witnesses)"};
      }
    }
    return Outcome{false, "constant-left passed every law"};
  });

  criterion(7, "metric axioms", 5, [] {
    return all_pass({check_metric_axioms_hm(500, 71), check_metric_axioms_hm2(500, 72)});
  });

  criterion(8, "support characterizations", 5, [] {
    return all_pass({check_support_criterion(500, 81), check_support_membership(500, 82)});
  });

  criterion(9, "determinism of `all`", 0, [] {
    std::string outputs[2];
    for (std::string& text : outputs) {
      const ParsedArgs args = parse_args({"all", "--seed", "7", "--format", "json"});
      std::ostringstream out;
      std::ostringstream err;
      if (run(*args.config, out, err) != kExitPass) return Outcome{false, "all did not pass"};
      text = out.str();
    }
    if (outputs[0] != outputs[1]) return Outcome{false, "reports differ"};
    return Outcome{true, std::to_string(outputs[0].size()) + " bytes identical"};
  });

  std::printf("%s\n", failures == 0 ? "all criteria passed" : "some criteria failed");
  return failures == 0 ? 0 : 1;
}
