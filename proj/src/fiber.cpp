#include <limits>

#include "hmkit/error.hpp"
#include "hmkit/laws.hpp"

namespace hmkit {

FiberResult fiber_uniqueness(std::size_t n, std::size_t m, std::uint64_t budget) {
  if (n == 0 || m == 0) throw Error("fiber_uniqueness needs n, m >= 1");
  const std::size_t points = n * n;
  const std::size_t cells = n * m;

  std::uint64_t total = 1;
  for (std::size_t c = 0; c < cells; ++c) {
    if (total > budget / points) {
      throw BudgetExceeded("fiber enumeration for n=" + std::to_string(n) + ", m=" +
                           std::to_string(m) + " needs (n^2)^(n m) candidates, over budget " +
                           std::to_string(budget));
    }
    total *= points;
  }

  const Witnesses w = build_witnesses(n);
  std::vector<Rat> grid;
  for (std::size_t k = 0; k <= cells; ++k) {
    grid.emplace_back(static_cast<std::int64_t>(k), static_cast<std::int64_t>(cells));
  }

  // Grid assignments and canonical grid step functions are in bijection, so
  // an odometer over assignments visits every candidate exactly once.
  FiberResult result;
  std::vector<std::size_t> digits(cells, 0);
  while (true) {
    std::vector<Point> values(cells);
    for (std::size_t c = 0; c < cells; ++c) values[c] = Point{digits[c]};
    const HmFn gamma(w.k_nn.space, PointFn::canonicalize(grid, std::move(values)));
    ++result.enumerated;
    if (hm_map(w.pr1(), gamma) == w.beta && hm_map(w.pr2(), gamma) == w.beta) {
      if (gamma == w.alpha) {
        result.contains_alpha = true;
      } else {
        result.others.push_back(gamma);
      }
    }
    std::size_t c = 0;
    while (c < cells && ++digits[c] == points) digits[c++] = 0;
    if (c == cells) break;
  }
  result.unique = result.contains_alpha && result.others.empty();
  return result;
}

LawReport fiber_report(std::size_t n, std::size_t m, std::uint64_t budget) {
  const FiberResult r = fiber_uniqueness(n, m, budget);
  LawReport report{"-", "fiber_uniqueness(n=" + std::to_string(n) + ",m=" + std::to_string(m) + ")",
                   static_cast<std::size_t>(r.enumerated), {}};
  const Witnesses w = build_witnesses(n);
  if (!r.contains_alpha) report.fail("alpha in fiber", to_text(w.alpha), "absent");
  for (const HmFn& other : r.others) report.fail("extra solution " + to_text(other), to_text(w.alpha), to_text(other));
  report.finalize();
  return report;
}

}  // namespace hmkit
