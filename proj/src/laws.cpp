#include "hmkit/laws.hpp"

#include <algorithm>
#include <tuple>
#include <utility>

#include "hmkit/error.hpp"

namespace hmkit {

namespace {

std::vector<Rat> block_breaks(std::size_t n) {
  std::vector<Rat> breaks;
  for (std::size_t k = 0; k <= n; ++k) {
    breaks.emplace_back(static_cast<std::int64_t>(k), static_cast<std::int64_t>(n));
  }
  return breaks;
}

std::string space_text(const FiniteSpace& space) {
  std::string out = "{";
  for (std::size_t i = 0; i < space.size(); ++i) {
    if (i) out += ',';
    out += space.labels()[i];
  }
  return out + "}";
}

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

PointFn gamma_fn(const std::vector<Rat>& breaks, std::size_t i) {
  return PointFn::canonicalize({Rat(0), breaks[i], breaks[i + 1], Rat(1)}, {Point{0}, Point{1}, Point{0}});
}

}  // namespace

void LawReport::fail(std::string input, std::string expected, std::string actual) {
  failures.push_back(LawFailure{std::move(input), std::move(expected), std::move(actual)});
}

void LawReport::finalize() { std::sort(failures.begin(), failures.end()); }

HmFn2 build_b_n(std::size_t n, const SpacePtr& d) {
  if (n == 0) throw Error("witnesses need n >= 1");
  if (d->size() != 2) throw Error("build_b_n needs a two-point space");
  const auto breaks = block_breaks(n);
  std::vector<PointFn> values;
  for (std::size_t i = 0; i < n; ++i) values.push_back(gamma_fn(breaks, i));
  return HmFn2(d, PointFn2::canonicalize(breaks, std::move(values)));
}

Witnesses build_witnesses(std::size_t n) {
  if (n == 0) throw Error("witnesses need n >= 1");
  const auto k_n = make_discrete_space(n);
  const auto k_nn = product_space(k_n, k_n);
  const auto d = make_two_point_space();
  const auto breaks = block_breaks(n);

  std::vector<Point> diag;
  std::vector<Point> stair;
  for (std::size_t i = 0; i < n; ++i) {
    diag.push_back(k_nn.pair(Point{i}, Point{i}));
    stair.push_back(Point{i});
  }

  std::vector<HmFn> alpha_i;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Point> row;
    for (std::size_t j = 0; j < n; ++j) row.push_back(k_nn.pair(Point{i}, Point{j}));
    alpha_i.emplace_back(k_nn.space, PointFn::canonicalize(breaks, std::move(row)));
  }
  std::vector<PointFn> a_values;
  for (const auto& a : alpha_i) a_values.push_back(a.fn);

  std::vector<HmFn> gamma_i;
  for (std::size_t i = 0; i < n; ++i) gamma_i.emplace_back(d, gamma_fn(breaks, i));

  std::vector<Point> collapse;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) collapse.push_back(Point{i == j ? 1u : 0u});
  }

  return Witnesses{
      n,
      k_n,
      k_nn,
      d,
      HmFn(k_nn.space, PointFn::canonicalize(breaks, std::move(diag))),
      HmFn(k_n, PointFn::canonicalize(breaks, std::move(stair))),
      alpha_i,
      HmFn2(k_nn.space, PointFn2::canonicalize(breaks, std::move(a_values))),
      gamma_i,
      build_b_n(n, d),
      SpaceMap(k_nn.space, d, std::move(collapse)),
  };
}

SpacePtr random_metric_space(std::size_t n, Rng& rng) {
  // Distances in [1/2, 1] satisfy the triangle inequality automatically.
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
  std::vector<std::vector<Rat>> dist(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto k = static_cast<std::int64_t>(pick(rng, 6, 12));
      dist[i][j] = dist[j][i] = Rat(k, 12);
    }
  }
  return std::make_shared<const FiniteSpace>(std::move(labels), std::move(dist));
}

std::vector<SpacePtr> default_spaces() {
  std::vector<std::vector<Rat>> tri = {
      {Rat(0), Rat(1, 2), Rat(2, 3)},
      {Rat(1, 2), Rat(0), Rat(1, 3)},
      {Rat(2, 3), Rat(1, 3), Rat(0)},
  };
  return {
      make_discrete_space(1),
      make_discrete_space(2),
      make_discrete_space(3),
      make_two_point_space(),
      product_space(make_discrete_space(2), make_discrete_space(2)).space,
      std::make_shared<const FiniteSpace>(std::vector<std::string>{"a", "b", "c"}, std::move(tri)),
  };
}

LawReport check_unit_laws(const MuCandidate& mu, const std::vector<SpacePtr>& spaces,
                          std::size_t samples, std::uint64_t seed, std::size_t max_grid) {
  if (spaces.empty()) throw Error("check_unit_laws needs at least one space");
  LawReport report{mu.name, "unit_laws", samples, {}};
  Rng rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const SpacePtr& space = spaces[pick(rng, 0, spaces.size() - 1)];
    const HmFn f = random_hm(space, pick(rng, 1, max_grid), rng);
    const std::string where = space_text(*space) + " f=" + to_text(f);
    const HmFn via_h_eta = mu(h_eta(f));
    if (via_h_eta != f) report.fail("mu.H(eta) " + where, to_text(f), to_text(via_h_eta));
    const HmFn via_eta_h = mu(eta_h(f));
    if (via_eta_h != f) report.fail("mu.eta(H) " + where, to_text(f), to_text(via_eta_h));
  }
  report.finalize();
  return report;
}

LawReport check_associativity(const MuCandidate& mu, const std::vector<SpacePtr>& spaces,
                              std::size_t samples, std::uint64_t seed, std::size_t max_grid) {
  if (spaces.empty()) throw Error("check_associativity needs at least one space");
  LawReport report{mu.name, "associativity", samples, {}};
  Rng rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const SpacePtr& space = spaces[pick(rng, 0, spaces.size() - 1)];
    const HmFn3 F = random_hm3(space, pick(rng, 1, max_grid), rng);
    const HmFn lhs = mu(mu_inner(mu, F));
    const HmFn rhs = mu(mu_outer(mu, F));
    if (lhs != rhs) report.fail(space_text(*space) + " F=" + to_text(F), to_text(rhs), to_text(lhs));
  }
  report.finalize();
  return report;
}

LawReport check_naturality(const MuCandidate& mu, std::size_t map_samples, std::uint64_t seed,
                           std::size_t max_grid) {
  LawReport report{mu.name, "naturality", map_samples, {}};
  Rng rng(seed);
  const auto fixed = default_spaces();
  const auto any_space = [&]() -> SpacePtr {
    if (pick(rng, 0, 1) == 0) return fixed[pick(rng, 0, fixed.size() - 1)];
    return random_metric_space(pick(rng, 1, 4), rng);
  };
  for (std::size_t s = 0; s < map_samples; ++s) {
    const SpacePtr source = any_space();
    const SpacePtr target = any_space();
    std::vector<Point> assignment;
    for (std::size_t i = 0; i < source->size(); ++i) assignment.push_back(random_point(rng, *target));
    const SpaceMap h(source, target, std::move(assignment));
    const HmFn2 F = random_hm2(source, pick(rng, 1, max_grid), rng);
    const HmFn lhs = mu(h2_map(h, F));
    const HmFn rhs = hm_map(h, mu(F));
    if (lhs != rhs) {
      std::string map_text;
      for (Point p : h.assignment()) map_text += (map_text.empty() ? "" : ",") + target->label(p);
      report.fail(space_text(*source) + "->" + space_text(*target) + " h=[" + map_text +
                      "] F=" + to_text(F),
                  to_text(rhs), to_text(lhs));
    }
  }
  report.finalize();
  return report;
}

std::vector<ProbeRow> discontinuity_probe(const MuCandidate& mu, std::size_t n_lo,
                                          std::size_t n_hi) {
  if (n_lo == 0 || n_hi < n_lo) throw Error("probe needs 1 <= n_lo <= n_hi");
  const auto d = make_two_point_space();
  const HmFn2 limit = eta_h(unit(Point{0}, d));
  const TestFn id_d(d, {Rat(0), Rat(1)});
  const Window whole = Window::unit();
  const HmFn mu_limit = mu(limit);
  const Rat limit_coord = iterated_functional_eval(id_d, whole, whole, limit);

  std::vector<ProbeRow> rows;
  for (std::size_t n = n_lo; n <= n_hi; ++n) {
    const HmFn2 b_n = build_b_n(n, d);
    rows.push_back(ProbeRow{
        n,
        abs(iterated_functional_eval(id_d, whole, whole, b_n) - limit_coord),
        d_hm2(b_n, limit),
        d_hm(mu(b_n), mu_limit),
    });
  }
  return rows;
}

std::vector<ProbeRow> discontinuity_probe(const MuCandidate& mu, std::size_t n_max) {
  return discontinuity_probe(mu, 1, n_max);
}

LawReport probe_report(const std::string& candidate, const std::vector<ProbeRow>& rows) {
  LawReport report{candidate, "discontinuity_probe", rows.size(), {}};
  for (const ProbeRow& r : rows) {
    const Rat inv(1, static_cast<std::int64_t>(r.n));
    const std::string at = "n=" + std::to_string(r.n);
    if (r.metric_distance != inv) report.fail(at + " metric_distance", inv.str(), r.metric_distance.str());
    if (r.coordinate_distance != inv) {
      report.fail(at + " coordinate_distance", inv.str(), r.coordinate_distance.str());
    }
    if (r.image_gap != Rat(1)) report.fail(at + " image_gap", "1", r.image_gap.str());
  }
  report.finalize();
  return report;
}

Rat coordinate_gap_sup(const HmFn2& F, const HmFn2& G, std::size_t grid) {
  if (!same_space(F.space, G.space)) throw Error("coordinate_gap_sup: different spaces");
  if (grid == 0) throw Error("coordinate_gap_sup: grid must be >= 1");
  std::vector<Window> windows;
  for (std::size_t i = 0; i < grid; ++i) {
    for (std::size_t j = i + 1; j <= grid; ++j) {
      const auto g = static_cast<std::int64_t>(grid);
      windows.emplace_back(Rat(static_cast<std::int64_t>(i), g), Rat(static_cast<std::int64_t>(j), g));
    }
  }
  Rat best(0);
  for (Point x : F.space->points()) {
    const TestFn phi = TestFn::indicator(F.space, x);
    for (const Window& inner : windows) {
      for (const Window& outer : windows) {
        best = max(best, abs(iterated_functional_eval(phi, inner, outer, F) -
                             iterated_functional_eval(phi, inner, outer, G)));
      }
    }
  }
  return best;
}

LawReport forced_value_chain(std::size_t n, const MuCandidate& mu) {
  LawReport report{mu.name, "forced_value_chain(n=" + std::to_string(n) + ")", 4, {}};
  const Witnesses w = build_witnesses(n);
  const std::string beta = to_text(w.beta);

  // Step 1: both projections of A_n are unit images of beta, so the unit laws
  // force their multiplication to beta.
  const HmFn2 c1 = h2_map(w.pr1(), w.a_n);
  const HmFn2 c2 = h2_map(w.pr2(), w.a_n);
  if (c1 != h_eta(w.beta)) report.fail("step1 H2(pr1)(A_n) = H(eta)(beta)", to_text(h_eta(w.beta)), to_text(c1));
  if (c2 != eta_h(w.beta)) report.fail("step1 H2(pr2)(A_n) = eta(H)(beta)", to_text(eta_h(w.beta)), to_text(c2));
  const HmFn mu_c1 = mu(c1);
  const HmFn mu_c2 = mu(c2);
  if (mu_c1 != w.beta) report.fail("step1 mu(C1) = beta", beta, to_text(mu_c1));
  if (mu_c2 != w.beta) report.fail("step1 mu(C2) = beta", beta, to_text(mu_c2));

  // Step 2: naturality along the projections puts mu(A_n) in both fibers over beta.
  const HmFn mu_a = mu(w.a_n);
  for (const auto& [name, pr, c_mu] :
       {std::tuple{"pr1", &w.pr1(), &mu_c1}, std::tuple{"pr2", &w.pr2(), &mu_c2}}) {
    const HmFn projected = hm_map(*pr, mu_a);
    if (projected != *c_mu) {
      report.fail(std::string("step2 H(") + name + ")(mu(A_n)) = mu(H2(" + name + ")(A_n))",
                  to_text(*c_mu), to_text(projected));
    }
    if (projected != w.beta) {
      report.fail(std::string("step2 H(") + name + ")(mu(A_n)) = beta", beta, to_text(projected));
    }
  }

  // Step 3: the fiber intersection is {alpha}.
  if (mu_a != w.alpha) report.fail("step3 mu(A_n) = alpha", to_text(w.alpha), to_text(mu_a));

  // Step 4: naturality along the collapse map.
  const HmFn2 b_n = h2_map(w.collapse, w.a_n);
  if (b_n != w.b_n) report.fail("step4 H2(f)(A_n) = B_n", to_text(w.b_n), to_text(b_n));
  const HmFn mu_b = mu(w.b_n);
  const HmFn pushed = hm_map(w.collapse, mu_a);
  if (mu_b != pushed) report.fail("step4 mu(B_n) = H(f)(mu(A_n))", to_text(pushed), to_text(mu_b));
  const HmFn one = unit(Point{1}, w.d);
  if (mu_b != one) report.fail("step4 mu(B_n) = unit(1)", to_text(one), to_text(mu_b));

  report.finalize();
  return report;
}

}  // namespace hmkit
