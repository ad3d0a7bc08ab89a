#include <algorithm>

#include "hmkit/laws.hpp"

namespace hmkit {

namespace {

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

constexpr std::size_t kMaxPoints = 5;
constexpr std::size_t kMaxGrid = 12;

SpacePtr random_space(Rng& rng) {
  const std::size_t n = pick(rng, 1, kMaxPoints);
  return pick(rng, 0, 1) == 0 ? make_discrete_space(n) : random_metric_space(n, rng);
}

Rat random_rat(Rng& rng) {
  const auto num = static_cast<std::int64_t>(pick(rng, 0, 20)) - 10;
  return Rat(num, static_cast<std::int64_t>(pick(rng, 1, 6)));
}

TestFn random_test_fn(const SpacePtr& space, Rng& rng) {
  std::vector<Rat> v;
  for (std::size_t i = 0; i < space->size(); ++i) v.push_back(random_rat(rng));
  return TestFn(space, std::move(v));
}

Window random_window(Rng& rng) {
  const std::size_t grid = pick(rng, 1, kMaxGrid);
  const std::size_t a = pick(rng, 0, grid - 1);
  const std::size_t b = pick(rng, a + 1, grid);
  const auto g = static_cast<std::int64_t>(grid);
  return Window(Rat(static_cast<std::int64_t>(a), g), Rat(static_cast<std::int64_t>(b), g));
}

HmFn random_fn(const SpacePtr& space, Rng& rng) { return random_hm(space, pick(rng, 1, kMaxGrid), rng); }

std::string window_text(const Window& w) { return "(" + w.a().str() + "," + w.b().str() + ")"; }

std::string values_text(const TestFn& phi) {
  std::string out = "[";
  for (std::size_t i = 0; i < phi.values.size(); ++i) out += (i ? "," : "") + phi.values[i].str();
  return out + "]";
}

/// Same function with every piece split at its midpoint, then canonicalized.
template <class V>
StepFn<V> resplit(const StepFn<V>& f) {
  RawPieces<V> raw{{Rat(0)}, {}};
  for (std::size_t i = 0; i < f.pieces(); ++i) {
    const Rat mid = (f.piece_start(i) + f.piece_end(i)) / Rat(2);
    raw.breaks.push_back(mid);
    raw.breaks.push_back(f.piece_end(i));
    raw.values.push_back(f.values()[i]);
    raw.values.push_back(f.values()[i]);
  }
  return canonicalize(std::move(raw));
}

template <class T, class Dist, class Text>
void metric_axioms(LawReport& report, const T& f, const T& g, const T& h, Dist&& dist, Text&& text) {
  const Rat fg = dist(f, g);
  const Rat gf = dist(g, f);
  const Rat gh = dist(g, h);
  const Rat fh = dist(f, h);
  const std::string in = "f=" + text(f) + " g=" + text(g) + " h=" + text(h);
  if (fg < Rat(0) || fg > Rat(1)) report.fail("bounds " + in, "0 <= d(f,g) <= 1", fg.str());
  if (fg.is_zero() != (f == g)) {
    report.fail("indiscernibles " + in, f == g ? "0" : "positive", fg.str());
  }
  if (fg != gf) report.fail("symmetry " + in, fg.str(), gf.str());
  if (fh > fg + gh) report.fail("triangle " + in, "<= " + (fg + gh).str(), fh.str());
}

}  // namespace

LawReport check_linearity(std::size_t samples, std::uint64_t seed) {
  LawReport report{"-", "coordinate_linearity", samples, {}};
  Rng rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const SpacePtr space = random_space(rng);
    const TestFn phi1 = random_test_fn(space, rng);
    const TestFn phi2 = random_test_fn(space, rng);
    const Rat l1 = random_rat(rng);
    const Rat l2 = random_rat(rng);
    const Window w = random_window(rng);
    const HmFn f = random_fn(space, rng);
    const Rat lhs = functional_eval({linear_combination(l1, phi1, l2, phi2), w}, f);
    const Rat rhs = l1 * functional_eval({phi1, w}, f) + l2 * functional_eval({phi2, w}, f);
    if (lhs != rhs) {
      report.fail("phi1=" + values_text(phi1) + " phi2=" + values_text(phi2) + " l1=" + l1.str() +
                      " l2=" + l2.str() + " w=" + window_text(w) + " f=" + to_text(f),
                  rhs.str(), lhs.str());
    }
  }
  report.finalize();
  return report;
}

LawReport check_monotonicity(std::size_t samples, std::uint64_t seed) {
  LawReport report{"-", "coordinate_monotonicity", samples, {}};
  Rng rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const SpacePtr space = random_space(rng);
    const TestFn phi1 = random_test_fn(space, rng);
    std::vector<Rat> above;
    for (const Rat& v : phi1.values) above.push_back(v + abs(random_rat(rng)));
    const TestFn phi2(space, std::move(above));
    const Window w = random_window(rng);
    const HmFn f = random_fn(space, rng);
    const Rat lo = functional_eval({phi1, w}, f);
    const Rat hi = functional_eval({phi2, w}, f);
    if (lo > hi) {
      report.fail("phi1=" + values_text(phi1) + " phi2=" + values_text(phi2) + " w=" + window_text(w) +
                      " f=" + to_text(f),
                  "<= " + hi.str(), lo.str());
    }
  }
  report.finalize();
  return report;
}

LawReport check_coordinate_naturality(std::size_t samples, std::uint64_t seed) {
  LawReport report{"-", "coordinate_naturality", samples, {}};
  Rng rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const SpacePtr source = random_space(rng);
    const SpacePtr target = random_space(rng);
    std::vector<Point> assignment;
    for (std::size_t i = 0; i < source->size(); ++i) assignment.push_back(random_point(rng, *target));
    const SpaceMap h(source, target, std::move(assignment));
    const TestFn phi = random_test_fn(target, rng);
    const Window w = random_window(rng);
    const HmFn f = random_fn(source, rng);
    const Rat lhs = functional_eval({phi, w}, hm_map(h, f));
    const Rat rhs = functional_eval({pull_back(phi, h), w}, f);
    if (lhs != rhs) {
      report.fail("phi=" + values_text(phi) + " w=" + window_text(w) + " f=" + to_text(f), rhs.str(),
                  lhs.str());
    }
  }
  report.finalize();
  return report;
}

LawReport check_unit_coordinates(std::size_t samples, std::uint64_t seed) {
  LawReport report{"-", "unit_coordinates", samples, {}};
  Rng rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const SpacePtr space = random_space(rng);
    const Point x = random_point(rng, *space);
    const TestFn phi = random_test_fn(space, rng);
    const Window w = random_window(rng);
    const Rat got = functional_eval({phi, w}, unit(x, space));
    if (got != phi(x)) {
      report.fail("phi=" + values_text(phi) + " w=" + window_text(w) + " x=" + space->label(x),
                  phi(x).str(), got.str());
    }
  }
  report.finalize();
  return report;
}

LawReport check_support_criterion(std::size_t samples, std::uint64_t seed) {
  LawReport report{"-", "support_criterion", samples, {}};
  Rng rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const SpacePtr space = random_space(rng);
    const HmFn f = random_fn(space, rng);
    std::vector<Point> B;
    while (B.empty()) {
      for (Point p : space->points()) {
        if (pick(rng, 0, 1)) B.push_back(p);
      }
    }
    bool inside = true;
    for (const Point& v : f.fn.values()) {
      inside = inside && std::find(B.begin(), B.end(), v) != B.end();
    }
    const bool got = support_criterion_check(f, B);
    if (got != inside) {
      std::string btext;
      for (Point p : B) btext += (btext.empty() ? "" : ",") + space->label(p);
      report.fail("f=" + to_text(f) + " B={" + btext + "}", inside ? "true" : "false",
                  got ? "true" : "false");
    }
  }
  report.finalize();
  return report;
}

LawReport check_support_membership(std::size_t samples, std::uint64_t seed) {
  LawReport report{"-", "support_membership", samples, {}};
  Rng rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const SpacePtr space = random_space(rng);
    const HmFn f = random_fn(space, rng);
    const Point x = random_point(rng, *space);
    const std::string in = "f=" + to_text(f) + " x=" + space->label(x);
    const bool scanned = std::find(f.fn.values().begin(), f.fn.values().end(), x) != f.fn.values().end();
    const SupportWitness got = support_membership_check(f, x);
    if (got.member != scanned) report.fail(in, scanned ? "true" : "false", got.member ? "true" : "false");
    const Rat mass = measure_preimage(f.fn, [&](Point p) { return p == x; });
    if (got.mass != mass) report.fail("witness " + in, mass.str(), got.mass.str());
    // Any [0,1]-valued psi with psi(x) = 1 averages at least the witness.
    for (int k = 0; k < 3; ++k) {
      std::vector<Rat> v;
      for (Point p : space->points()) {
        v.push_back(p == x ? Rat(1) : Rat(static_cast<std::int64_t>(pick(rng, 0, 6)), 6));
      }
      const TestFn psi(space, std::move(v));
      const Rat avg = functional_eval({psi, Window::unit()}, f);
      if (avg < got.mass) report.fail("psi bound " + in + " psi=" + values_text(psi), ">= " + got.mass.str(), avg.str());
    }
  }
  report.finalize();
  return report;
}

LawReport check_metric_axioms_hm(std::size_t samples, std::uint64_t seed) {
  LawReport report{"-", "metric_axioms_d_hm", samples, {}};
  Rng rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const SpacePtr space = random_space(rng);
    const HmFn f = random_fn(space, rng);
    const HmFn g = pick(rng, 0, 3) == 0 ? HmFn(space, resplit(f.fn)) : random_fn(space, rng);
    const HmFn h = random_fn(space, rng);
    metric_axioms(report, f, g, h, [](const HmFn& a, const HmFn& b) { return d_hm(a, b); },
                  [](const HmFn& a) { return to_text(a); });
  }
  report.finalize();
  return report;
}

LawReport check_metric_axioms_hm2(std::size_t samples, std::uint64_t seed) {
  LawReport report{"-", "metric_axioms_d_hm2", samples, {}};
  Rng rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const SpacePtr space = random_space(rng);
    const std::size_t grid = pick(rng, 1, 6);
    const HmFn2 f = random_hm2(space, grid, rng);
    const HmFn2 g = pick(rng, 0, 3) == 0 ? HmFn2(space, resplit(f.fn)) : random_hm2(space, grid, rng);
    const HmFn2 h = random_hm2(space, grid, rng);
    metric_axioms(report, f, g, h, [](const HmFn2& a, const HmFn2& b) { return d_hm2(a, b); },
                  [](const HmFn2& a) { return to_text(a); });
  }
  report.finalize();
  return report;
}

std::vector<LawReport> lemma_suite(std::size_t samples, std::uint64_t seed) {
  return {
      check_linearity(samples, seed),
      check_monotonicity(samples, seed + 1),
      check_coordinate_naturality(samples, seed + 2),
      check_unit_coordinates(samples, seed + 3),
      check_support_criterion(samples, seed + 4),
      check_support_membership(samples, seed + 5),
      check_metric_axioms_hm(samples, seed + 6),
      check_metric_axioms_hm2(samples, seed + 7),
  };
}

}  // namespace hmkit
