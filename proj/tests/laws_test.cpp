#include <doctest.h>

#include "hmkit/error.hpp"
#include "hmkit/laws.hpp"

using namespace hmkit;

namespace {

bool has_failure_with_prefix(const LawReport& r, const std::string& prefix) {
  for (const auto& f : r.failures) {
    if (f.input.rfind(prefix, 0) == 0) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("witnesses") {
  const Witnesses w1 = build_witnesses(1);
  CHECK(w1.alpha == unit(Point{0}, w1.k_nn.space));
  CHECK(w1.beta == unit(Point{0}, w1.k_n));
  CHECK(w1.b_n == eta_h(unit(Point{1}, w1.d)));

  const Witnesses w2 = build_witnesses(2);
  CHECK(w2.alpha.fn.pieces() == 2);
  CHECK(w2.a_n.fn.pieces() == 2);
  for (const PointFn& inner : w2.a_n.fn.values()) CHECK(inner.pieces() == 2);
  CHECK(to_text(w2.alpha) == "0 (1,1) 1/2 (2,2) 1");
  CHECK(to_text(w2.alpha_i[1]) == "0 (2,1) 1/2 (2,2) 1");
  CHECK(to_text(w2.gamma_i[0]) == "0 1 1/2 0 1");

  for (std::size_t n = 1; n <= 8; ++n) {
    const Witnesses w = build_witnesses(n);
    CHECK(hm_map(w.pr1(), w.alpha) == w.beta);
    CHECK(hm_map(w.pr2(), w.alpha) == w.beta);
    CHECK(h2_map(w.pr1(), w.a_n) == h_eta(w.beta));
    CHECK(h2_map(w.pr2(), w.a_n) == eta_h(w.beta));
    CHECK(h2_map(w.collapse, w.a_n) == w.b_n);
    CHECK(d_hm2(w.b_n, eta_h(unit(Point{0}, w.d))) == Rat(1, static_cast<std::int64_t>(n)));
    if (n > 1) CHECK(w.beta.fn.evaluate(Rat(1, static_cast<std::int64_t>(n))) == Point{1});
  }
  CHECK_THROWS_AS(build_witnesses(0), Error);
}

TEST_CASE("unit laws") {
  const auto spaces = default_spaces();
  CHECK(check_unit_laws(diagonal_candidate(), spaces, 200, 1).passed());

  const LawReport left = check_unit_laws(constant_left_candidate(), spaces, 200, 1);
  CHECK_FALSE(left.passed());
  CHECK(has_failure_with_prefix(left, "mu.H(eta)"));
  CHECK_FALSE(has_failure_with_prefix(left, "mu.eta(H)"));

  // f = beta_2 is a concrete witness.
  const Witnesses w = build_witnesses(2);
  CHECK(constant_left_candidate()(h_eta(w.beta)) == unit(Point{0}, w.k_n));

  const std::vector<SpacePtr> single{make_discrete_space(1)};
  for (const auto& name : candidate_names()) {
    CHECK(check_unit_laws(*find_candidate(name), single, 50, 3).passed());
  }
}

TEST_CASE("associativity") {
  const auto spaces = default_spaces();
  CHECK(check_associativity(diagonal_candidate(), spaces, 100, 2).passed());

  // F ↦ F(0) is associative: both sides evaluate to 𝔽(0)(0).
  CHECK(check_associativity(constant_left_candidate(), spaces, 100, 2).passed());

  // Constant 𝔽 gives equal sides for every candidate obeying the unit laws.
  const Witnesses w = build_witnesses(3);
  const HmFn3 constant(w.k_n, PointFn3::constant(PointFn2::constant(w.beta.fn)));
  const MuCandidate mu = diagonal_candidate();
  CHECK(mu(mu_inner(mu, constant)) == mu(mu_outer(mu, constant)));
  CHECK(mu(mu_inner(mu, constant)) == w.beta);

  const LawReport remap = check_associativity(remap_last_candidate(), spaces, 200, 2);
  CHECK(remap.samples == 200);
  CHECK_FALSE(remap.passed());
}

TEST_CASE("naturality") {
  CHECK(check_naturality(diagonal_candidate(), 200, 4).passed());
  CHECK(check_naturality(constant_left_candidate(), 200, 4).passed());

  const LawReport remap = check_naturality(remap_last_candidate(), 200, 4);
  CHECK_FALSE(remap.passed());
  CHECK(std::is_sorted(remap.failures.begin(), remap.failures.end()));

  // The identity map commutes with any candidate.
  Rng rng(8);
  const auto spaces = default_spaces();
  for (const auto& name : candidate_names()) {
    const MuCandidate mu = *find_candidate(name);
    for (const SpacePtr& s : spaces) {
      const HmFn2 F = random_hm2(s, 5, rng);
      const SpaceMap id = SpaceMap::identity(s);
      CHECK(mu(h2_map(id, F)) == hm_map(id, mu(F)));
    }
  }
}

TEST_CASE("reports are independent of evaluation order") {
  const LawReport a = check_naturality(remap_last_candidate(), 100, 9);
  const LawReport b = check_naturality(remap_last_candidate(), 100, 9);
  CHECK(a == b);
  LawReport shuffled = a;
  std::reverse(shuffled.failures.begin(), shuffled.failures.end());
  shuffled.finalize();
  CHECK(shuffled == a);
}

TEST_CASE("fiber uniqueness oracle") {
  for (std::size_t m = 1; m <= 4; ++m) {
    const FiberResult r = fiber_uniqueness(1, m);
    CHECK(r.unique);
    CHECK(r.enumerated == 1);
  }
  const FiberResult r22 = fiber_uniqueness(2, 2);
  CHECK(r22.unique);
  CHECK(r22.contains_alpha);
  CHECK(r22.others.empty());
  CHECK(r22.enumerated == 256);

  CHECK(fiber_uniqueness(2, 1).unique);
  CHECK(fiber_uniqueness(3, 1).unique);
  CHECK(fiber_report(2, 3).passed());

  CHECK_THROWS_AS(fiber_uniqueness(4, 2), BudgetExceeded);
  CHECK_THROWS_AS(fiber_uniqueness(2, 2, 255), BudgetExceeded);
  CHECK_NOTHROW(fiber_uniqueness(2, 2, 256));
}

TEST_CASE("discontinuity probe") {
  const auto rows = discontinuity_probe(diagonal_candidate(), 8);
  REQUIRE(rows.size() == 8);
  CHECK(rows[0] == ProbeRow{1, Rat(1), Rat(1), Rat(1)});
  CHECK(rows[3] == ProbeRow{4, Rat(1, 4), Rat(1, 4), Rat(1)});
  CHECK(probe_report("diagonal", rows).passed());

  // Any candidate with mu(B_n) = unit(1) and mu(limit) = unit(0) has gap 1.
  const MuCandidate forced{"forced", [](const HmFn2& F) {
                             const bool is_limit = F.fn.is_constant() && F.fn.values()[0].is_constant() &&
                                                   F.fn.values()[0].values()[0] == Point{0};
                             return unit(Point{is_limit ? 0u : 1u}, F.space);
                           }};
  for (const ProbeRow& r : discontinuity_probe(forced, 12)) CHECK(r.image_gap == Rat(1));

  // A candidate that maps everything to unit(0) has no gap and fails the probe.
  const MuCandidate flat{"flat", [](const HmFn2& F) { return unit(Point{0}, F.space); }};
  const LawReport r = probe_report("flat", discontinuity_probe(flat, 3));
  CHECK_FALSE(r.passed());
  CHECK(r.failures.size() == 3);

  CHECK_THROWS_AS(discontinuity_probe(diagonal_candidate(), 0), Error);
}

TEST_CASE("convergence in iterated coordinates") {
  const auto d = make_two_point_space();
  const HmFn2 limit = eta_h(unit(Point{0}, d));
  // With windows on (1/4)Z the largest coordinate gap to the limit is
  // (1/n) / (1/4): an inner window of length 1/4 containing one whole block.
  for (std::size_t n : {4, 8, 16, 32}) {
    CHECK(coordinate_gap_sup(build_witnesses(n).b_n, limit, 4) == Rat(4, static_cast<std::int64_t>(n)));
  }
  CHECK(coordinate_gap_sup(limit, limit, 3).is_zero());
}

TEST_CASE("forcing chain") {
  CHECK(forced_value_chain(1, diagonal_candidate()).passed());
  for (std::size_t n = 2; n <= 5; ++n) {
    const LawReport r = forced_value_chain(n, diagonal_candidate());
    CHECK(r.passed());
    CHECK(r.samples == 4);
  }
  // n = 1 degenerates for every candidate that obeys the unit laws.
  CHECK(forced_value_chain(1, constant_left_candidate()).passed());

  const LawReport left = forced_value_chain(3, constant_left_candidate());
  CHECK(has_failure_with_prefix(left, "step1"));

  const LawReport remap = forced_value_chain(3, remap_last_candidate());
  CHECK((has_failure_with_prefix(remap, "step2") || has_failure_with_prefix(remap, "step4")));
}

TEST_CASE("coordinate lemma suites") {
  for (const LawReport& r : lemma_suite(150, 77)) {
    INFO(r.law);
    CHECK(r.passed());
    CHECK(r.samples == 150);
  }
}

TEST_CASE("build_b_n matches the full witness set") {
  for (std::size_t n = 1; n <= 6; ++n) {
    const Witnesses w = build_witnesses(n);
    CHECK(build_b_n(n, w.d) == w.b_n);
  }
  CHECK_THROWS_AS(build_b_n(0, make_two_point_space()), Error);
  CHECK_THROWS_AS(build_b_n(2, make_discrete_space(3)), Error);
}
