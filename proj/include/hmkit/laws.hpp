#pragma once

// Verification harness: monad-law and naturality checks over any candidate
// multiplication, the staircase witnesses, the fiber-uniqueness oracle, the
// discontinuity probe, and the coordinate-lemma suites.

#include <cstdint>
#include <string>
#include <vector>

#include "hmkit/candidates.hpp"
#include "hmkit/tower.hpp"

namespace hmkit {

struct LawFailure {
  std::string input;
  std::string expected;
  std::string actual;

  friend bool operator==(const LawFailure&, const LawFailure&) = default;
  friend auto operator<=>(const LawFailure&, const LawFailure&) = default;
};

/// Outcome of one law check. The verdict is pass iff there are no failures.
struct LawReport {
  std::string candidate;
  std::string law;
  std::size_t samples = 0;
  std::vector<LawFailure> failures;

  bool passed() const { return failures.empty(); }
  void fail(std::string input, std::string expected, std::string actual);
  /// Sorts failures by input so reports do not depend on evaluation order.
  void finalize();

  friend bool operator==(const LawReport&, const LawReport&) = default;
};

struct ProbeRow {
  std::size_t n = 0;
  Rat coordinate_distance;
  Rat metric_distance;
  Rat image_gap;

  friend bool operator==(const ProbeRow&, const ProbeRow&) = default;
};

/// Staircase objects over K_n, K_n × K_n and D = {0,1}. Point i of K_n has
/// index i-1.
struct Witnesses {
  std::size_t n = 0;
  SpacePtr k_n;
  ProductSpace k_nn;
  SpacePtr d;
  HmFn alpha;                  // s ↦ (i,i) on block i
  HmFn beta;                   // s ↦ i on block i
  std::vector<HmFn> alpha_i;   // alpha_i(s) = (i,j) on block j
  HmFn2 a_n;                   // s ↦ alpha_i on block i
  std::vector<HmFn> gamma_i;   // indicator of block i, valued in D
  HmFn2 b_n;                   // s ↦ gamma_i on block i
  SpaceMap collapse;           // (i,j) ↦ 1 if i = j else 0

  const SpaceMap& pr1() const { return k_nn.pr1; }
  const SpaceMap& pr2() const { return k_nn.pr2; }
};

Witnesses build_witnesses(std::size_t n);

/// Just B_n over the two-point space d, without building K_n × K_n.
HmFn2 build_b_n(std::size_t n, const SpacePtr& d);

/// K_1, K_2, K_3, D, K_2 × K_2 and a three-point non-discrete metric space.
std::vector<SpacePtr> default_spaces();

/// n points at random rational distances in [1/2, 1].
SpacePtr random_metric_space(std::size_t n, Rng& rng);

LawReport check_unit_laws(const MuCandidate& mu, const std::vector<SpacePtr>& spaces,
                          std::size_t samples, std::uint64_t seed, std::size_t max_grid = 12);
LawReport check_associativity(const MuCandidate& mu, const std::vector<SpacePtr>& spaces,
                              std::size_t samples, std::uint64_t seed, std::size_t max_grid = 4);
LawReport check_naturality(const MuCandidate& mu, std::size_t map_samples, std::uint64_t seed,
                           std::size_t max_grid = 8);

struct FiberResult {
  bool unique = false;
  bool contains_alpha = false;
  std::uint64_t enumerated = 0;
  std::vector<HmFn> others;  // solutions other than alpha
};

constexpr std::uint64_t kDefaultFiberBudget = 20'000'000;

/// Enumerates every step function over K_n × K_n with breakpoints in
/// (1/(n m))Z and keeps those whose two projections both equal beta.
/// Throws BudgetExceeded when (n²)^(n m) exceeds the budget.
FiberResult fiber_uniqueness(std::size_t n, std::size_t m,
                             std::uint64_t budget = kDefaultFiberBudget);

LawReport fiber_report(std::size_t n, std::size_t m, std::uint64_t budget = kDefaultFiberBudget);

/// Rows n = 1..n_max comparing B_n with its limit eta_h(unit(0)) over D.
std::vector<ProbeRow> discontinuity_probe(const MuCandidate& mu, std::size_t n_max);
std::vector<ProbeRow> discontinuity_probe(const MuCandidate& mu, std::size_t n_lo,
                                          std::size_t n_hi);

/// Passes iff every row has image_gap = 1 and metric and coordinate
/// distances equal to 1/n.
LawReport probe_report(const std::string& candidate, const std::vector<ProbeRow>& rows);

/// Largest gap between F and G over all iterated coordinates built from
/// point indicators and inner/outer windows with endpoints in (1/grid)Z.
Rat coordinate_gap_sup(const HmFn2& F, const HmFn2& G, std::size_t grid);

/// Checks the four forcing steps on the witnesses for n. Failure inputs are
/// prefixed "step1" .. "step4".
LawReport forced_value_chain(std::size_t n, const MuCandidate& mu);

// Coordinate-lemma suites. Spaces have at most 5 points, grids at most 12.
LawReport check_linearity(std::size_t samples, std::uint64_t seed);
LawReport check_monotonicity(std::size_t samples, std::uint64_t seed);
LawReport check_coordinate_naturality(std::size_t samples, std::uint64_t seed);
LawReport check_unit_coordinates(std::size_t samples, std::uint64_t seed);
LawReport check_support_criterion(std::size_t samples, std::uint64_t seed);
LawReport check_support_membership(std::size_t samples, std::uint64_t seed);
LawReport check_metric_axioms_hm(std::size_t samples, std::uint64_t seed);
LawReport check_metric_axioms_hm2(std::size_t samples, std::uint64_t seed);

std::vector<LawReport> lemma_suite(std::size_t samples, std::uint64_t seed);

}  // namespace hmkit
