#pragma once

// Second and third levels of the tower: step functions whose values are
// step functions over a common base space.

#include <functional>
#include <string>
#include <string_view>

#include "hmkit/hm.hpp"

namespace hmkit {

using PointFn2 = StepFn<PointFn>;
using PointFn3 = StepFn<PointFn2>;

/// Dense part of H²X.
struct HmFn2 {
  SpacePtr space;
  PointFn2 fn;

  HmFn2(SpacePtr s, PointFn2 f);

  friend bool operator==(const HmFn2& a, const HmFn2& b) {
    return same_space(a.space, b.space) && a.fn == b.fn;
  }
};

/// Dense part of H³X.
struct HmFn3 {
  SpacePtr space;
  PointFn3 fn;

  HmFn3(SpacePtr s, PointFn3 f);

  friend bool operator==(const HmFn3& a, const HmFn3& b) {
    return same_space(a.space, b.space) && a.fn == b.fn;
  }
};

/// s ↦ unit(f(s))
HmFn2 h_eta(const HmFn& f);
/// The constant outer function with value f.
HmFn2 eta_h(const HmFn& f);
/// Applies hm_map(h, ·) to every inner value.
HmFn2 h2_map(const SpaceMap& h, const HmFn2& F);

/// s ↦ F(s)(s), computed by cutting each inner function to its outer block.
template <class V>
StepFn<V> flatten_diagonal(const StepFn<StepFn<V>>& F) {
  std::vector<Rat> breaks{Rat(0)};
  std::vector<V> values;
  for (std::size_t i = 0; i < F.pieces(); ++i) {
    const Rat& s0 = F.piece_start(i);
    const Rat& s1 = F.piece_end(i);
    const StepFn<V>& inner = F.values()[i];
    for (std::size_t j = 0; j < inner.pieces(); ++j) {
      const Rat& lo = max(inner.piece_start(j), s0);
      const Rat& hi = min(inner.piece_end(j), s1);
      if (!(lo < hi)) continue;
      values.push_back(inner.values()[j]);
      breaks.push_back(hi);
    }
  }
  return StepFn<V>::canonicalize(std::move(breaks), std::move(values));
}

HmFn diagonal_flatten(const HmFn2& F);

/// ∫₀¹ d_hm(F(s), G(s)) ds
Rat d_hm2(const HmFn2& F, const HmFn2& G);

/// (1/(d-c)) ∫_c^d φ_(a,b)(F(s)) ds with inner window (a,b), outer (c,d).
Rat iterated_functional_eval(const TestFn& phi, const Window& inner, const Window& outer,
                             const HmFn2& F);

/// A candidate multiplication H²X → HX, applied uniformly to every base space.
struct MuCandidate {
  std::string name;
  std::function<HmFn(const HmFn2&)> apply;

  /// Applies the candidate and checks it stayed on F's base space.
  HmFn operator()(const HmFn2& F) const;
};

/// H(μ): maps the candidate over the outer values of 𝔽.
HmFn2 mu_inner(const MuCandidate& mu, const HmFn3& F);

/// μ at the space HX: flattens the outer two levels of 𝔽. The finitely many
/// HM X values occurring in 𝔽 are relabelled as points of a finite space
/// (metrized by d_hm), the candidate runs there, and the result is mapped
/// back.
HmFn2 mu_outer(const MuCandidate& mu, const HmFn3& F);

std::string to_text(const HmFn2& F);
std::string to_text(const HmFn3& F);
HmFn2 parse_hm2(const SpacePtr& space, std::string_view text);

HmFn2 random_hm2(const SpacePtr& space, std::size_t grid, Rng& rng);
HmFn3 random_hm3(const SpacePtr& space, std::size_t grid, Rng& rng);

}  // namespace hmkit
