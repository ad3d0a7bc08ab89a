#pragma once

// Elements of HM X (step functions into a finite space), the metric d_HM,
// window-average coordinates, the functor action on maps, the unit and
// support.

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "hmkit/space.hpp"
#include "hmkit/step_fn.hpp"
#include "hmkit/step_fn_io.hpp"

namespace hmkit {

using Rng = std::mt19937_64;
using PointFn = StepFn<Point>;

/// An element of HM X: a canonical step function together with its space.
struct HmFn {
  SpacePtr space;
  PointFn fn;

  HmFn(SpacePtr s, PointFn f);

  friend bool operator==(const HmFn& a, const HmFn& b) {
    return same_space(a.space, b.space) && a.fn == b.fn;
  }
};

/// ∫₀¹ d(f(t), g(t)) dt over the common refinement.
Rat d_hm(const FiniteSpace& space, const PointFn& f, const PointFn& g);
Rat d_hm(const HmFn& f, const HmFn& g);

/// A window-average coordinate φ_(a,b).
struct Functional {
  TestFn phi;
  Window window;
};

/// (1/(b-a)) ∫_a^b φ(f(t)) dt for a bare step function.
Rat window_average(const TestFn& phi, const Window& window, const PointFn& f);
Rat functional_eval(const Functional& F, const HmFn& f);

/// max_i |F_i(f) - F_i(g)|
class Pseudometric {
 public:
  explicit Pseudometric(std::vector<Functional> functionals);
  const std::vector<Functional>& functionals() const { return functionals_; }

 private:
  std::vector<Functional> functionals_;
};

Rat pseudometric_eval(const Pseudometric& rho, const HmFn& f, const HmFn& g);

/// h ∘ f
HmFn hm_map(const SpaceMap& h, const HmFn& f);

/// The constant function at x.
HmFn unit(Point x, const SpacePtr& space);

/// Points taken on a set of positive measure, ascending.
std::vector<Point> support(const HmFn& f);

/// Windows (t_i, t_j) spanned by pairs of f's breakpoints; (0,1) is among them.
std::vector<Window> spanned_windows(const PointFn& f);

/// True iff every indicator of a point outside B averages to 0 over every
/// window spanned by f's breakpoints, i.e. f ∈ HM B by the vanishing-test
/// characterization.
bool support_criterion_check(const HmFn& f, const std::vector<Point>& B);

struct SupportWitness {
  bool member = false;
  /// Average over (0,1) of the indicator of x; by monotonicity of the
  /// coordinates this bounds from below the average of any [0,1]-valued ψ
  /// with ψ(x) = 1.
  Rat mass;
};

SupportWitness support_membership_check(const HmFn& f, Point x);

/// Least n with f ∈ HM_n: the piece count of the canonical form.
std::size_t hm_n_membership(const HmFn& f);

/// Text form with point labels as values, e.g. "0 1 1/2 2 1".
std::string to_text(const HmFn& f);
std::string point_fn_text(const FiniteSpace& space, const PointFn& f);
HmFn parse_hm(const SpacePtr& space, std::string_view text);
PointFn read_point_fn(const FiniteSpace& space, TextReader& in);

/// Random element with breakpoints on (1/grid)Z and uniform values.
HmFn random_hm(const SpacePtr& space, std::size_t grid, Rng& rng);
HmFn random_hm(const SpacePtr& space, std::size_t grid, std::uint64_t seed);

}  // namespace hmkit
