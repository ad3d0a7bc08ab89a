#pragma once

// Piecewise-constant functions on [0,1) with rational breakpoints, generic
// over the value domain. Nesting StepFn<StepFn<...>> gives the higher levels
// of the tower.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <random>
#include <type_traits>
#include <utility>
#include <vector>

#include "hmkit/error.hpp"
#include "hmkit/rat.hpp"
#include "hmkit/space.hpp"

namespace hmkit {

/// Unvalidated piece list: values[i] holds on [breaks[i], breaks[i+1]).
template <class V>
struct RawPieces {
  std::vector<Rat> breaks;
  std::vector<V> values;
};

/// A step function in canonical form: breakpoints strictly increase from 0
/// to 1 and neighbouring pieces carry different values. Two step functions
/// that agree almost everywhere have identical canonical forms, so == is
/// a.e.-equality.
template <class V>
class StepFn {
 public:
  using value_type = V;

  static StepFn constant(V v) {
    StepFn f;
    f.breaks_ = {Rat(0), Rat(1)};
    f.values_.push_back(std::move(v));
    return f;
  }

  /// Drops zero-length pieces and merges equal neighbours. Throws Error when
  /// the breakpoints are unsorted, leave [0,1], or do not start at 0 and end
  /// at 1.
  static StepFn canonicalize(std::vector<Rat> breaks, std::vector<V> values) {
    if (values.empty() || breaks.size() != values.size() + 1) {
      throw Error("step function needs k >= 1 values and k+1 breakpoints");
    }
    if (!breaks.front().is_zero() || breaks.back() != Rat(1)) {
      throw Error("step function breakpoints must run from 0 to 1");
    }
    for (std::size_t i = 1; i < breaks.size(); ++i) {
      if (breaks[i] < breaks[i - 1]) throw Error("step function breakpoints must be sorted");
    }
    StepFn f;
    f.breaks_.push_back(Rat(0));
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (breaks[i + 1] == breaks[i]) continue;
      if (!f.values_.empty() && f.values_.back() == values[i]) {
        f.breaks_.back() = breaks[i + 1];
      } else {
        f.values_.push_back(std::move(values[i]));
        f.breaks_.push_back(breaks[i + 1]);
      }
    }
    return f;
  }

  static StepFn canonicalize(RawPieces<V> raw) {
    return canonicalize(std::move(raw.breaks), std::move(raw.values));
  }

  const std::vector<Rat>& breakpoints() const { return breaks_; }
  const std::vector<V>& values() const { return values_; }
  std::size_t pieces() const { return values_.size(); }
  const Rat& piece_start(std::size_t i) const { return breaks_[i]; }
  const Rat& piece_end(std::size_t i) const { return breaks_[i + 1]; }
  Rat piece_length(std::size_t i) const { return breaks_[i + 1] - breaks_[i]; }
  bool is_constant() const { return values_.size() == 1; }

  RawPieces<V> raw() const { return RawPieces<V>{breaks_, values_}; }

  /// Value at t in [0,1); a breakpoint belongs to the piece on its right.
  const V& evaluate(const Rat& t) const {
    if (t < Rat(0) || !(t < Rat(1))) throw Error("evaluation point " + t.str() + " outside [0,1)");
    const auto it = std::upper_bound(breaks_.begin(), breaks_.end(), t);
    return values_[static_cast<std::size_t>(it - breaks_.begin()) - 1];
  }

  /// Pointwise post-composition, canonicalized.
  template <class F>
  auto map(F&& fn) const -> StepFn<std::decay_t<std::invoke_result_t<F&, const V&>>> {
    using W = std::decay_t<std::invoke_result_t<F&, const V&>>;
    std::vector<W> mapped;
    mapped.reserve(values_.size());
    for (const V& v : values_) mapped.push_back(fn(v));
    return StepFn<W>::canonicalize(breaks_, std::move(mapped));
  }

  friend bool operator==(const StepFn&, const StepFn&) = default;
  friend auto operator<=>(const StepFn&, const StepFn&) = default;

 private:
  StepFn() = default;

  std::vector<Rat> breaks_;
  std::vector<V> values_;
};

template <class V>
StepFn<V> canonicalize(RawPieces<V> raw) {
  return StepFn<V>::canonicalize(std::move(raw));
}

/// One cell of a common refinement: both functions are constant on [lo, hi).
template <class V, class W>
struct Cell {
  Rat lo;
  Rat hi;
  V left;
  W right;

  Rat length() const { return hi - lo; }
};

/// Walks the common refinement of f and g in order, calling
/// fn(lo, hi, f-value, g-value) once per cell.
template <class V, class W, class Fn>
void for_each_cell(const StepFn<V>& f, const StepFn<W>& g, Fn&& fn) {
  std::size_t i = 0;
  std::size_t j = 0;
  Rat lo(0);
  while (i < f.pieces() && j < g.pieces()) {
    const Rat& fe = f.piece_end(i);
    const Rat& ge = g.piece_end(j);
    const Rat hi = min(fe, ge);
    fn(lo, hi, f.values()[i], g.values()[j]);
    if (fe == hi) ++i;
    if (ge == hi) ++j;
    lo = hi;
  }
}

template <class V, class W>
std::vector<Cell<V, W>> common_refinement(const StepFn<V>& f, const StepFn<W>& g) {
  std::vector<Cell<V, W>> cells;
  for_each_cell(f, g, [&](const Rat& lo, const Rat& hi, const V& v, const W& w) {
    cells.push_back(Cell<V, W>{lo, hi, v, w});
  });
  return cells;
}

/// Length of [lo, hi) ∩ (w.a, w.b).
inline Rat overlap_length(const Rat& lo, const Rat& hi, const Window& w) {
  const Rat& l = max(lo, w.a());
  const Rat& h = min(hi, w.b());
  return l < h ? h - l : Rat(0);
}

/// Lebesgue measure of {t in (w.a, w.b) : pred(f(t))}.
template <class V, class Pred>
Rat measure_preimage(const StepFn<V>& f, Pred&& pred, const Window& w = Window::unit()) {
  Rat total(0);
  for (std::size_t i = 0; i < f.pieces(); ++i) {
    if (pred(f.values()[i])) total += overlap_length(f.piece_start(i), f.piece_end(i), w);
  }
  return total;
}

/// Random canonical step function with breakpoints on the grid (1/grid)Z.
/// Each interior grid point becomes a breakpoint with probability 1/2 and
/// each piece draws its value from gen(rng).
template <class Rng, class Gen>
auto random_step_fn(Rng& rng, std::size_t grid, Gen&& gen)
    -> StepFn<std::decay_t<std::invoke_result_t<Gen&, Rng&>>> {
  using V = std::decay_t<std::invoke_result_t<Gen&, Rng&>>;
  if (grid == 0) throw Error("grid denominator must be >= 1");
  std::bernoulli_distribution cut(0.5);
  std::vector<Rat> breaks{Rat(0)};
  for (std::size_t k = 1; k < grid; ++k) {
    if (cut(rng)) breaks.emplace_back(static_cast<std::int64_t>(k), static_cast<std::int64_t>(grid));
  }
  breaks.emplace_back(1);
  std::vector<V> values;
  values.reserve(breaks.size() - 1);
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) values.push_back(gen(rng));
  return StepFn<V>::canonicalize(std::move(breaks), std::move(values));
}

/// Uniform random point of a space.
template <class Rng>
Point random_point(Rng& rng, const FiniteSpace& space) {
  std::uniform_int_distribution<std::size_t> pick(0, space.size() - 1);
  return Point{pick(rng)};
}

}  // namespace hmkit
