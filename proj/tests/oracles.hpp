#pragma once

// Brute-force references that sample on a uniform grid fine enough to make
// every function constant on each cell. They share no code with the
// merge-based integration in the library.

#include <vector>

#include "hmkit/tower.hpp"

namespace oracle {

using namespace hmkit;

inline std::int64_t common_denominator(const std::vector<Rat>& pts) {
  mpz_class l = 1;
  for (const Rat& r : pts) l = lcm(l, r.den());
  return l.get_si();
}

template <class V>
void add_breaks(std::vector<Rat>& pts, const StepFn<V>& f) {
  pts.insert(pts.end(), f.breakpoints().begin(), f.breakpoints().end());
}

inline std::vector<Rat> cell_starts(std::int64_t n) {
  std::vector<Rat> out;
  for (std::int64_t k = 0; k < n; ++k) out.emplace_back(k, n);
  return out;
}

inline Rat d_hm(const FiniteSpace& space, const PointFn& f, const PointFn& g) {
  std::vector<Rat> pts;
  add_breaks(pts, f);
  add_breaks(pts, g);
  const std::int64_t n = common_denominator(pts);
  Rat total(0);
  for (const Rat& t : cell_starts(n)) total += space.dist(f.evaluate(t), g.evaluate(t));
  return total / Rat(n);
}

inline Rat average(const TestFn& phi, const Window& w, const PointFn& f) {
  std::vector<Rat> pts{w.a(), w.b()};
  add_breaks(pts, f);
  const std::int64_t n = common_denominator(pts);
  Rat total(0);
  for (const Rat& t : cell_starts(n)) {
    if (t >= w.a() && t < w.b()) total += phi(f.evaluate(t));
  }
  return total / Rat(n) / w.length();
}

inline Rat d_hm2(const FiniteSpace& space, const PointFn2& F, const PointFn2& G) {
  std::vector<Rat> pts;
  add_breaks(pts, F);
  add_breaks(pts, G);
  const std::int64_t n = common_denominator(pts);
  Rat total(0);
  for (const Rat& s : cell_starts(n)) total += oracle::d_hm(space, F.evaluate(s), G.evaluate(s));
  return total / Rat(n);
}

/// True iff flat(t) = F(t)(t) at every cell of a common fine grid.
template <class V>
bool is_diagonal(const StepFn<V>& flat, const StepFn<StepFn<V>>& F) {
  std::vector<Rat> pts;
  add_breaks(pts, flat);
  add_breaks(pts, F);
  for (const auto& inner : F.values()) add_breaks(pts, inner);
  for (const Rat& t : cell_starts(common_denominator(pts))) {
    if (!(flat.evaluate(t) == F.evaluate(t).evaluate(t))) return false;
  }
  return true;
}

}  // namespace oracle
