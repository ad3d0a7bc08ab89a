#include "hmkit/hm.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "hmkit/error.hpp"
#include "hmkit/step_fn_io.hpp"

namespace hmkit {

namespace {

void require_same(const SpacePtr& a, const SpacePtr& b, const char* what) {
  if (!same_space(a, b)) throw Error(std::string(what) + ": arguments live on different spaces");
}

}  // namespace

HmFn::HmFn(SpacePtr s, PointFn f) : space(std::move(s)), fn(std::move(f)) {
  if (!space) throw Error("step function needs a space");
  for (const Point& p : fn.values()) {
    if (!space->contains(p)) throw Error("step function value outside its space");
  }
}

Rat d_hm(const FiniteSpace& space, const PointFn& f, const PointFn& g) {
  Rat total(0);
  for_each_cell(f, g, [&](const Rat& lo, const Rat& hi, Point x, Point y) {
    if (x != y) total += (hi - lo) * space.dist(x, y);
  });
  return total;
}

Rat d_hm(const HmFn& f, const HmFn& g) {
  require_same(f.space, g.space, "d_hm");
  return d_hm(*f.space, f.fn, g.fn);
}

Rat window_average(const TestFn& phi, const Window& window, const PointFn& f) {
  Rat total(0);
  for (std::size_t i = 0; i < f.pieces(); ++i) {
    const Rat len = overlap_length(f.piece_start(i), f.piece_end(i), window);
    if (!len.is_zero()) total += len * phi(f.values()[i]);
  }
  return total / window.length();
}

Rat functional_eval(const Functional& F, const HmFn& f) {
  require_same(F.phi.space, f.space, "functional_eval");
  return window_average(F.phi, F.window, f.fn);
}

Pseudometric::Pseudometric(std::vector<Functional> functionals)
    : functionals_(std::move(functionals)) {
  if (functionals_.empty()) throw Error("pseudometric needs at least one functional");
  for (const auto& F : functionals_) {
    require_same(F.phi.space, functionals_.front().phi.space, "pseudometric");
  }
}

Rat pseudometric_eval(const Pseudometric& rho, const HmFn& f, const HmFn& g) {
  require_same(f.space, g.space, "pseudometric_eval");
  Rat best(0);
  for (const auto& F : rho.functionals()) {
    best = max(best, abs(functional_eval(F, f) - functional_eval(F, g)));
  }
  return best;
}

HmFn hm_map(const SpaceMap& h, const HmFn& f) {
  require_same(h.source(), f.space, "hm_map");
  return HmFn(h.target(), f.fn.map([&](Point p) { return h(p); }));
}

HmFn unit(Point x, const SpacePtr& space) {
  if (!space || !space->contains(x)) throw Error("unit: point not in space");
  return HmFn(space, PointFn::constant(x));
}

std::vector<Point> support(const HmFn& f) {
  std::set<Point> pts(f.fn.values().begin(), f.fn.values().end());
  return {pts.begin(), pts.end()};
}

std::vector<Window> spanned_windows(const PointFn& f) {
  std::vector<Window> out;
  const auto& t = f.breakpoints();
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = i + 1; j < t.size(); ++j) out.emplace_back(t[i], t[j]);
  }
  return out;
}

bool support_criterion_check(const HmFn& f, const std::vector<Point>& B) {
  if (B.empty()) throw Error("support_criterion_check: B must be nonempty");
  const auto windows = spanned_windows(f.fn);
  for (Point x : f.space->points()) {
    if (std::find(B.begin(), B.end(), x) != B.end()) continue;
    const TestFn phi = TestFn::indicator(f.space, x);
    for (const Window& w : windows) {
      if (!window_average(phi, w, f.fn).is_zero()) return false;
    }
  }
  return true;
}

SupportWitness support_membership_check(const HmFn& f, Point x) {
  if (!f.space->contains(x)) throw Error("support_membership_check: point not in space");
  // In a discrete space {x} is a neighbourhood of x, and the indicator of x
  // is the least [0,1]-valued function equal to 1 there.
  const Rat mass = window_average(TestFn::indicator(f.space, x), Window::unit(), f.fn);
  return SupportWitness{mass.sign() > 0, mass};
}

std::size_t hm_n_membership(const HmFn& f) { return f.fn.pieces(); }

std::string point_fn_text(const FiniteSpace& space, const PointFn& f) {
  return to_text(f, [&](Point p) { return space.label(p); });
}

std::string to_text(const HmFn& f) { return point_fn_text(*f.space, f.fn); }

PointFn read_point_fn(const FiniteSpace& space, TextReader& in) {
  return read_step_fn(in, [&](TextReader& r) { return space.at(r.next()); });
}

HmFn parse_hm(const SpacePtr& space, std::string_view text) {
  TextReader in(text);
  PointFn f = read_point_fn(*space, in);
  if (!in.done()) throw Error("trailing tokens in step-function text");
  return HmFn(space, std::move(f));
}

HmFn random_hm(const SpacePtr& space, std::size_t grid, Rng& rng) {
  return HmFn(space, random_step_fn(rng, grid, [&](Rng& r) { return random_point(r, *space); }));
}

HmFn random_hm(const SpacePtr& space, std::size_t grid, std::uint64_t seed) {
  Rng rng(seed);
  return random_hm(space, grid, rng);
}

}  // namespace hmkit
