#include "hmkit/tower.hpp"

#include <map>
#include <utility>

#include "hmkit/error.hpp"
#include "hmkit/step_fn_io.hpp"

namespace hmkit {

namespace {

void check_points(const FiniteSpace& space, const PointFn& f) {
  for (const Point& p : f.values()) {
    if (!space.contains(p)) throw Error("step function value outside its space");
  }
}

void require_same(const SpacePtr& a, const SpacePtr& b, const char* what) {
  if (!same_space(a, b)) throw Error(std::string(what) + ": arguments live on different spaces");
}

std::string bracket(std::string s) { return "[" + std::move(s) + "]"; }

std::string point_fn2_text(const FiniteSpace& space, const PointFn2& F) {
  return to_text(F, [&](const PointFn& f) { return bracket(point_fn_text(space, f)); });
}

}  // namespace

HmFn2::HmFn2(SpacePtr s, PointFn2 f) : space(std::move(s)), fn(std::move(f)) {
  if (!space) throw Error("step function needs a space");
  for (const PointFn& inner : fn.values()) check_points(*space, inner);
}

HmFn3::HmFn3(SpacePtr s, PointFn3 f) : space(std::move(s)), fn(std::move(f)) {
  if (!space) throw Error("step function needs a space");
  for (const PointFn2& mid : fn.values()) {
    for (const PointFn& inner : mid.values()) check_points(*space, inner);
  }
}

HmFn2 h_eta(const HmFn& f) {
  return HmFn2(f.space, f.fn.map([](Point p) { return PointFn::constant(p); }));
}

HmFn2 eta_h(const HmFn& f) { return HmFn2(f.space, PointFn2::constant(f.fn)); }

HmFn2 h2_map(const SpaceMap& h, const HmFn2& F) {
  require_same(h.source(), F.space, "h2_map");
  return HmFn2(h.target(), F.fn.map([&](const PointFn& inner) {
    return inner.map([&](Point p) { return h(p); });
  }));
}

HmFn diagonal_flatten(const HmFn2& F) { return HmFn(F.space, flatten_diagonal(F.fn)); }

Rat d_hm2(const HmFn2& F, const HmFn2& G) {
  require_same(F.space, G.space, "d_hm2");
  Rat total(0);
  for_each_cell(F.fn, G.fn, [&](const Rat& lo, const Rat& hi, const PointFn& f, const PointFn& g) {
    if (f != g) total += (hi - lo) * d_hm(*F.space, f, g);
  });
  return total;
}

Rat iterated_functional_eval(const TestFn& phi, const Window& inner, const Window& outer,
                             const HmFn2& F) {
  require_same(phi.space, F.space, "iterated_functional_eval");
  Rat total(0);
  for (std::size_t i = 0; i < F.fn.pieces(); ++i) {
    const Rat len = overlap_length(F.fn.piece_start(i), F.fn.piece_end(i), outer);
    if (!len.is_zero()) total += len * window_average(phi, inner, F.fn.values()[i]);
  }
  return total / outer.length();
}

HmFn MuCandidate::operator()(const HmFn2& F) const {
  HmFn out = apply(F);
  if (!same_space(out.space, F.space)) {
    throw Error("candidate '" + name + "' changed the base space");
  }
  return out;
}

HmFn2 mu_inner(const MuCandidate& mu, const HmFn3& F) {
  return HmFn2(F.space, F.fn.map([&](const PointFn2& G) { return mu(HmFn2(F.space, G)).fn; }));
}

HmFn2 mu_outer(const MuCandidate& mu, const HmFn3& F) {
  // Distinct HM X values, in canonical order so the relabelling is deterministic.
  std::map<PointFn, Point> index;
  for (const PointFn2& mid : F.fn.values()) {
    for (const PointFn& inner : mid.values()) index.emplace(inner, Point{});
  }
  std::vector<const PointFn*> by_index;
  std::vector<std::string> labels;
  for (auto& [fn, p] : index) {
    p = Point{by_index.size()};
    labels.push_back("e" + std::to_string(by_index.size()));
    by_index.push_back(&fn);
  }
  const std::size_t n = by_index.size();
  std::vector<std::vector<Rat>> dist(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      dist[i][j] = dist[j][i] = d_hm(*F.space, *by_index[i], *by_index[j]);
    }
  }
  auto values = std::make_shared<const FiniteSpace>(std::move(labels), std::move(dist));

  HmFn2 relabelled(values, F.fn.map([&](const PointFn2& mid) {
    return mid.map([&](const PointFn& inner) { return index.at(inner); });
  }));
  const HmFn flat = mu(relabelled);
  return HmFn2(F.space, flat.fn.map([&](Point p) { return *by_index.at(p.index); }));
}

std::string to_text(const HmFn2& F) { return point_fn2_text(*F.space, F.fn); }

std::string to_text(const HmFn3& F) {
  return to_text(F.fn, [&](const PointFn2& G) { return bracket(point_fn2_text(*F.space, G)); });
}

HmFn2 parse_hm2(const SpacePtr& space, std::string_view text) {
  TextReader in(text);
  PointFn2 F = read_step_fn(in, [&](TextReader& r) {
    r.expect("[");
    PointFn inner = read_point_fn(*space, r);
    r.expect("]");
    return inner;
  });
  if (!in.done()) throw Error("trailing tokens in step-function text");
  return HmFn2(space, std::move(F));
}

HmFn2 random_hm2(const SpacePtr& space, std::size_t grid, Rng& rng) {
  return HmFn2(space, random_step_fn(rng, grid, [&](Rng& r) { return random_hm(space, grid, r).fn; }));
}

HmFn3 random_hm3(const SpacePtr& space, std::size_t grid, Rng& rng) {
  return HmFn3(space, random_step_fn(rng, grid, [&](Rng& r) { return random_hm2(space, grid, r).fn; }));
}

}  // namespace hmkit
