#include "hmkit/space.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <utility>

#include "hmkit/error.hpp"

namespace hmkit {

FiniteSpace::FiniteSpace(std::vector<std::string> labels, std::vector<std::vector<Rat>> dist)
    : labels_(std::move(labels)), dist_(std::move(dist)) {
  const std::size_t n = labels_.size();
  if (n == 0) throw Error("finite space must have at least one point");
  if (std::set<std::string>(labels_.begin(), labels_.end()).size() != n) {
    throw Error("finite space labels must be distinct");
  }
  if (dist_.size() != n) throw Error("distance table must be n x n");
  for (std::size_t i = 0; i < n; ++i) {
    if (dist_[i].size() != n) throw Error("distance table must be n x n");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!dist_[i][i].is_zero()) throw Error("d(x,x) must be 0");
    for (std::size_t j = 0; j < n; ++j) {
      const Rat& d = dist_[i][j];
      if (d != dist_[j][i]) throw Error("distance table must be symmetric");
      if (d > Rat(1) || d < Rat(0)) throw Error("distances must lie in [0,1]");
      if (i != j && d.is_zero()) throw Error("distinct points must have positive distance");
    }
  }
}

std::optional<Point> FiniteSpace::find(const std::string& label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return Point{static_cast<std::size_t>(it - labels_.begin())};
}

Point FiniteSpace::at(const std::string& label) const {
  if (auto p = find(label)) return *p;
  throw Error("unknown point label '" + label + "'");
}

std::vector<Point> FiniteSpace::points() const {
  std::vector<Point> out(size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = Point{i};
  return out;
}

std::optional<std::array<Point, 3>> FiniteSpace::triangle_violation() const {
  const std::size_t n = size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (dist_[i][j] > dist_[i][k] + dist_[k][j]) {
          return std::array<Point, 3>{Point{i}, Point{j}, Point{k}};
        }
      }
    }
  }
  return std::nullopt;
}

bool same_space(const SpacePtr& a, const SpacePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

SpaceMap::SpaceMap(SpacePtr source, SpacePtr target, std::vector<Point> assignment)
    : source_(std::move(source)), target_(std::move(target)), assignment_(std::move(assignment)) {
  if (!source_ || !target_) throw Error("space map needs a source and a target");
  if (assignment_.size() != source_->size()) {
    throw Error("space map must assign exactly one image to every source point");
  }
  for (const Point& p : assignment_) {
    if (!target_->contains(p)) throw Error("space map image outside target");
  }
}

SpaceMap SpaceMap::identity(SpacePtr space) {
  auto pts = space->points();
  return SpaceMap(space, space, std::move(pts));
}

bool SpaceMap::is_non_expanding() const {
  for (Point x : source_->points()) {
    for (Point y : source_->points()) {
      if (target_->dist((*this)(x), (*this)(y)) > source_->dist(x, y)) return false;
    }
  }
  return true;
}

SpaceMap compose(const SpaceMap& outer, const SpaceMap& inner) {
  if (!same_space(inner.target(), outer.source())) {
    throw Error("cannot compose maps: intermediate spaces differ");
  }
  std::vector<Point> assignment;
  assignment.reserve(inner.assignment().size());
  for (Point p : inner.assignment()) assignment.push_back(outer(p));
  return SpaceMap(inner.source(), outer.target(), std::move(assignment));
}

TestFn::TestFn(SpacePtr s, std::vector<Rat> v) : space(std::move(s)), values(std::move(v)) {
  if (!space) throw Error("test function needs a space");
  if (values.size() != space->size()) throw Error("test function must have one value per point");
}

TestFn TestFn::constant(SpacePtr s, const Rat& c) {
  const std::size_t n = s->size();
  return TestFn(std::move(s), std::vector<Rat>(n, c));
}

TestFn TestFn::indicator(SpacePtr s, Point p) {
  std::vector<Rat> v(s->size(), Rat(0));
  v.at(p.index) = Rat(1);
  return TestFn(std::move(s), std::move(v));
}

Rat TestFn::min_value() const { return *std::min_element(values.begin(), values.end()); }
Rat TestFn::max_value() const { return *std::max_element(values.begin(), values.end()); }

TestFn linear_combination(const Rat& lambda1, const TestFn& phi1, const Rat& lambda2,
                          const TestFn& phi2) {
  if (!same_space(phi1.space, phi2.space)) throw Error("test functions live on different spaces");
  std::vector<Rat> v(phi1.values.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = lambda1 * phi1.values[i] + lambda2 * phi2.values[i];
  }
  return TestFn(phi1.space, std::move(v));
}

TestFn pull_back(const TestFn& phi, const SpaceMap& h) {
  if (!same_space(phi.space, h.target())) throw Error("test function is not on the map's target");
  std::vector<Rat> v;
  v.reserve(h.source()->size());
  for (Point p : h.assignment()) v.push_back(phi(p));
  return TestFn(h.source(), std::move(v));
}

Window::Window(Rat a, Rat b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_ < Rat(0) || b_ > Rat(1) || !(a_ < b_)) {
    throw Error("window must satisfy 0 <= a < b <= 1, got (" + a_.str() + "," + b_.str() + ")");
  }
}

SpacePtr make_discrete_space(std::size_t n, int first_label) {
  if (n == 0) throw Error("discrete space needs n >= 1");
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(first_label + static_cast<int>(i)));
  std::vector<std::vector<Rat>> dist(n, std::vector<Rat>(n, Rat(1)));
  for (std::size_t i = 0; i < n; ++i) dist[i][i] = Rat(0);
  return std::make_shared<const FiniteSpace>(std::move(labels), std::move(dist));
}

SpacePtr make_two_point_space() { return make_discrete_space(2, 0); }

Point ProductSpace::pair(Point x, Point y) const {
  const std::size_t width = pr2.target()->size();
  return Point{x.index * width + y.index};
}

ProductSpace product_space(const SpacePtr& x, const SpacePtr& y) {
  const std::size_t nx = x->size();
  const std::size_t ny = y->size();
  std::vector<std::string> labels;
  labels.reserve(nx * ny);
  std::vector<Point> p1;
  std::vector<Point> p2;
  for (std::size_t i = 0; i < nx; ++i) {
    for (std::size_t j = 0; j < ny; ++j) {
      labels.push_back("(" + x->label(Point{i}) + "," + y->label(Point{j}) + ")");
      p1.push_back(Point{i});
      p2.push_back(Point{j});
    }
  }
  std::vector<std::vector<Rat>> dist(nx * ny, std::vector<Rat>(nx * ny));
  for (std::size_t a = 0; a < nx * ny; ++a) {
    for (std::size_t b = 0; b < nx * ny; ++b) {
      dist[a][b] = max(x->dist(p1[a], p1[b]), y->dist(p2[a], p2[b]));
    }
  }
  auto space = std::make_shared<const FiniteSpace>(std::move(labels), std::move(dist));
  return ProductSpace{space, SpaceMap(space, x, std::move(p1)), SpaceMap(space, y, std::move(p2))};
}

}  // namespace hmkit
