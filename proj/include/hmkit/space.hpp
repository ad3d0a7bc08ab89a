#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hmkit/rat.hpp"

namespace hmkit {

/// Index of a point in a FiniteSpace.
struct Point {
  std::size_t index = 0;
  friend auto operator<=>(const Point&, const Point&) = default;
};

/// A finite compactum with an exact metric bounded by 1.
///
/// Construction checks the cheap axioms (zero diagonal, symmetry, positivity
/// off the diagonal, bound 1, distinct labels). The cubic triangle check is
/// available separately through triangle_violation().
class FiniteSpace {
 public:
  FiniteSpace(std::vector<std::string> labels, std::vector<std::vector<Rat>> dist);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(Point p) const { return labels_.at(p.index); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<Point> find(const std::string& label) const;
  Point at(const std::string& label) const;  // throws on unknown label
  bool contains(Point p) const { return p.index < labels_.size(); }
  const Rat& dist(Point x, Point y) const { return dist_.at(x.index).at(y.index); }
  std::vector<Point> points() const;

  /// First triple (i, j, k) with d(i,j) > d(i,k) + d(k,j), if any.
  std::optional<std::array<Point, 3>> triangle_violation() const;

  friend bool operator==(const FiniteSpace&, const FiniteSpace&) = default;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<Rat>> dist_;
};

using SpacePtr = std::shared_ptr<const FiniteSpace>;

/// Identity first, then structural comparison.
bool same_space(const SpacePtr& a, const SpacePtr& b);

/// A map between finite spaces. Every such map is continuous.
class SpaceMap {
 public:
  SpaceMap(SpacePtr source, SpacePtr target, std::vector<Point> assignment);

  static SpaceMap identity(SpacePtr space);

  const SpacePtr& source() const { return source_; }
  const SpacePtr& target() const { return target_; }
  const std::vector<Point>& assignment() const { return assignment_; }
  Point operator()(Point p) const { return assignment_.at(p.index); }

  /// Non-expanding: d(h x, h y) <= d(x, y) for all x, y.
  bool is_non_expanding() const;

 private:
  SpacePtr source_;
  SpacePtr target_;
  std::vector<Point> assignment_;
};

/// (outer ∘ inner), defined when inner's target is outer's source.
SpaceMap compose(const SpaceMap& outer, const SpaceMap& inner);

/// A real-valued function on a finite space (rational-valued here).
struct TestFn {
  SpacePtr space;
  std::vector<Rat> values;

  TestFn(SpacePtr s, std::vector<Rat> v);
  static TestFn constant(SpacePtr s, const Rat& c);
  static TestFn indicator(SpacePtr s, Point p);

  const Rat& operator()(Point p) const { return values.at(p.index); }
  Rat min_value() const;
  Rat max_value() const;
};

/// lambda1 * phi1 + lambda2 * phi2
TestFn linear_combination(const Rat& lambda1, const TestFn& phi1, const Rat& lambda2,
                          const TestFn& phi2);

/// phi ∘ h, a test function on h.source().
TestFn pull_back(const TestFn& phi, const SpaceMap& h);

/// An averaging window (a, b) with 0 <= a < b <= 1.
class Window {
 public:
  Window(Rat a, Rat b);
  static Window unit() { return Window(Rat(0), Rat(1)); }

  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }
  Rat length() const { return b_ - a_; }

  friend bool operator==(const Window&, const Window&) = default;

 private:
  Rat a_;
  Rat b_;
};

/// K_n: n points at mutual distance 1, labelled first_label .. first_label+n-1.
SpacePtr make_discrete_space(std::size_t n, int first_label = 1);

/// The two-point discrete space D = {0, 1}.
SpacePtr make_two_point_space();

struct ProductSpace {
  SpacePtr space;
  SpaceMap pr1;
  SpaceMap pr2;

  /// The point (x, y) of the product.
  Point pair(Point x, Point y) const;
};

/// X × Y with the max metric; labels are "(x,y)".
ProductSpace product_space(const SpacePtr& x, const SpacePtr& y);

}  // namespace hmkit
