#include <doctest.h>

#include "hmkit/error.hpp"
#include "hmkit/space.hpp"

using namespace hmkit;

namespace {

// Exhaustive metric-axiom check over all triples.
bool is_metric(const FiniteSpace& s) {
  for (Point x : s.points()) {
    if (!s.dist(x, x).is_zero()) return false;
    for (Point y : s.points()) {
      if (s.dist(x, y) != s.dist(y, x) || s.dist(x, y) > Rat(1)) return false;
      if (x != y && !(s.dist(x, y) > Rat(0))) return false;
      for (Point z : s.points()) {
        if (s.dist(x, y) > s.dist(x, z) + s.dist(z, y)) return false;
      }
    }
  }
  return true;
}

}  // namespace

TEST_CASE("discrete spaces") {
  const auto k1 = make_discrete_space(1);
  CHECK(k1->size() == 1);
  CHECK(k1->dist(Point{0}, Point{0}) == Rat(0));

  const auto k2 = make_discrete_space(2);
  CHECK(k2->dist(k2->at("1"), k2->at("2")) == Rat(1));

  const auto k3 = make_discrete_space(3);
  CHECK(is_metric(*k3));
  CHECK_FALSE(k3->triangle_violation().has_value());
  for (Point x : k3->points()) {
    for (Point y : k3->points()) CHECK(k3->dist(x, y) == (x == y ? Rat(0) : Rat(1)));
  }

  const auto d = make_two_point_space();
  CHECK(d->labels() == std::vector<std::string>{"0", "1"});

  CHECK_THROWS_AS(make_discrete_space(0), Error);
}

TEST_CASE("product spaces use the max metric") {
  const auto k2 = make_discrete_space(2);
  const auto prod = product_space(k2, k2);
  CHECK(prod.space->size() == 4);
  const Point a = prod.space->at("(1,1)");
  const Point b = prod.space->at("(1,2)");
  CHECK(prod.space->dist(a, b) == Rat(1));
  CHECK(prod.space->dist(a, a) == Rat(0));
  CHECK(is_metric(*prod.space));

  const auto k3 = make_discrete_space(3);
  const auto p33 = product_space(k3, k3);
  const Point p = p33.space->at("(2,3)");
  CHECK(k3->label(p33.pr1(p)) == "2");
  CHECK(k3->label(p33.pr2(p)) == "3");
  CHECK(p33.pair(k3->at("2"), k3->at("3")) == p);

  std::vector<std::vector<Rat>> tri = {
      {Rat(0), Rat(1, 2), Rat(2, 3)}, {Rat(1, 2), Rat(0), Rat(1, 3)}, {Rat(2, 3), Rat(1, 3), Rat(0)}};
  auto x = std::make_shared<const FiniteSpace>(std::vector<std::string>{"a", "b", "c"}, tri);
  const auto mixed = product_space(x, k2);
  CHECK(is_metric(*mixed.space));
  CHECK(mixed.space->dist(mixed.space->at("(a,1)"), mixed.space->at("(b,1)")) == Rat(1, 2));
}

TEST_CASE("metric validation rejects bad tables") {
  using Table = std::vector<std::vector<Rat>>;
  const std::vector<std::string> ab = {"a", "b"};
  CHECK_THROWS_AS(FiniteSpace(ab, Table{{Rat(0), Rat(1)}, {Rat(1, 2), Rat(0)}}), Error);
  CHECK_THROWS_AS(FiniteSpace(ab, Table{{Rat(0), Rat(2)}, {Rat(2), Rat(0)}}), Error);
  CHECK_THROWS_AS(FiniteSpace(ab, Table{{Rat(0), Rat(0)}, {Rat(0), Rat(0)}}), Error);
  CHECK_THROWS_AS(FiniteSpace(ab, Table{{Rat(1), Rat(1)}, {Rat(1), Rat(0)}}), Error);
  CHECK_THROWS_AS(FiniteSpace({"a", "a"}, Table{{Rat(0), Rat(1)}, {Rat(1), Rat(0)}}), Error);
  CHECK_THROWS_AS(FiniteSpace({}, Table{}), Error);

  // Passes the cheap checks but breaks the triangle inequality.
  const FiniteSpace bent({"a", "b", "c"}, Table{{Rat(0), Rat(1), Rat(1, 4)},
                                                {Rat(1), Rat(0), Rat(1, 4)},
                                                {Rat(1, 4), Rat(1, 4), Rat(0)}});
  CHECK(bent.triangle_violation().has_value());
}

TEST_CASE("space maps, test functions and windows") {
  const auto k3 = make_discrete_space(3);
  const auto k2 = make_discrete_space(2);
  const SpaceMap h(k3, k2, {Point{0}, Point{1}, Point{1}});
  const SpaceMap g(k2, k3, {Point{2}, Point{0}});
  const SpaceMap gh = compose(g, h);
  CHECK(gh.assignment() == std::vector<Point>{Point{2}, Point{0}, Point{0}});
  CHECK(h.is_non_expanding());
  CHECK_THROWS_AS(compose(h, h), Error);
  CHECK_THROWS_AS(SpaceMap(k3, k2, {Point{0}}), Error);
  CHECK_THROWS_AS(SpaceMap(k3, k2, {Point{0}, Point{1}, Point{2}}), Error);

  const TestFn phi(k2, {Rat(3), Rat(-1, 2)});
  const TestFn pulled = pull_back(phi, h);
  CHECK(pulled.values == std::vector<Rat>{Rat(3), Rat(-1, 2), Rat(-1, 2)});
  CHECK(phi.min_value() == Rat(-1, 2));
  CHECK(phi.max_value() == Rat(3));
  CHECK_THROWS_AS(TestFn(k2, {Rat(1)}), Error);
  CHECK(linear_combination(Rat(2), phi, Rat(-1), TestFn::indicator(k2, Point{1})).values ==
        std::vector<Rat>{Rat(6), Rat(-2)});

  CHECK(Window(Rat(0), Rat(1)) == Window::unit());
  CHECK(Window(Rat(1, 3), Rat(1, 2)).length() == Rat(1, 6));
  CHECK_THROWS_AS(Window(Rat(1, 2), Rat(1, 2)), Error);
  CHECK_THROWS_AS(Window(Rat(-1, 2), Rat(1, 2)), Error);
  CHECK_THROWS_AS(Window(Rat(0), Rat(3, 2)), Error);
}
