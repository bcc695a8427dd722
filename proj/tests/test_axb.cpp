#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>

#include "symcone/axb.hpp"
#include "symcone/rng.hpp"

using namespace symcone;
using namespace symcone::axb;

namespace {

PlanePoint pt(double x, double y) {
  return PlanePoint(XReal::finite(x), XReal::finite(y));
}

}  // namespace

TEST_CASE("extended reals: tags, equality, validation") {
  CHECK(XReal::neg_inf() == XReal::neg_inf());
  CHECK(XReal::finite(2.0) == XReal::finite(2.0));
  CHECK_FALSE(XReal::finite(2.0) == XReal::finite(3.0));
  CHECK_FALSE(XReal::neg_inf() == XReal::finite(0.0));
  CHECK_FALSE(XReal::neg_inf() == XReal::pos_inf());
  CHECK(XReal::finite(1.5).is_finite());
  CHECK_FALSE(XReal::pos_inf().is_finite());

  CHECK_THROWS_AS(XReal::finite(std::numeric_limits<double>::infinity()), InvalidElement);
  CHECK_THROWS_AS(XReal::finite(std::numeric_limits<double>::quiet_NaN()), InvalidElement);
}

TEST_CASE("group elements and plane points validate their domains") {
  CHECK_NOTHROW(AffineElement(2.0, -3.0));
  CHECK_THROWS_AS(AffineElement(0.0, 1.0), InvalidElement);
  CHECK_THROWS_AS(AffineElement(-1.0, 0.0), InvalidElement);
  CHECK_THROWS_AS(AffineElement(std::numeric_limits<double>::quiet_NaN(), 0.0),
                  InvalidElement);

  CHECK_NOTHROW(PlanePoint(XReal::neg_inf(), XReal::pos_inf()));
  CHECK_THROWS_AS(PlanePoint(XReal::pos_inf(), XReal::finite(0.0)), InvalidElement);
  CHECK_THROWS_AS(PlanePoint(XReal::finite(0.0), XReal::neg_inf()), InvalidElement);
  CHECK_THROWS_AS(pt(0.0, -0.5), InvalidElement);
}

TEST_CASE("composition is associative and unital") {
  const AffineElement g(2.0, 3.0), h(1.5, -1.0), k(0.5, 4.0);
  const AffineElement lhs = compose(compose(g, h), k);
  const AffineElement rhs = compose(g, compose(h, k));
  CHECK(lhs.a == rhs.a);
  CHECK(lhs.b == rhs.b);

  const AffineElement id(1.0, 0.0);
  CHECK(compose(g, id).a == g.a);
  CHECK(compose(g, id).b == g.b);
  CHECK(compose(id, g).a == g.a);
  CHECK(compose(id, g).b == g.b);
}

TEST_CASE("plane action: fixed values and extended points") {
  const AffineElement g(2.0, 1.0);
  const PlanePoint q = act_plane(pt(-2.0, 0.5), g);
  CHECK(q.x == XReal::finite(-1.5));
  CHECK(q.y == XReal::finite(0.25));

  // Infinity tags are fixed by every group element.
  const PlanePoint inf_pt(XReal::neg_inf(), XReal::pos_inf());
  const PlanePoint qi = act_plane(inf_pt, g);
  CHECK(qi.x == XReal::neg_inf());
  CHECK(qi.y == XReal::pos_inf());
}

TEST_CASE("action law act(act(p,g),h) = act(p, gh)") {
  // Exact on tagged-infinite coordinates.
  const AffineElement g(3.0, -2.0), h(0.25, 5.0);
  const PlanePoint inf_pt(XReal::neg_inf(), XReal::pos_inf());
  const PlanePoint a = act_plane(act_plane(inf_pt, g), h);
  const PlanePoint b = act_plane(inf_pt, compose(g, h));
  CHECK(a.x == b.x);
  CHECK(a.y == b.y);

  // Within rounding on finite ones.
  RandomStream rng = sample_stream(5, "test.axb.law", 0);
  for (int i = 0; i < 50; ++i) {
    const PlanePoint p = pt(-10.0 * rng.uniform(), rng.uniform());
    const AffineElement gg(0.1 + 4.0 * rng.uniform(), 8.0 * rng.uniform() - 4.0);
    const AffineElement hh(0.1 + 4.0 * rng.uniform(), 8.0 * rng.uniform() - 4.0);
    const PlanePoint lhs = act_plane(act_plane(p, gg), hh);
    const PlanePoint rhs = act_plane(p, compose(gg, hh));
    CHECK(std::abs(lhs.x.value - rhs.x.value) <=
          1e-12 * std::max(1.0, std::abs(rhs.x.value)));
    CHECK(std::abs(lhs.y.value - rhs.y.value) <=
          1e-12 * std::max(1.0, std::abs(rhs.y.value)));
  }
}

TEST_CASE("membership: semigroup and orbit closure") {
  CHECK(in_semigroup(AffineElement(1.0, 0.0), false));
  CHECK_FALSE(in_semigroup(AffineElement(1.0, 0.0), true));
  CHECK(in_semigroup(AffineElement(2.0, 3.0), true));
  CHECK_FALSE(in_semigroup(AffineElement(0.5, 3.0), false));

  // The corner (0, 1) lies in the closure but not the open orbit.
  CHECK(in_X(pt(0.0, 1.0), false));
  CHECK_FALSE(in_X(pt(0.0, 1.0), true));
  CHECK(in_X(pt(-1.0, 0.5), true));
  CHECK_FALSE(in_X(pt(0.5, 0.5), false));

  // x = -inf is interior in x; y = +inf is never in the orbit closure.
  CHECK(in_X(PlanePoint(XReal::neg_inf(), XReal::finite(0.999)), true));
  CHECK_FALSE(in_X(PlanePoint(XReal::neg_inf(), XReal::pos_inf()), false));
}

TEST_CASE("open-orbit points are reached from the closure") {
  // q = (-3, 1/2) = act((0, 1), g) for the interior g = (2, 6).
  const AffineElement g(2.0, 6.0);
  REQUIRE(in_semigroup(g, true));
  const PlanePoint p = pt(0.0, 1.0);
  REQUIRE(in_X(p, false));
  const PlanePoint q = act_plane(p, g);
  CHECK(q.x == XReal::finite(-3.0));
  CHECK(q.y == XReal::finite(0.5));
  CHECK(in_X(q, true));
}

TEST_CASE("escape floor and threshold complement") {
  CHECK_THROWS_AS(escape_floor(0.0), ParameterOutOfRange);
  CHECK_THROWS_AS(escape_floor(1.0), ParameterOutOfRange);
  CHECK_THROWS_AS(escape_floor(-0.3), ParameterOutOfRange);
  CHECK_THROWS_AS(escape_floor_complement(0.0), ParameterOutOfRange);

  // floor(sigma(m)) = m: the threshold saturates the floor.
  const double s3 = 1.0 / (1.0 + std::exp(-3.0));
  CHECK(escape_floor(s3) == Catch::Approx(3.0).margin(1e-12));

  for (double m : {0.5, 1.0, 10.0, 50.0, 100.0, 700.0}) {
    const double c = escape_threshold_complement(m);
    REQUIRE(c > 0.0);
    CHECK(escape_floor_complement(c) == Catch::Approx(m).epsilon(1e-13));
  }

  // Both evaluation routes agree while 1 - c is still representable.
  const double c5 = escape_threshold_complement(5.0);
  CHECK(escape_floor(1.0 - c5) == Catch::Approx(escape_floor_complement(c5)).margin(1e-10));
}

TEST_CASE("escape deformation: identity, monotonicity, floor") {
  const PlanePoint p0 = pt(-7.5, 0.25);

  // s = 0 is the identity, bitwise, including on the infinite edge.
  const PlanePoint same = escape_homotopy(0.0, p0);
  CHECK(same.x == p0.x);
  CHECK(same.y == p0.y);
  const PlanePoint inf_pt(XReal::neg_inf(), XReal::finite(0.0));
  CHECK(escape_homotopy(0.0, inf_pt).x == XReal::neg_inf());

  CHECK_THROWS_AS(escape_homotopy(1.0, p0), ParameterOutOfRange);
  CHECK_THROWS_AS(escape_homotopy(-0.1, p0), ParameterOutOfRange);

  // y never moves; x is nondecreasing in s and respects the floor.
  double prev = -std::numeric_limits<double>::infinity();
  for (double s : {0.1, 0.3, 0.5, 0.9, 0.99}) {
    const PlanePoint q = escape_homotopy(s, p0);
    CHECK(q.y == p0.y);
    CHECK(q.x.value >= prev);
    CHECK(q.x.value >= escape_floor(s));
    CHECK(q.x.value >= p0.x.value);
    prev = q.x.value;
  }

  // Deep in the cylinder the floor is attained almost exactly.
  const PlanePoint deep = escape_homotopy(0.5, pt(-1000.0, 0.0));
  CHECK(deep.x.value == Catch::Approx(escape_floor(0.5)).margin(1e-12));
  const PlanePoint edge = escape_homotopy(0.5, inf_pt);
  CHECK(edge.x.value == Catch::Approx(escape_floor(0.5)).margin(1e-12));
}

TEST_CASE("escape clears arbitrarily large bounds") {
  // M = 10: past s* = sigma(10), every point has left x <= 10. At s* itself
  // the origin is already across.
  const double c10 = escape_threshold_complement(10.0);
  const double s10 = 1.0 - c10;
  CHECK(escape_floor(s10) == Catch::Approx(10.0).margin(1e-10));
  const PlanePoint q10 = escape_homotopy(s10, pt(0.0, 0.5));
  CHECK(q10.x.value > 10.0);
  const PlanePoint e10 = escape_homotopy(s10, PlanePoint(XReal::neg_inf(), XReal::finite(1.0)));
  CHECK(e10.x.value >= 10.0 - 1e-10);

  // M = 100: 1 - s* underflows past double precision, but the complement
  // form still certifies a parameter whose floor clears 100.
  const double c100 = escape_threshold_complement(100.0);
  REQUIRE(c100 > 0.0);
  CHECK(c100 < 1e-43);
  CHECK(escape_floor_complement(c100) == Catch::Approx(100.0).margin(1e-10));
  CHECK(escape_floor_complement(c100 / 2.0) > 100.0);
}
