#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "symcone/sampling.hpp"
#include "symcone/wiener_hopf.hpp"

using namespace symcone;

namespace {

const std::vector<std::string> kAlgebras = {"rn:3", "sym:2", "sym:3", "spin:4",
                                            "sum(sym:2,spin:3)"};

RandomStream stream(std::uint64_t i, const char* tag) {
  return sample_stream(11, tag, i);
}

double rel(const Element& got, const Element& want) {
  return norm(got - want) / std::max(1.0, norm(want));
}

}  // namespace

TEST_CASE("compactified points live in the order interval") {
  const AlgebraDescriptor alg = parse_descriptor("rn:3");
  CHECK_NOTHROW(CompactifiedPoint(Element(alg, Vec{1.0, -1.0, 0.3})));
  CHECK_THROWS_AS(CompactifiedPoint(Element(alg, Vec{1.5, 0.0, 0.0})), OutOfInterval);
  CHECK_THROWS_AS(CompactifiedPoint(Element(alg, Vec{0.0, -1.2, 0.0})), OutOfInterval);
}

TEST_CASE("boundary datum validation") {
  const AlgebraDescriptor alg = parse_descriptor("sym:2");
  const Element e(alg, Vec{1.0, 0.0, 0.0});

  CHECK_NOTHROW(BoundaryPoint(e, Element(alg, Vec{0.0, 0.0, 2.0})));
  // Not an idempotent.
  CHECK_THROWS_AS(BoundaryPoint(2.0 * identity(alg), zero(alg)), InvalidBoundaryPoint);
  // x has a component in V_1(e).
  CHECK_THROWS_AS(BoundaryPoint(e, identity(alg)), InvalidBoundaryPoint);
  // x in V_0(e) but outside the cone.
  CHECK_THROWS_AS(BoundaryPoint(e, Element(alg, Vec{0.0, 0.0, -1.0})),
                  InvalidBoundaryPoint);
}

TEST_CASE("cayley chart: pinned values and domain") {
  for (const auto& name : kAlgebras) {
    const AlgebraDescriptor alg = parse_descriptor(name);
    const Element one = identity(alg);
    // 0 -> -1 and 1 -> 0, exactly in coordinates.
    CHECK(norm(cayley(zero(alg)).u + one) == 0.0);
    CHECK(norm(cayley(one).u) == 0.0);
    CHECK_THROWS_AS(cayley(-1.0 * one), NotInCone);
  }
}

TEST_CASE("chart embedding matches the scalar-calculus formula") {
  // Independent route: with f(t) = (t-1)/(t+1) extended over the full
  // spectrum of x (zeros map to -1), the chart image is f(x) + 2e.
  for (const auto& name : kAlgebras) {
    const AlgebraDescriptor alg = parse_descriptor(name);
    for (std::uint64_t i = 0; i < 10; ++i) {
      RandomStream rng = stream(i, (std::string("test.wh.embed.") + name).c_str());
      const BoundaryPoint bp = sample_boundary(alg, rng);
      const Element via_chart = embed(bp).u;
      const Element via_calculus =
          apply_scalar(bp.x, [](double t) { return (t - 1.0) / (t + 1.0); }) +
          2.0 * bp.e;
      CHECK(rel(via_chart, via_calculus) < 1e-9);
    }
  }
}

TEST_CASE("chart embedding: hand values") {
  {
    const AlgebraDescriptor alg = parse_descriptor("rn:3");
    const BoundaryPoint bp(Element(alg, Vec{1.0, 0.0, 0.0}),
                           Element(alg, Vec{0.0, 3.0, 0.0}));
    const Element u = embed(bp).u;
    CHECK(u.coords[0] == Catch::Approx(1.0).margin(1e-14));
    CHECK(u.coords[1] == Catch::Approx(0.5).margin(1e-14));
    CHECK(u.coords[2] == Catch::Approx(-1.0).margin(1e-14));
  }
  {
    // diag(3, 0) at e = 0: image is diag((3-1)/(3+1), -1).
    const AlgebraDescriptor alg = parse_descriptor("sym:2");
    const BoundaryPoint bp(zero(alg), Element(alg, Vec{3.0, 0.0, 0.0}));
    const Element u = embed(bp).u;
    CHECK(u.coords[0] == Catch::Approx(0.5).margin(1e-12));
    CHECK(u.coords[1] == Catch::Approx(0.0).margin(1e-12));
    CHECK(u.coords[2] == Catch::Approx(-1.0).margin(1e-12));
  }
}

TEST_CASE("corner points are exact") {
  for (const auto& name : kAlgebras) {
    const AlgebraDescriptor alg = parse_descriptor(name);
    const Element one = identity(alg);

    // (e, x) = (0, 0) is the bottom point -1.
    CHECK(norm(embed(BoundaryPoint(zero(alg), zero(alg))).u + one) == 0.0);
    // (e, x) = (1, 0) is the top point +1.
    CHECK(norm(embed(BoundaryPoint(one, zero(alg))).u - one) == 0.0);

    const BoundaryPoint bottom = represent(CompactifiedPoint(-1.0 * one));
    CHECK(norm(bottom.e) == 0.0);
    CHECK(norm(bottom.x) == 0.0);

    const BoundaryPoint top = represent(CompactifiedPoint(one));
    CHECK(norm(top.e - one) == 0.0);
    CHECK(norm(top.x) == 0.0);

    // u = 0 = cayley(1) sits at (e, x) = (0, 1).
    const BoundaryPoint mid = represent(CompactifiedPoint(zero(alg)));
    CHECK(norm(mid.e) == 0.0);
    CHECK(rel(mid.x, one) < 1e-12);
  }
}

TEST_CASE("represent inverts embed") {
  for (const auto& name : kAlgebras) {
    const AlgebraDescriptor alg = parse_descriptor(name);
    for (std::uint64_t i = 0; i < 10; ++i) {
      RandomStream rng = stream(i, (std::string("test.wh.rt.") + name).c_str());
      const BoundaryPoint bp = sample_boundary(alg, rng);
      const BoundaryPoint back = represent(embed(bp));
      CHECK(rel(back.e, bp.e) < 1e-7);
      CHECK(norm(back.x - bp.x) < 1e-7 * std::max(1.0, norm(bp.x)));
    }
  }
}

TEST_CASE("action: chart and resolvent routes agree") {
  for (const auto& name : kAlgebras) {
    const AlgebraDescriptor alg = parse_descriptor(name);
    for (std::uint64_t i = 0; i < 8; ++i) {
      RandomStream rng = stream(i, (std::string("test.wh.act.") + name).c_str());
      const CompactifiedPoint p = sample_X(alg, rng);
      const Element a = sample_interior(alg, rng);
      if (spectral_condition(a) > 1e6) continue;
      CHECK(rel(act(p, a).u, act_direct(p, a).u) < 1e-7);
    }
  }
}

TEST_CASE("action: semigroup law and fixed values") {
  const AlgebraDescriptor alg = parse_descriptor("sym:3");
  for (std::uint64_t i = 0; i < 8; ++i) {
    RandomStream rng = stream(i, "test.wh.semigroup");
    const CompactifiedPoint p = sample_X(alg, rng);
    const Element a = sample_cone(alg, rng);
    const Element b = sample_cone(alg, rng);
    CHECK(rel(act(act(p, a), b).u, act(p, a + b).u) < 1e-7);
  }

  // Acting on the bottom point translates the origin: (-1) + a = cayley(a).
  const Element a = identity(alg) + Element(alg, Vec{0.5, 0.1, 0.0, 0.2, 0.0, 0.3});
  const CompactifiedPoint bottom(-1.0 * identity(alg));
  CHECK(rel(act(bottom, a).u, cayley(a).u) < 1e-9);

  // The top point is absorbing.
  const CompactifiedPoint top(identity(alg));
  CHECK(norm(act(top, a).u - identity(alg)) == 0.0);

  CHECK_THROWS_AS(act(top, -1.0 * identity(alg)), NotInCone);
  CHECK_THROWS_AS(act_direct(top, Element(alg, Vec{1.0, 0.0, 0.0, 0.0, 0.0, 0.0})),
                  NotInteriorCone);
}

TEST_CASE("preimage undoes a translation when admissible") {
  const AlgebraDescriptor alg = parse_descriptor("sym:2");
  for (std::uint64_t i = 0; i < 8; ++i) {
    RandomStream rng = stream(i, "test.wh.preimage");
    const CompactifiedPoint p = sample_X(alg, rng);
    const Element a = sample_cone(alg, rng);

    const auto back = preimage(act(p, a), a);
    REQUIRE(back.has_value());
    CHECK(rel(back->u, p.u) < 1e-7);

    const auto same = preimage(p, zero(alg));
    REQUIRE(same.has_value());
    CHECK(rel(same->u, p.u) < 1e-8);
  }

  // Nothing maps to the bottom point under a strictly positive translation.
  const CompactifiedPoint bottom(-1.0 * identity(alg));
  CHECK_FALSE(preimage(bottom, identity(alg)).has_value());
  CHECK_THROWS_AS(preimage(bottom, -1.0 * identity(alg)), NotInCone);
}

TEST_CASE("admissible translations and their witnesses") {
  const AlgebraDescriptor alg = parse_descriptor("sym:3");
  const CompactifiedPoint bottom(-1.0 * identity(alg));
  CHECK(a_set_member(bottom, identity(alg)));
  CHECK_FALSE(a_set_member(bottom, -1.0 * identity(alg)));
  CHECK_THROWS_AS(a_set_witness(bottom, -1.0 * identity(alg)), NotMember);

  for (std::uint64_t i = 0; i < 8; ++i) {
    RandomStream rng = stream(i, "test.wh.witness");
    const CompactifiedPoint p = sample_X(alg, rng);
    const Element a = sample_cone(alg, rng);
    REQUIRE(a_set_member(p, a));

    const ASetWitness w = a_set_witness(p, a);
    CHECK(cone_classify(w.a1) == ConeClass::Interior);
    CHECK(cone_classify(w.a2) == ConeClass::Interior);
    CHECK(rel(act(p, w.a1).u, act(w.v, w.a2).u) < 1e-7);
  }
}

TEST_CASE("domination and interior membership") {
  const AlgebraDescriptor alg = parse_descriptor("spin:4");
  const Element one = identity(alg);

  CHECK(dominates(cayley(2.0 * one), one));
  CHECK_FALSE(dominates(cayley(one), one));
  CHECK_THROWS_AS(dominates(cayley(one), -1.0 * one), NotInCone);

  CHECK(interior_membership(cayley(one)));
  CHECK_FALSE(interior_membership(CompactifiedPoint(-1.0 * one)));

  RandomStream rng = stream(0, "test.wh.interior");
  const Element s = sample_singular_cone(alg, rng);
  CHECK_FALSE(interior_membership(cayley(s)));
}

TEST_CASE("deformation onto the bottom point") {
  const AlgebraDescriptor alg = parse_descriptor("sym:2");
  RandomStream rng = stream(0, "test.wh.homotopy");
  const CompactifiedPoint p = sample_X(alg, rng);
  const Element one = identity(alg);

  CHECK(norm(homotopy_point(1.0, p).u - p.u) == 0.0);
  CHECK(norm(homotopy_point(0.0, p).u + one) == 0.0);
  CHECK_THROWS_AS(homotopy_point(1.5, p), ParameterOutOfRange);
  CHECK_THROWS_AS(homotopy_point(-0.1, p), ParameterOutOfRange);

  // Intermediate times stay inside X (the constructor checks the interval).
  for (double t : {0.1, 0.25, 0.5, 0.75, 0.9})
    CHECK_NOTHROW(homotopy_point(t, p));

  // The bottom eigenvalue is preserved for t > 0: t(mu+1) - 1 = -1 iff mu = -1.
  RandomStream rng2 = stream(1, "test.wh.homotopy");
  const Element s = sample_singular_cone(alg, rng2);
  CHECK(spectrum_contains(homotopy_point(0.5, cayley(s)).u, -1.0));
  CHECK_FALSE(spectrum_contains(homotopy_point(0.5, cayley(identity(alg))).u, -1.0));
}

TEST_CASE("samplers produce valid points") {
  for (const auto& name : kAlgebras) {
    const AlgebraDescriptor alg = parse_descriptor(name);
    for (std::uint64_t i = 0; i < 5; ++i) {
      RandomStream rng = stream(i, (std::string("test.wh.sample.") + name).c_str());
      CHECK_NOTHROW(sample_X(alg, rng));
      CHECK_NOTHROW(sample_boundary(alg, rng));
    }
  }
}
