#include <doctest.h>

#include <set>
#include <stdexcept>
#include <string>

#include "toriq/fan.hpp"

using namespace toriq;

namespace {

std::size_t pow_size(std::size_t base, int e) {
  std::size_t r = 1;
  while (e-- > 0) r *= base;
  return r;
}

// +/- e_i as rational points.
std::set<RationalVector> cross_polytope(int m) {
  std::set<RationalVector> out;
  for (int i = 0; i < m; ++i)
    for (int s : {1, -1}) {
      RationalVector v(static_cast<std::size_t>(m));
      v[static_cast<std::size_t>(i)] = s;
      out.insert(v);
    }
  return out;
}

}  // namespace

TEST_CASE("two quadrants sharing a ray form a fan") {
  const Cone a = cone_from_generators({{1, 0}, {0, 1}});
  const Cone b = cone_from_generators({{0, 1}, {-1, 0}});
  const Fan f = fan_from_cones({a, b, a});
  CHECK(f.maximal_cones().size() == 2);
  CHECK(f.cones().size() == 6);  // 2 quadrants, 3 rays, the apex
  CHECK(fan_is_smooth(f));
}

TEST_CASE("faces of listed cones are not maximal") {
  const Cone a = cone_from_generators({{1, 0}, {0, 1}});
  const Cone ray = cone_from_generators({{1, 0}});
  const Fan f = fan_from_cones({ray, a});
  CHECK(f.maximal_cones() == std::vector<Cone>{a});
}

TEST_CASE("overlapping cones violate the fan axiom") {
  const Cone a = cone_from_generators({{1, 0}, {0, 1}});
  const Cone b = cone_from_generators({{1, 1}, {-1, 1}});
  try {
    fan_from_cones({a, b});
    FAIL("expected a domain error");
  } catch (const std::domain_error& e) {
    const std::string what = e.what();
    CHECK(what.find(a.to_string()) != std::string::npos);
    CHECK(what.find(b.to_string()) != std::string::npos);
  }
  CHECK_THROWS_AS(fan_from_cones({Cone::from_generators({{1, 0}, {-1, 0}}, 2)}), std::domain_error);
  CHECK_THROWS_AS(fan_from_cones({}), std::invalid_argument);
}

TEST_CASE("non-smooth maximal cone makes the fan singular") {
  const Fan f = fan_from_cones({cone_from_generators({{1, 0}, {1, 2}})});
  CHECK_FALSE(fan_is_smooth(f));
}

TEST_CASE("cube polytope") {
  for (int m = 1; m <= 5; ++m) {
    const Polytope c = cube_polytope(m);
    CHECK(c.vertices().size() == pow_size(2, m));
    CHECK(c.facet_inequalities().size() == static_cast<std::size_t>(2 * m));
    CHECK(c.contains_origin_in_interior());
  }
  CHECK_THROWS_AS(cube_polytope(0), std::invalid_argument);
  CHECK_THROWS_AS(cube_polytope(kMaxQubits + 1), std::invalid_argument);
}

TEST_CASE("the polar of the cube is the cross-polytope") {
  for (int m = 2; m <= 4; ++m) {
    const Polytope c = cube_polytope(m);
    const Polytope p = polar(c);
    const std::set<RationalVector> got(p.vertices().begin(), p.vertices().end());
    CHECK(got == cross_polytope(m));
    CHECK(polar(p) == c);
  }
}

TEST_CASE("normal fan of the cube is the fan of orthants") {
  for (int m = 1; m <= 5; ++m) {
    const Fan f = normal_fan(cube_polytope(m));
    CHECK(f.maximal_cones().size() == pow_size(2, m));
    CHECK(f.cones().size() == pow_size(3, m));
    CHECK(fan_is_smooth(f));

    std::set<Cone> orthants;
    for (const auto& chart : chart_atlas(m)) orthants.insert(orthant(chart));
    CHECK(std::set<Cone>(f.maximal_cones().begin(), f.maximal_cones().end()) == orthants);
    if (m <= 4) CHECK(fan_from_cones(f.maximal_cones()) == f);
  }
}

TEST_CASE("normal fan needs the origin inside") {
  const Polytope p = Polytope::from_points({{Rational(0)}, {Rational(1)}});
  CHECK_THROWS_AS(normal_fan(p), std::domain_error);
}

TEST_CASE("normal fan of a non-simplicial polytope") {
  // Octahedron: vertex cones are spanned by the four facet normals around
  // each vertex, so they are not simplicial.
  const Fan f = normal_fan(polar(cube_polytope(3)));
  CHECK(f.maximal_cones().size() == 6);
  for (const auto& c : f.maximal_cones()) {
    CHECK(c.rays().size() == 4);
    CHECK_FALSE(is_simplicial(c));
  }
  CHECK_FALSE(fan_is_smooth(f));
  CHECK(fan_from_cones(f.maximal_cones()) == f);
}

TEST_CASE("chart atlas order and orthants") {
  const auto charts = chart_atlas(2);
  REQUIRE(charts.size() == 4);
  CHECK(charts[0].to_string() == "(+,+)");
  CHECK(charts[1].to_string() == "(+,-)");
  CHECK(charts[2].to_string() == "(-,+)");
  CHECK(charts[3].to_string() == "(-,-)");
  CHECK(orthant(charts[1]).rays() == std::vector<LatticeVector>{{0, -1}, {1, 0}});
  CHECK(chart_atlas(kMaxQubits).size() == pow_size(2, kMaxQubits));
  CHECK_THROWS_AS(chart_atlas(0), std::invalid_argument);
}
