#include "horocox/classgroup.hpp"

#include "horocox/abelian.hpp"

#include "fixtures.hpp"

#include <doctest.h>

using namespace horocox;

namespace {

LatticeVector row_of(const IntMatrix& m, int i) { return m.row(i).transpose(); }

}  // namespace

TEST_CASE("generator order of the builtin instance") {
  const auto gens = divisor_generators(horocox::testing::sl3_bundle().fan);
  REQUIRE(gens.size() == 10);
  CHECK(gens[0].kind == GenKind::ray);
  CHECK(gens[0].ray == lattice_vec({0, 1}));
  CHECK(gens[2].ray == lattice_vec({-1, 0}));
  CHECK(gens[3].kind == GenKind::vertex);
  CHECK(gens[3].vertex.vertex == rational_vec({"-1/2", "1/2"}));
  CHECK(gens[7].kind == GenKind::color);
  CHECK(gens[7].color == "D1");
  CHECK(gens[9].kind == GenKind::fiber);
}

TEST_CASE("relation matrix of the builtin instance") {
  const IntMatrix m = relation_matrix(horocox::testing::sl3_bundle().fan);
  REQUIRE(m.rows() == 5);
  REQUIRE(m.cols() == 10);

  // Character rows.
  CHECK(row_of(m, 0) == lattice_vec({0, 0, -1, -1, 1, 0, 0, 1, 0, 0}));
  CHECK(row_of(m, 1) == lattice_vec({1, -1, 0, 1, -1, 1, 1, 0, 1, 0}));
  // Fiber rows for [0:1], [1:1], [2:3].
  CHECK(row_of(m, 2) == lattice_vec({0, 0, 0, 2, 4, 0, 0, 0, 0, -1}));
  CHECK(row_of(m, 3) == lattice_vec({0, 0, 0, 0, 0, 9, 0, 0, 0, -1}));
  CHECK(row_of(m, 4) == lattice_vec({0, 0, 0, 0, 0, 0, 9, 0, 0, -1}));
}

TEST_CASE("relation matrix of the toric instance") {
  const IntMatrix m = relation_matrix(horocox::testing::p1p1_bundle().fan);
  REQUIRE(m.rows() == 1);
  REQUIRE(m.cols() == 3);
  CHECK(row_of(m, 0) == lattice_vec({1, -1, 0}));
}

TEST_CASE("class group of the builtin instance") {
  const AbelianGroup g = class_group(horocox::testing::sl3_bundle().fan);
  CHECK(g.free_rank == 5);
  REQUIRE(g.torsion.size() == 1);
  CHECK(g.torsion[0] == 9);
}

TEST_CASE("class group projection kills the relation lattice") {
  for (const auto& bundle :
       {horocox::testing::sl3_bundle(), horocox::testing::p1p1_bundle()}) {
    const IntMatrix m = relation_matrix(bundle.fan);
    const AbelianGroup g = class_group(bundle.fan);
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      CHECK(g.is_zero(g.project(row_of(m, static_cast<int>(i)))));
    }
  }
}

TEST_CASE("class group of the toric instance with degrees") {
  const auto bundle = horocox::testing::p1p1_bundle();
  const AbelianGroup g = class_group(bundle.fan);
  CHECK(g.free_rank == 2);
  CHECK(g.torsion.empty());

  const CoxPresentation pres = cox_presentation(bundle.fan, bundle.flag, bundle.slot_colors);
  const GradedDegrees degrees = variable_degrees(bundle.fan, pres);
  REQUIRE(degrees.by_variable.size() == 4);
  const GroupElement s_class = degrees.by_variable[0];
  CHECK(degrees.by_variable[1] == s_class);
  const GroupElement fiber_class = degrees.by_variable[2];
  CHECK(degrees.by_variable[3] == fiber_class);
  CHECK_FALSE(s_class == fiber_class);
  CHECK(s_class.coords == std::vector<Integer>{1, 0});
  CHECK(fiber_class.coords == std::vector<Integer>{0, 1});
}

TEST_CASE("single generator with zero relation row") {
  // A fan with one ray, no vertices, no colors: generators are the ray and
  // the fiber; the only relation row pairs the ray against the character.
  ColoredDivisorialFan e;
  e.ambient_rank = 1;
  for (long sign : {1L, -1L}) {
    ColoredPolyhedralDivisor el;
    el.divisor.tail = make_cone(1, {lattice_vec({sign})});
    e.elements.push_back(std::move(el));
  }
  e.colors.push_back(Color{"C", lattice_vec({0})});
  const IntMatrix m = relation_matrix(e);
  REQUIRE(m.rows() == 1);
  REQUIRE(m.cols() == 4);
  CHECK(m(0, 2) == 0);  // zero rho pairs to zero
  const AbelianGroup g = class_group(e);
  CHECK(g.free_rank == 3);
  CHECK(g.torsion.empty());
}

TEST_CASE("builtin degrees reproduce the published table structure") {
  const auto bundle = horocox::testing::sl3_bundle();
  const CoxPresentation pres = cox_presentation(bundle.fan, bundle.flag, bundle.slot_colors);
  const GradedDegrees degrees = variable_degrees(bundle.fan, pres);
  const AbelianGroup& g = degrees.group;

  auto deg = [&](const std::string& alias) {
    return degrees.by_variable[static_cast<size_t>(pres.var_index(alias))];
  };

  // T0 and T1 share the fiber class, and each trinomial is balanced: the
  // fiber class equals 2 deg(t1) + 4 deg(t2) = 9 deg(t3) = 9 deg(t4).
  CHECK(deg("T0") == deg("T1"));
  const GroupElement fiber = deg("T0");
  CHECK(g.add(g.scale(2, deg("t1")), g.scale(4, deg("t2"))) == fiber);
  CHECK(g.scale(9, deg("t3")) == fiber);
  CHECK(g.scale(9, deg("t4")) == fiber);

  // Flag generators inherit the class of their bound color.
  CHECK(deg("x1") == deg("x2"));
  CHECK(deg("x1") == deg("x3"));
  CHECK(deg("z1") == deg("z2"));
  REQUIRE(degrees.by_slot.size() == 2);
  CHECK(deg("x1") == degrees.by_slot[0]);
  CHECK(deg("z1") == degrees.by_slot[1]);

  // t3 and t4 differ by a class of order dividing 9 with zero free part.
  const GroupElement diff = g.add(deg("t3"), g.scale(-1, deg("t4")));
  for (int i = 0; i < g.free_rank; ++i) CHECK(diff.coords[static_cast<size_t>(i)] == 0);
  CHECK(g.is_zero(g.scale(9, diff)));
  CHECK_FALSE(g.is_zero(diff));

  // The ten generator classes generate: the projection is surjective, so the
  // free coordinates of the generators span Z^5.
  IntMatrix span(10, g.free_rank);
  for (int j = 0; j < 10; ++j) {
    const GroupElement c = g.project_generator(j);
    for (int i = 0; i < g.free_rank; ++i) span(j, i) = c.coords[static_cast<size_t>(i)];
  }
  CHECK(row_hermite_normal_form(span.transpose()).rank == g.free_rank);
}

TEST_CASE("homogeneity of both presentation forms") {
  const auto bundle = horocox::testing::sl3_bundle();
  for (bool eliminate : {false, true}) {
    const CoxPresentation pres =
        eliminate ? eliminated_presentation(bundle.fan, bundle.flag, bundle.slot_colors)
                  : cox_presentation(bundle.fan, bundle.flag, bundle.slot_colors);
    const GradedDegrees degrees = variable_degrees(bundle.fan, pres);
    CHECK(check_homogeneity(pres, degrees));
  }
}

TEST_CASE("corrupted exponents break homogeneity") {
  const auto bundle = horocox::testing::sl3_bundle();
  CoxPresentation pres = cox_presentation(bundle.fan, bundle.flag, bundle.slot_colors);
  const GradedDegrees degrees = variable_degrees(bundle.fan, pres);
  REQUIRE(check_homogeneity(pres, degrees));
  auto& term = pres.relations[1].terms.back();
  term.exponents.begin()->second += 1;
  CHECK_FALSE(check_homogeneity(pres, degrees));
}

TEST_CASE("relation-free presentations are homogeneous") {
  const auto bundle = horocox::testing::p1p1_bundle();
  const CoxPresentation pres = cox_presentation(bundle.fan, bundle.flag, bundle.slot_colors);
  const GradedDegrees degrees = variable_degrees(bundle.fan, pres);
  CHECK(check_homogeneity(pres, degrees));
}

TEST_CASE("invariant factors do not depend on the generator order") {
  const IntMatrix m = relation_matrix(horocox::testing::sl3_bundle().fan);
  std::mt19937 rng(1618);
  std::vector<int> perm(static_cast<size_t>(m.cols()));
  for (size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  for (int trial = 0; trial < 10; ++trial) {
    std::shuffle(perm.begin(), perm.end(), rng);
    IntMatrix permuted(m.rows(), m.cols());
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      permuted.col(j) = m.col(perm[static_cast<size_t>(j)]);
    }
    const SNFResult a = smith_normal_form(m);
    const SNFResult b = smith_normal_form(permuted);
    for (Eigen::Index i = 0; i < std::min(m.rows(), m.cols()); ++i) {
      CHECK(a.S(i, i) == b.S(i, i));
    }
  }
}
