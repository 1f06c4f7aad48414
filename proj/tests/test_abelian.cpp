#include "horocox/abelian.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace horocox;

namespace {

IntMatrix matrix_from(std::initializer_list<std::initializer_list<long>> rows) {
  const Eigen::Index r = static_cast<Eigen::Index>(rows.size());
  const Eigen::Index c = r > 0 ? static_cast<Eigen::Index>(rows.begin()->size()) : 0;
  IntMatrix m(r, c);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (long v : row) m(i, j++) = Integer(v);
    ++i;
  }
  return m;
}

std::vector<Integer> nonzero_diagonal(const IntMatrix& s) {
  std::vector<Integer> d;
  for (Eigen::Index i = 0; i < std::min(s.rows(), s.cols()); ++i) {
    if (s(i, i) != 0) d.push_back(s(i, i));
  }
  return d;
}

void check_snf_contract(const IntMatrix& m, const SNFResult& r) {
  REQUIRE((r.U * m * r.V) == r.S);
  Integer du = determinant(r.U);
  Integer dv = determinant(r.V);
  CHECK(abs(du) == 1);
  CHECK(abs(dv) == 1);
  const Eigen::Index steps = std::min(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < steps; ++i) {
    CHECK(r.S(i, i) >= 0);
    if (i + 1 < steps && r.S(i + 1, i + 1) != 0) {
      REQUIRE(r.S(i, i) != 0);
      CHECK(r.S(i + 1, i + 1) % r.S(i, i) == 0);
    }
  }
  for (Eigen::Index i = 0; i < r.S.rows(); ++i) {
    for (Eigen::Index j = 0; j < r.S.cols(); ++j) {
      if (i != j) CHECK(r.S(i, j) == 0);
    }
  }
}

}  // namespace

TEST_CASE("smith normal form of the identity") {
  IntMatrix id = IntMatrix::Identity(2, 2);
  SNFResult r = smith_normal_form(id);
  CHECK(r.S == id);
  CHECK(r.U == id);
  CHECK(r.V == id);
}

TEST_CASE("smith normal form merges coprime diagonal entries") {
  SNFResult r = smith_normal_form(matrix_from({{2, 0}, {0, 9}}));
  CHECK(r.S(0, 0) == 1);
  CHECK(r.S(1, 1) == 18);
  check_snf_contract(matrix_from({{2, 0}, {0, 9}}), r);
}

TEST_CASE("smith normal form of the builtin relation matrix") {
  const IntMatrix m = matrix_from({{0, 0, 0, -2, -4, 0, 0, 0, 0, 1},
                                   {0, 0, 0, 0, 0, -9, 0, 0, 0, 1},
                                   {0, 0, 0, 0, 0, 0, -9, 0, 0, 1},
                                   {0, 0, -1, -1, 1, 0, 0, 1, 0, 0},
                                   {1, -1, 0, 1, -1, 1, 1, 0, 1, 0}});
  SNFResult r = smith_normal_form(m);
  check_snf_contract(m, r);
  auto diag = nonzero_diagonal(r.S);
  REQUIRE(diag.size() == 5);
  CHECK(diag[0] == 1);
  CHECK(diag[1] == 1);
  CHECK(diag[2] == 1);
  CHECK(diag[3] == 1);
  CHECK(diag[4] == 9);
}

TEST_CASE("smith normal form properties on random matrices") {
  std::mt19937 rng(20260810);
  for (int trial = 0; trial < 120; ++trial) {
    const int rows = std::uniform_int_distribution<int>(1, 6)(rng);
    const int cols = std::uniform_int_distribution<int>(1, 6)(rng);
    IntMatrix m = horocox::testing::random_matrix(rng, rows, cols, 9);
    check_snf_contract(m, smith_normal_form(m));
  }
}

TEST_CASE("smith normal form of empty and zero matrices") {
  IntMatrix zero = IntMatrix::Zero(2, 3);
  SNFResult r = smith_normal_form(zero);
  CHECK(r.S == zero);
  IntMatrix empty(0, 4);
  SNFResult re = smith_normal_form(empty);
  CHECK(re.S.rows() == 0);
  CHECK(re.V == IntMatrix::Identity(4, 4));
}

TEST_CASE("integer kernel of a 2x3 point-coordinate matrix") {
  auto basis = integer_kernel_basis(matrix_from({{0, 1, 2}, {1, 1, 3}}));
  REQUIRE(basis.size() == 1);
  CHECK(basis[0] == lattice_vec({1, 2, -1}));
}

TEST_CASE("integer kernel of full-rank and zero matrices") {
  CHECK(integer_kernel_basis(IntMatrix::Identity(2, 2)).empty());
  auto basis = integer_kernel_basis(IntMatrix::Zero(1, 2));
  REQUIRE(basis.size() == 2);
  CHECK(basis[0] == lattice_vec({1, 0}));
  CHECK(basis[1] == lattice_vec({0, 1}));
}

TEST_CASE("integer kernel spans the saturated kernel lattice") {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 60; ++trial) {
    const int rows = std::uniform_int_distribution<int>(1, 4)(rng);
    const int cols = std::uniform_int_distribution<int>(1, 5)(rng);
    IntMatrix m = horocox::testing::random_matrix(rng, rows, cols, 6);
    auto basis = integer_kernel_basis(m);
    auto rational_basis = horocox::testing::rational_kernel(m);
    REQUIRE(basis.size() == rational_basis.size());
    for (const auto& v : basis) {
      CHECK((m * v).isZero());
    }
    // Saturation: the primitive integral vector on each rational kernel line
    // must be an integral combination of the returned basis.
    for (const auto& q : rational_basis) {
      LatticeVector target = primitive_generator(q);
      auto x = horocox::testing::solve_left(basis, target);
      REQUIRE(x.has_value());
      for (Eigen::Index i = 0; i < x->size(); ++i) {
        CHECK((*x)(i).get_den() == 1);
      }
    }
  }
}

TEST_CASE("kernel basis is deterministic") {
  const IntMatrix m = matrix_from({{2, 4, -9, 0}, {2, 4, 0, -9}});
  auto a = integer_kernel_basis(m);
  auto b = integer_kernel_basis(m);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
}

TEST_CASE("mu of slice vertices") {
  CHECK(mu(rational_vec({"-1/2", "1/2"})) == 2);
  CHECK(mu(rational_vec({"0", "1/9"})) == 9);
  CHECK(mu(rational_vec({"3", "-2"})) == 1);
}

TEST_CASE("primitive generators") {
  CHECK(primitive_generator(rational_vec({"1/4", "-1/4"})) == lattice_vec({1, -1}));
  CHECK(primitive_generator(rational_vec({"0", "3"})) == lattice_vec({0, 1}));
  CHECK_THROWS_WITH_AS(primitive_generator(rational_vec({"0", "0"})),
                       "no primitive generator of the zero ray", std::invalid_argument);
}

TEST_CASE("mu and primitive generator consistency on random vectors") {
  std::mt19937 rng(4242);
  int checked = 0;
  while (checked < 500) {
    const int dim = std::uniform_int_distribution<int>(1, 3)(rng);
    RationalVector v = horocox::testing::random_rational_vector(rng, dim, 9, 9);
    if (v.isZero()) continue;
    ++checked;
    const Integer d = mu(v);
    LatticeVector scaled(dim);
    bool integral = true;
    for (int i = 0; i < dim; ++i) {
      Rational s = v(i) * Rational(d);
      if (s.get_den() != 1) integral = false;
      if (integral) scaled(i) = s.get_num();
    }
    REQUIRE(integral);
    // Minimality: dropping any prime factor of d breaks integrality.
    auto breaks_integrality = [&](const Integer& smaller) {
      for (int i = 0; i < dim; ++i) {
        if ((v(i) * Rational(smaller)).get_den() != 1) return true;
      }
      return false;
    };
    Integer rest = d;
    for (Integer p = 2; p * p <= rest; ++p) {
      if (rest % p != 0) continue;
      CHECK(breaks_integrality(exact_div(d, p)));
      while (rest % p == 0) rest = exact_div(rest, p);
    }
    if (rest > 1) CHECK(breaks_integrality(exact_div(d, rest)));
    const LatticeVector prim = primitive_generator(v);
    CHECK(content(prim) == 1);
    const Integer c = content(scaled);
    for (int i = 0; i < dim; ++i) {
      CHECK(prim(i) == exact_div(scaled(i), c));
    }
  }
}

TEST_CASE("exact determinants") {
  CHECK(determinant(matrix_from({{2, 0}, {0, 3}})) == 6);
  CHECK(determinant(matrix_from({{0, 1}, {1, 0}})) == -1);
  CHECK(determinant(matrix_from({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})) == 0);
  CHECK(determinant(matrix_from({{3, 1, 0}, {0, 2, 5}, {1, 1, 1}})) == -4);
}
