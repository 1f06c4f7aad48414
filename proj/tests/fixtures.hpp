#pragma once

// Shared test instances and small random generators.

#include "horocox/io.hpp"

#include <random>

namespace horocox::testing {

inline FanBundle sl3_bundle() { return to_colored_fan(builtin_document("sl3")); }
inline FanBundle p1p1_bundle() { return to_colored_fan(builtin_document("p1p1")); }

// ---------------------------------------------------------------------------
// Random data helpers. All generators take a std::mt19937 so suites can pin
// their seeds.

inline Integer random_int(std::mt19937& rng, int lo, int hi) {
  return Integer(std::uniform_int_distribution<int>(lo, hi)(rng));
}

inline Rational random_rational(std::mt19937& rng, int max_num, int max_den) {
  Integer num = random_int(rng, -max_num, max_num);
  Integer den = random_int(rng, 1, max_den);
  return make_rational(num, den);
}

inline RationalVector random_rational_vector(std::mt19937& rng, int dim, int max_num = 6,
                                             int max_den = 6) {
  RationalVector v(dim);
  for (int i = 0; i < dim; ++i) v(i) = random_rational(rng, max_num, max_den);
  return v;
}

inline IntMatrix random_matrix(std::mt19937& rng, int rows, int cols, int bound) {
  IntMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) m(i, j) = random_int(rng, -bound, bound);
  }
  return m;
}

// A random complete pointed fan in rank 2: the +/- pairs of two or three
// pairwise non-collinear primitive rays, sorted by angle, with consecutive
// rays spanning the maximal cones. Opposite pairs keep every angular gap
// below pi, so the cones are pointed and tile the plane.
inline std::vector<std::vector<LatticeVector>> random_complete_fan_rank2(std::mt19937& rng) {
  std::vector<LatticeVector> seeds;
  const int pairs = std::uniform_int_distribution<int>(2, 3)(rng);
  int guard = 0;
  while (static_cast<int>(seeds.size()) < pairs && guard++ < 200) {
    LatticeVector r(2);
    r(0) = random_int(rng, -3, 3);
    r(1) = random_int(rng, -3, 3);
    if (r.isZero()) continue;
    r = primitive_generator(r);
    bool collinear = false;
    for (const auto& s : seeds) {
      if (s(0) * r(1) - s(1) * r(0) == 0) collinear = true;
    }
    if (!collinear) seeds.push_back(r);
  }
  if (seeds.size() < 2) {
    seeds = {lattice_vec({1, 0}), lattice_vec({0, 1})};
  }
  std::vector<LatticeVector> rays;
  for (const auto& s : seeds) {
    rays.push_back(s);
    rays.push_back(-s);
  }
  auto angle_less = [](const LatticeVector& a, const LatticeVector& b) {
    auto half = [](const LatticeVector& v) { return (v(1) > 0 || (v(1) == 0 && v(0) > 0)) ? 0 : 1; };
    if (half(a) != half(b)) return half(a) < half(b);
    return a(0) * b(1) - a(1) * b(0) > 0;
  };
  std::sort(rays.begin(), rays.end(), angle_less);
  std::vector<std::vector<LatticeVector>> cones;
  for (size_t i = 0; i < rays.size(); ++i) {
    cones.push_back({rays[i], rays[(i + 1) % rays.size()]});
  }
  return cones;
}

// A random valid colored divisorial fan of rank 1 or 2: per support point
// either a translate of the tail fan or (rank 2) the two-vertex subdivision
// pattern; optionally splits tail charts into two open pieces.
inline ColoredDivisorialFan random_valid_fan(std::mt19937& rng) {
  ColoredDivisorialFan e;
  const int rank = std::uniform_int_distribution<int>(1, 2)(rng);
  e.ambient_rank = rank;

  std::vector<std::vector<LatticeVector>> cone_gens;
  if (rank == 1) {
    cone_gens = {{lattice_vec({1})}, {lattice_vec({-1})}};
  } else {
    cone_gens = random_complete_fan_rank2(rng);
  }

  const int r = std::uniform_int_distribution<int>(0, 3)(rng);
  std::vector<ProjPoint> points;
  {
    std::set<ProjPoint> seen;
    while (static_cast<int>(points.size()) < r) {
      Integer a = random_int(rng, -4, 4);
      Integer b = random_int(rng, -4, 4);
      if (a == 0 && b == 0) continue;
      ProjPoint p(a, b);
      if (seen.insert(p).second) points.push_back(p);
    }
  }

  // Slices: per point one shift vector per tail fan (a global translation).
  std::vector<RationalVector> shifts;
  for (int i = 0; i < r; ++i) shifts.push_back(random_rational_vector(rng, rank, 4, 4));

  for (const auto& gens : cone_gens) {
    PolyhedralDivisor d;
    d.tail = make_cone(rank, gens);
    for (int i = 0; i < r; ++i) {
      d.coefficients.emplace(points[static_cast<size_t>(i)],
                             make_polyhedron(rank, {shifts[static_cast<size_t>(i)]}, gens));
    }
    ColoredPolyhedralDivisor el;
    el.divisor = std::move(d);
    e.elements.push_back(std::move(el));
  }

  // Occasionally split a chart into two open pieces with complementary empty
  // coefficients (requires two distinct points to stay complete).
  if (r >= 2 && std::uniform_int_distribution<int>(0, 1)(rng) == 1) {
    auto& victim = e.elements.front();
    ColoredPolyhedralDivisor twin = victim;
    victim.divisor.coefficients[points[0]] = empty_polyhedron(rank);
    twin.divisor.coefficients[points[1]] = empty_polyhedron(rank);
    e.elements.push_back(std::move(twin));
  }

  // Colors with small rho, randomly marked where legal.
  const int ncolors = std::uniform_int_distribution<int>(0, 2)(rng);
  for (int c = 0; c < ncolors; ++c) {
    Color color;
    color.name = "C" + std::to_string(c + 1);
    LatticeVector rho(rank);
    for (int i = 0; i < rank; ++i) rho(i) = random_int(rng, -2, 2);
    color.rho = rho;
    e.colors.push_back(std::move(color));
  }
  for (auto& el : e.elements) {
    for (const auto& c : e.colors) {
      if (std::uniform_int_distribution<int>(0, 2)(rng) == 0) el.marked.insert(c.name);
    }
  }
  return e;
}

inline FlagModel flag_for(const ColoredDivisorialFan& e, std::mt19937& rng) {
  const int k = static_cast<int>(e.colors.size());
  if (k == 0) return flag_catalog("point");
  if (k == 2 && std::uniform_int_distribution<int>(0, 1)(rng) == 0) {
    return flag_catalog("SL3/B");
  }
  if (k == 1 && std::uniform_int_distribution<int>(0, 1)(rng) == 0) {
    return flag_catalog("projective_space(2)");
  }
  return flag_catalog("symbolic(" + std::to_string(k) + ")");
}

}  // namespace horocox::testing
