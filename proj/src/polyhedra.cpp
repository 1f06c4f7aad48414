#include "horocox/polyhedra.hpp"

#include "horocox/abelian.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace horocox {

namespace {

using Index = Eigen::Index;

constexpr int kMaxRank = 3;

void check_rank(int rank) {
  if (rank < 1 || rank > kMaxRank) throw std::invalid_argument("unsupported rank");
}

IntMatrix rows_from(const std::vector<LatticeVector>& vs, int dim) {
  IntMatrix m(static_cast<Index>(vs.size()), dim);
  for (Index i = 0; i < m.rows(); ++i) m.row(i) = vs[static_cast<size_t>(i)].transpose();
  return m;
}

std::vector<LatticeVector> dedup_sorted(std::vector<LatticeVector> vs) {
  std::sort(vs.begin(), vs.end(), LexLess<Integer>{});
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

Rational pair(const LatticeVector& a, const RationalVector& x) {
  Rational acc = 0;
  for (Index i = 0; i < a.size(); ++i) acc += Rational(a(i)) * x(i);
  return acc;
}

Integer pair(const LatticeVector& a, const LatticeVector& x) {
  Integer acc = 0;
  for (Index i = 0; i < a.size(); ++i) acc += a(i) * x(i);
  return acc;
}

}  // namespace

namespace detail {

int lattice_rank(const std::vector<LatticeVector>& vs) {
  if (vs.empty()) return 0;
  return row_hermite_normal_form(rows_from(vs, static_cast<int>(vs.front().size()))).rank;
}

std::vector<LatticeVector> cone_hull(int dim, const std::vector<LatticeVector>& raw_normals) {
  std::vector<LatticeVector> normals;
  for (const auto& n : raw_normals) {
    if (!n.isZero()) normals.push_back(n);
  }
  normals = dedup_sorted(std::move(normals));

  // Lineality space: common kernel of all normals.
  std::vector<LatticeVector> lineality =
      integer_kernel_basis(rows_from(normals, dim));

  std::vector<LatticeVector> constraints = normals;
  for (const auto& l : lineality) {
    constraints.push_back(l);
    constraints.push_back(-l);
  }

  // Extreme rays of the pointed part: a feasible direction whose active
  // constraints span a hyperplane.
  std::set<LatticeVector, LexLess<Integer>> rays;
  const int k = static_cast<int>(constraints.size());
  const int pick = dim - 1;
  std::vector<int> idx(static_cast<size_t>(std::max(pick, 0)));
  auto try_subset = [&](const std::vector<int>& subset) {
    std::vector<LatticeVector> sub;
    sub.reserve(subset.size());
    for (int i : subset) sub.push_back(constraints[static_cast<size_t>(i)]);
    auto kernel = integer_kernel_basis(rows_from(sub, dim));
    if (kernel.size() != 1) return;
    for (const LatticeVector& cand : {kernel[0], LatticeVector(-kernel[0])}) {
      bool feasible = true;
      for (const auto& c : constraints) {
        if (pair(c, cand) < 0) {
          feasible = false;
          break;
        }
      }
      if (feasible) rays.insert(cand);
    }
  };
  if (pick == 0) {
    try_subset({});
  } else if (k >= pick) {
    std::vector<int> subset(static_cast<size_t>(pick));
    // Iterative combinations over constraint indices.
    for (int i = 0; i < pick; ++i) subset[static_cast<size_t>(i)] = i;
    for (;;) {
      try_subset(subset);
      int pos = pick - 1;
      while (pos >= 0 && subset[static_cast<size_t>(pos)] == k - pick + pos) --pos;
      if (pos < 0) break;
      ++subset[static_cast<size_t>(pos)];
      for (int i = pos + 1; i < pick; ++i) {
        subset[static_cast<size_t>(i)] = subset[static_cast<size_t>(i - 1)] + 1;
      }
    }
  }

  std::vector<LatticeVector> gens(rays.begin(), rays.end());
  for (const auto& l : lineality) {
    gens.push_back(l);
    gens.push_back(-l);
  }
  return dedup_sorted(std::move(gens));
}

std::vector<LatticeVector> homogenize(const Polyhedron& p) {
  std::vector<LatticeVector> gens;
  const int d = p.ambient_rank;
  for (const auto& v : p.vertices) {
    RationalVector h(d + 1);
    h(0) = 1;
    for (Index i = 0; i < d; ++i) h(i + 1) = v(i);
    gens.push_back(primitive_generator(h));
  }
  for (const auto& r : p.rays) {
    LatticeVector h(d + 1);
    h(0) = 0;
    for (Index i = 0; i < d; ++i) h(i + 1) = r(i);
    gens.push_back(primitive_generator(h));
  }
  return gens;
}

Polyhedron dehomogenize(int rank, const std::vector<LatticeVector>& gens) {
  Polyhedron p;
  p.ambient_rank = rank;
  for (const auto& g : gens) {
    if (g(0) > 0) {
      RationalVector v(rank);
      for (Index i = 0; i < rank; ++i) v(i) = make_rational(g(i + 1), g(0));
      p.vertices.push_back(v);
    } else if (g(0) == 0) {
      p.rays.push_back(g.tail(rank));
    }
  }
  if (p.vertices.empty()) return empty_polyhedron(rank);
  p.is_empty = false;
  std::sort(p.vertices.begin(), p.vertices.end(), LexLess<Rational>{});
  std::sort(p.rays.begin(), p.rays.end(), LexLess<Integer>{});
  return p;
}

}  // namespace detail

namespace {

// Dual generators of the homogenization cone of p; these carry the full
// H-representation (offset, normal) with the trivial (>=0, 0) rows included.
std::vector<LatticeVector> homogeneous_normals(const Polyhedron& p) {
  return detail::cone_hull(p.ambient_rank + 1, detail::homogenize(p));
}

LatticeVector positivity_row(int rank) {
  LatticeVector e = LatticeVector::Zero(rank + 1);
  e(0) = 1;
  return e;
}

Polyhedron from_homogeneous_normals(int rank, std::vector<LatticeVector> normals) {
  normals.push_back(positivity_row(rank));
  return detail::dehomogenize(rank, detail::cone_hull(rank + 1, normals));
}

}  // namespace

Cone make_cone(int ambient_rank, std::vector<LatticeVector> generators) {
  check_rank(ambient_rank);
  for (const auto& g : generators) {
    if (g.size() != ambient_rank) throw std::invalid_argument("cone generator rank mismatch");
  }
  auto dual = detail::cone_hull(ambient_rank, generators);
  return Cone{ambient_rank, detail::cone_hull(ambient_rank, dual)};
}

Cone dual_cone(const Cone& c) {
  return Cone{c.ambient_rank, detail::cone_hull(c.ambient_rank, c.generators)};
}

Cone zero_cone(int ambient_rank) { return Cone{ambient_rank, {}}; }

bool cone_contains(const Cone& c, const RationalVector& x) {
  for (const auto& n : detail::cone_hull(c.ambient_rank, c.generators)) {
    if (pair(n, x) < 0) return false;
  }
  return true;
}

Polyhedron make_polyhedron(int ambient_rank, std::vector<RationalVector> vertices,
                           std::vector<LatticeVector> rays) {
  check_rank(ambient_rank);
  for (const auto& v : vertices) {
    if (v.size() != ambient_rank) throw std::invalid_argument("vertex rank mismatch");
  }
  for (const auto& r : rays) {
    if (r.size() != ambient_rank) throw std::invalid_argument("ray rank mismatch");
  }
  if (vertices.empty()) return empty_polyhedron(ambient_rank);
  Polyhedron raw;
  raw.ambient_rank = ambient_rank;
  raw.is_empty = false;
  raw.vertices = std::move(vertices);
  for (auto& r : rays) {
    if (!r.isZero()) raw.rays.push_back(primitive_generator(r));
  }
  auto hom = detail::homogenize(raw);
  auto dual = detail::cone_hull(ambient_rank + 1, hom);
  return detail::dehomogenize(ambient_rank, detail::cone_hull(ambient_rank + 1, dual));
}

Polyhedron empty_polyhedron(int ambient_rank) {
  check_rank(ambient_rank);
  Polyhedron p;
  p.ambient_rank = ambient_rank;
  p.is_empty = true;
  return p;
}

Polyhedron cone_as_polyhedron(const Cone& c) {
  return make_polyhedron(c.ambient_rank, {RationalVector::Zero(c.ambient_rank)}, c.generators);
}

Cone tail_cone(const Polyhedron& p) {
  if (p.is_empty) throw std::domain_error("tail of empty polyhedron");
  return make_cone(p.ambient_rank, p.rays);
}

std::optional<Rational> min_pairing(const Polyhedron& p, const LatticeVector& m) {
  if (p.is_empty) throw std::domain_error("min_pairing of empty polyhedron");
  for (const auto& r : p.rays) {
    if (pair(m, to_rational(r)) < 0) return std::nullopt;
  }
  std::optional<Rational> best;
  for (const auto& v : p.vertices) {
    Rational val = pair(m, v);
    if (!best || val < *best) best = val;
  }
  return best;
}

Polyhedron intersect(const Polyhedron& p, const Polyhedron& q) {
  if (p.ambient_rank != q.ambient_rank) throw std::invalid_argument("ambient rank mismatch");
  if (p.is_empty || q.is_empty) return empty_polyhedron(p.ambient_rank);
  auto normals = homogeneous_normals(p);
  for (auto& n : homogeneous_normals(q)) normals.push_back(std::move(n));
  return from_homogeneous_normals(p.ambient_rank, std::move(normals));
}

std::vector<HalfSpace> halfspaces(const Polyhedron& p) {
  if (p.is_empty) throw std::domain_error("halfspaces of empty polyhedron");
  std::vector<HalfSpace> out;
  for (const auto& n : homogeneous_normals(p)) {
    LatticeVector a = n.tail(p.ambient_rank);
    if (a.isZero()) continue;
    out.push_back(HalfSpace{a, n(0)});
  }
  return out;
}

bool contains(const Polyhedron& p, const RationalVector& x) {
  if (p.is_empty) return false;
  for (const auto& h : halfspaces(p)) {
    if (pair(h.normal, x) + Rational(h.offset) < 0) return false;
  }
  return true;
}

bool polyhedron_subset(const Polyhedron& inner, const Polyhedron& outer) {
  if (inner.is_empty) return true;
  if (outer.is_empty) return false;
  const auto hs = halfspaces(outer);
  for (const auto& h : hs) {
    for (const auto& v : inner.vertices) {
      if (pair(h.normal, v) + Rational(h.offset) < 0) return false;
    }
    for (const auto& r : inner.rays) {
      if (pair(h.normal, r) < 0) return false;
    }
  }
  return true;
}

int polyhedron_dim(const Polyhedron& p) {
  if (p.is_empty) return -1;
  std::vector<LatticeVector> span;
  const RationalVector& base = p.vertices.front();
  for (size_t i = 1; i < p.vertices.size(); ++i) {
    span.push_back(primitive_generator(RationalVector(p.vertices[i] - base)));
  }
  for (const auto& r : p.rays) span.push_back(r);
  if (span.empty()) return 0;
  return detail::lattice_rank(span);
}

namespace {

Polyhedron face_from_tight(const Polyhedron& p, const std::vector<HalfSpace>& tight) {
  auto normals = homogeneous_normals(p);
  for (const auto& h : tight) {
    LatticeVector eq(p.ambient_rank + 1);
    eq(0) = -h.offset;
    for (Index i = 0; i < p.ambient_rank; ++i) eq(i + 1) = -h.normal(i);
    normals.push_back(eq);
  }
  return from_homogeneous_normals(p.ambient_rank, std::move(normals));
}

bool tight_on_all(const HalfSpace& h, const Polyhedron& f) {
  for (const auto& v : f.vertices) {
    if (pair(h.normal, v) + Rational(h.offset) != 0) return false;
  }
  for (const auto& r : f.rays) {
    if (pair(h.normal, r) != 0) return false;
  }
  return true;
}

}  // namespace

std::vector<Polyhedron> proper_facets(const Polyhedron& p) {
  std::vector<Polyhedron> out;
  if (p.is_empty) return out;
  const int d = polyhedron_dim(p);
  for (const auto& h : halfspaces(p)) {
    Polyhedron g = face_from_tight(p, {h});
    if (g.is_empty || polyhedron_dim(g) != d - 1) continue;
    if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
  }
  return out;
}

bool is_face_of(const Polyhedron& face, const Polyhedron& p) {
  if (face.is_empty) return true;
  if (p.is_empty) return false;
  if (face == p) return true;
  if (!polyhedron_subset(face, p)) return false;
  std::vector<HalfSpace> tight;
  for (const auto& h : halfspaces(p)) {
    if (tight_on_all(h, face)) tight.push_back(h);
  }
  if (tight.empty()) return face == p;
  return face_from_tight(p, tight) == face;
}

bool intersect_is_face(const Polyhedron& p, const Polyhedron& q) {
  Polyhedron f = intersect(p, q);
  return is_face_of(f, p) && is_face_of(f, q);
}

Polyhedron minkowski_sum(const Polyhedron& p, const Polyhedron& q) {
  if (p.ambient_rank != q.ambient_rank) throw std::invalid_argument("ambient rank mismatch");
  if (p.is_empty || q.is_empty) return empty_polyhedron(p.ambient_rank);
  std::vector<RationalVector> sums;
  for (const auto& v : p.vertices) {
    for (const auto& w : q.vertices) sums.push_back(v + w);
  }
  std::vector<LatticeVector> rays = p.rays;
  rays.insert(rays.end(), q.rays.begin(), q.rays.end());
  return make_polyhedron(p.ambient_rank, std::move(sums), std::move(rays));
}

bool polyhedron_less(const Polyhedron& a, const Polyhedron& b) {
  if (a.is_empty != b.is_empty) return a.is_empty;
  if (a.vertices != b.vertices) {
    return std::lexicographical_compare(a.vertices.begin(), a.vertices.end(), b.vertices.begin(),
                                        b.vertices.end(), LexLess<Rational>{});
  }
  return std::lexicographical_compare(a.rays.begin(), a.rays.end(), b.rays.begin(), b.rays.end(),
                                      LexLess<Integer>{});
}

std::string to_string(const Polyhedron& p) {
  if (p.is_empty) return "empty";
  std::string out = "conv{";
  for (size_t i = 0; i < p.vertices.size(); ++i) {
    if (i > 0) out += ",";
    out += to_string(p.vertices[i]);
  }
  out += "}";
  if (!p.rays.empty()) {
    out += " + cone{";
    for (size_t i = 0; i < p.rays.size(); ++i) {
      if (i > 0) out += ",";
      out += to_string(p.rays[i]);
    }
    out += "}";
  }
  return out;
}

std::string to_string(const Cone& c) {
  std::string out = "cone{";
  for (size_t i = 0; i < c.generators.size(); ++i) {
    if (i > 0) out += ",";
    out += to_string(c.generators[i]);
  }
  out += "}";
  return out;
}

}  // namespace horocox
