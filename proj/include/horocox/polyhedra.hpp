#pragma once

// Exact rational convex geometry in V-representation: cones and polyhedra at
// ambient rank <= 3, with duals, faces and Minkowski sums.
//
// Everything is canonicalized through one primitive, cone_hull, which turns a
// finite set of half-space normals into the canonical generator list of the
// cut-out cone (lineality basis as +/- pairs plus the extreme rays of the
// pointed part). Polyhedra are handled through their homogenization in rank
// d+1, so the internal cone machinery runs up to rank 4.

#include "horocox/numeric.hpp"

#include <optional>
#include <vector>

namespace horocox {

struct Cone {
  int ambient_rank = 0;
  std::vector<LatticeVector> generators;  // canonical: primitive, extremal, lex sorted

  friend bool operator==(const Cone&, const Cone&) = default;
};

struct Polyhedron {
  int ambient_rank = 0;
  bool is_empty = true;
  std::vector<RationalVector> vertices;  // canonical base points, lex sorted
  std::vector<LatticeVector> rays;       // canonical recession generators, lex sorted

  friend bool operator==(const Polyhedron&, const Polyhedron&) = default;
};

// <normal, x> + offset >= 0
struct HalfSpace {
  LatticeVector normal;
  Integer offset;
};

namespace detail {

// Canonical generators of {x in Q^dim : <n, x> >= 0 for all n in normals}.
std::vector<LatticeVector> cone_hull(int dim, const std::vector<LatticeVector>& normals);

// Generators of the homogenization of p in rank d+1 (leading homogenizing
// coordinate), primitive.
std::vector<LatticeVector> homogenize(const Polyhedron& p);

Polyhedron dehomogenize(int rank, const std::vector<LatticeVector>& gens);

// Rank of the lattice spanned by the given vectors.
int lattice_rank(const std::vector<LatticeVector>& vs);

}  // namespace detail

Cone make_cone(int ambient_rank, std::vector<LatticeVector> generators);
Cone dual_cone(const Cone& c);
Cone zero_cone(int ambient_rank);
bool cone_contains(const Cone& c, const RationalVector& x);

Polyhedron make_polyhedron(int ambient_rank, std::vector<RationalVector> vertices,
                           std::vector<LatticeVector> rays);
Polyhedron empty_polyhedron(int ambient_rank);
Polyhedron cone_as_polyhedron(const Cone& c);

Cone tail_cone(const Polyhedron& p);

// min over p of <., m>; nullopt encodes -infinity (m outside the dual of the
// tail cone).
std::optional<Rational> min_pairing(const Polyhedron& p, const LatticeVector& m);

Polyhedron intersect(const Polyhedron& p, const Polyhedron& q);
bool contains(const Polyhedron& p, const RationalVector& x);
bool polyhedron_subset(const Polyhedron& inner, const Polyhedron& outer);

// Facet-defining half-spaces (affine-hull equalities included as pairs).
std::vector<HalfSpace> halfspaces(const Polyhedron& p);

// Affine dimension; -1 for the empty polyhedron.
int polyhedron_dim(const Polyhedron& p);

std::vector<Polyhedron> proper_facets(const Polyhedron& p);

bool is_face_of(const Polyhedron& face, const Polyhedron& p);
bool intersect_is_face(const Polyhedron& p, const Polyhedron& q);

Polyhedron minkowski_sum(const Polyhedron& p, const Polyhedron& q);

// Deterministic total order on canonical polyhedra.
bool polyhedron_less(const Polyhedron& a, const Polyhedron& b);

std::string to_string(const Polyhedron& p);
std::string to_string(const Cone& c);

}  // namespace horocox
