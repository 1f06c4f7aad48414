#pragma once

// Polyhedral divisors over the projective line and divisorial fans: slices,
// support, vertex data, divisor evaluation and structural validation.

#include "horocox/polyhedra.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace horocox {

// Rational point [alpha:beta] of P^1, normalized so that gcd = 1 and beta > 0,
// or beta = 0 and alpha = 1.
struct ProjPoint {
  Integer alpha;
  Integer beta;

  ProjPoint() : alpha(1), beta(0) {}
  ProjPoint(Integer a, Integer b);

  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
  friend bool operator<(const ProjPoint& x, const ProjPoint& y) {
    return x.alpha < y.alpha || (x.alpha == y.alpha && x.beta < y.beta);
  }
};

std::string to_string(const ProjPoint& p);

struct PolyhedralDivisor {
  Cone tail;
  std::map<ProjPoint, Polyhedron> coefficients;  // possibly-empty polyhedra
};

// Coefficient at y: the listed polyhedron, or the tail cone for unlisted
// points.
Polyhedron coefficient_at(const PolyhedralDivisor& d, const ProjPoint& y);

struct DivisorialFan {
  int ambient_rank = 0;
  std::vector<PolyhedralDivisor> divisors;
};

struct VertexDatum {
  ProjPoint point;
  RationalVector vertex;
  Integer multiplicity;

  friend bool operator==(const VertexDatum&, const VertexDatum&) = default;
};

enum class Severity { error, warning };

struct Diagnostic {
  Severity severity;
  std::string message;
};

bool has_errors(const std::vector<Diagnostic>& ds);

// Nonempty coefficients over y, deduplicated and canonically ordered.
std::vector<Polyhedron> slice(const DivisorialFan& fan, const ProjPoint& y);

// The slice over any unlisted point: the tail cones as polyhedra.
std::vector<Polyhedron> generic_slice(const DivisorialFan& fan);

// Points whose slice differs from the generic one, sorted.
std::vector<ProjPoint> support(const DivisorialFan& fan);

// One datum per (support point, slice vertex), with multiplicity mu(vertex).
std::vector<VertexDatum> vert(const DivisorialFan& fan);

// Coefficient-wise min pairing against m; zero values omitted.
std::map<ProjPoint, Rational> evaluate(const PolyhedralDivisor& d, const LatticeVector& m);

// Structural validation: tail consistency, pairwise face compatibility per
// point, slice coverage of N_Q, and a degree-polyhedron properness warning.
std::vector<Diagnostic> validate(const DivisorialFan& fan);

}  // namespace horocox
