#pragma once

// The divisor class group as a finitely generated abelian group, and the
// induced grading of the Cox presentation variables.

#include "horocox/coxring.hpp"

namespace horocox {

enum class GenKind { ray, vertex, color, fiber };

struct DivisorGenerator {
  GenKind kind;
  LatticeVector ray;    // kind == ray
  VertexDatum vertex;   // kind == vertex
  std::string color;    // kind == color
  std::string label;
};

// Canonical generator order: rays, vertex data, colors, fiber.
std::vector<DivisorGenerator> divisor_generators(const ColoredDivisorialFan& e);

// Element written in projected coordinates: free part followed by torsion
// residues normalized into [0, d_j).
struct GroupElement {
  std::vector<Integer> coords;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

struct AbelianGroup {
  int free_rank = 0;
  std::vector<Integer> torsion;  // invariant factors >= 2, d_j | d_{j+1}
  // Projection from the generator lattice: free rows first, then one row per
  // torsion factor.
  IntMatrix projection;
  int generator_count = 0;

  GroupElement project(const LatticeVector& x) const;
  GroupElement project_generator(int index) const;
  GroupElement zero() const;
  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement scale(const Integer& n, const GroupElement& a) const;
  bool is_zero(const GroupElement& a) const;
};

std::string to_string(const AbelianGroup& g, const GroupElement& e);

// Rows: one per character basis vector (pairings against rays, mu-scaled
// vertices and colors), then one per support point (mu at its vertices, -1 at
// the fiber).
IntMatrix relation_matrix(const ColoredDivisorialFan& e);

AbelianGroup class_group(const ColoredDivisorialFan& e);

struct GradedDegrees {
  AbelianGroup group;
  std::vector<GroupElement> by_variable;  // parallel to presentation variables
  std::vector<GroupElement> by_slot;      // one per flag color slot
};

GradedDegrees variable_degrees(const ColoredDivisorialFan& e, const CoxPresentation& pres);

// True iff every monomial of every relation has the same degree.
bool check_homogeneity(const CoxPresentation& pres, const GradedDegrees& degrees);

}  // namespace horocox
