#pragma once

// The Cox ring presentation: variables indexed by rays, vertex data and flag
// generators, the trinomial ideal, its eliminated form, and the flag-factor
// catalog.

#include "horocox/horospherical.hpp"

#include <map>

namespace horocox {

enum class VarKind { ray, vertex, t0, t1, flag };

struct FlagOrigin {
  int slot = -1;
  std::string generator;
};

struct Variable {
  std::string name;   // canonical, e.g. S_(0,1) or T_[0:1]_(-1/2,1/2)
  std::string alias;  // user-facing: s1, t1, T0, x1, ...
  VarKind kind = VarKind::flag;
  LatticeVector ray;     // kind == ray
  VertexDatum vertex;    // kind == vertex
  FlagOrigin flag;       // kind == flag
};

// Terms carry sparse exponent maps keyed by variable index; the term order is
// lexicographic in the variable order, highest first.
struct Term {
  Integer coeff;
  std::map<int, int> exponents;
};

struct SparsePolynomial {
  std::vector<Term> terms;

  friend bool operator==(const SparsePolynomial& a, const SparsePolynomial& b);
};

SparsePolynomial make_polynomial(std::vector<Term> terms);

// Equality up to a nonzero rational scalar; ideal generators are only defined
// up to units.
bool equal_up_to_scalar(const SparsePolynomial& a, const SparsePolynomial& b);

struct FlagModel {
  std::string id;
  // One generator block per color slot; an empty block marks a symbolic slot.
  std::vector<std::vector<std::string>> blocks;
  // Relations over the flattened generator list.
  std::vector<SparsePolynomial> relations;
  bool symbolic = false;

  int slot_count() const { return static_cast<int>(blocks.size()); }
  std::vector<std::string> flat_generators() const;
};

// Catalog names: point, projective_space(n), SL3/B, symbolic(k), and
// product(entry, entry, ...) of catalog entries.
FlagModel flag_catalog(const std::string& name);

struct CoxPresentation {
  std::vector<Variable> variables;
  std::vector<SparsePolynomial> relations;
  FlagModel flag;
  std::vector<std::string> slot_colors;  // fan color bound to each flag slot
  bool eliminated = false;

  int ray_count = 0;
  int vertex_count = 0;
  int flag_count = 0;

  int var_index(const std::string& name_or_alias) const;
};

// The graded presentation with variables S_rho, T_0, T_1, T_(y,v) and the
// flag factor, and one trinomial -alpha*T_0 - beta*T_1 + prod T^mu per
// support point. slot_colors defaults to the fan's color order.
CoxPresentation cox_presentation(const ColoredDivisorialFan& e, const FlagModel& flag,
                                 std::vector<std::string> slot_colors = {});

// The form with T_0, T_1 eliminated: one relation sum gamma_i * F_i per
// integral kernel basis vector of the point-coordinate matrix.
CoxPresentation eliminated_presentation(const ColoredDivisorialFan& e, const FlagModel& flag,
                                        std::vector<std::string> slot_colors = {});

std::string render(const SparsePolynomial& p, const CoxPresentation& pres);

}  // namespace horocox
