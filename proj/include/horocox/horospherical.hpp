#pragma once

// Colors, colored polyhedral divisors, the colored divisorial fan, its ray
// family, and the torus-action divisorial fan coefficients of the local
// charts.

#include "horocox/divfan.hpp"

#include <optional>
#include <set>

namespace horocox {

struct Color {
  std::string name;
  LatticeVector rho;  // image in the dual lattice; may be zero
};

struct ColoredPolyhedralDivisor {
  PolyhedralDivisor divisor;
  std::set<std::string> marked;  // the set F of marked color names
};

struct ColoredDivisorialFan {
  int ambient_rank = 0;
  std::vector<Color> colors;
  std::vector<ColoredPolyhedralDivisor> elements;
  std::optional<std::vector<LatticeVector>> ray_override;
};

DivisorialFan underlying_fan(const ColoredDivisorialFan& e);

// The ray family indexing S-variables. Default convention: all primitive
// extremal rays of element tails, minus every ray spanned by the rho of a
// color marked in at least one element; descending lexicographic order (the
// vertex family is ascending, rays run the other way so variable aliases
// match the customary presentation order). A ray_override is returned
// verbatim after validation.
std::vector<LatticeVector> rays(const ColoredDivisorialFan& e);

// Formal prime-divisor labels on P^1 x G/P: fibers Z_s, color divisors Z_D,
// and their Weyl translates w.Z_D.
struct QLabel {
  enum class Kind { point, color, translated_color };
  Kind kind;
  ProjPoint point;      // for Kind::point
  std::string color;    // for the color kinds

  friend bool operator==(const QLabel&, const QLabel&) = default;
  friend bool operator<(const QLabel& a, const QLabel& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    if (a.kind == Kind::point) return a.point < b.point;
    return a.color < b.color;
  }
};

std::string to_string(const QLabel& label, const std::string& weyl_label);

struct QDivisor {
  int element_index = 0;
  std::string weyl_label;
  std::map<QLabel, Polyhedron> coefficients;
};

// The chart divisor Q(w, D, F): rho(D) + sigma at every Z_D, the element's
// coefficient at every support fiber Z_s, and the empty polyhedron at w.Z_D
// for every unmarked color.
QDivisor build_q_divisor(const ColoredDivisorialFan& e, size_t element_index,
                         const std::string& weyl_label);

std::vector<Diagnostic> validate_colored(const ColoredDivisorialFan& e);

}  // namespace horocox
