#pragma once

// The structured input document: strict JSON parsing, canonical rendering,
// and the built-in instances.

#include "horocox/coxring.hpp"

#include <stdexcept>

namespace horocox {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CoefficientDoc {
  ProjPoint point;
  bool empty = false;
  std::vector<RationalVector> vertices;
  std::vector<LatticeVector> rays;
};

struct ElementDoc {
  std::vector<LatticeVector> tail_rays;
  std::vector<CoefficientDoc> coefficients;
  std::vector<std::string> marked;
};

struct InputDocument {
  int lattice_rank = 0;
  std::vector<Color> colors;
  std::string flag_name = "point";
  std::vector<std::string> flag_color_order;
  std::vector<ElementDoc> elements;
  std::optional<std::vector<LatticeVector>> rays_override;
};

// Strict parse: unknown fields, malformed rationals, unnormalizable points
// and out-of-range ranks are rejected with field paths.
InputDocument parse_document(const std::string& text);

std::string render_document(const InputDocument& doc);

struct FanBundle {
  ColoredDivisorialFan fan;
  FlagModel flag;
  std::vector<std::string> slot_colors;
};

FanBundle to_colored_fan(const InputDocument& doc);

const std::vector<std::string>& example_names();
InputDocument builtin_document(const std::string& name);

}  // namespace horocox
