#include "horocox/horospherical.hpp"

#include "horocox/abelian.hpp"

#include <algorithm>
#include <stdexcept>

namespace horocox {

DivisorialFan underlying_fan(const ColoredDivisorialFan& e) {
  DivisorialFan fan;
  fan.ambient_rank = e.ambient_rank;
  for (const auto& el : e.elements) fan.divisors.push_back(el.divisor);
  return fan;
}

namespace {

std::vector<LatticeVector> tail_ray_pool(const ColoredDivisorialFan& e) {
  std::vector<LatticeVector> pool;
  for (const auto& el : e.elements) {
    for (const auto& g : el.divisor.tail.generators) {
      if (std::find(pool.begin(), pool.end(), g) == pool.end()) pool.push_back(g);
    }
  }
  return pool;
}

std::set<std::string> marked_anywhere(const ColoredDivisorialFan& e) {
  std::set<std::string> names;
  for (const auto& el : e.elements) names.insert(el.marked.begin(), el.marked.end());
  return names;
}

}  // namespace

std::vector<LatticeVector> rays(const ColoredDivisorialFan& e) {
  const auto pool = tail_ray_pool(e);
  if (e.ray_override) {
    for (const auto& r : *e.ray_override) {
      if (std::find(pool.begin(), pool.end(), r) == pool.end()) {
        throw std::invalid_argument("override ray not an extremal tail ray");
      }
    }
    return *e.ray_override;
  }

  std::vector<LatticeVector> excluded;
  const auto marked = marked_anywhere(e);
  for (const auto& c : e.colors) {
    if (marked.count(c.name) && !c.rho.isZero()) {
      excluded.push_back(primitive_generator(c.rho));
    }
  }

  std::vector<LatticeVector> out;
  for (const auto& r : pool) {
    if (std::find(excluded.begin(), excluded.end(), r) == excluded.end()) out.push_back(r);
  }
  std::sort(out.begin(), out.end(),
            [](const LatticeVector& a, const LatticeVector& b) { return lex_less(b, a); });
  return out;
}

std::string to_string(const QLabel& label, const std::string& weyl_label) {
  switch (label.kind) {
    case QLabel::Kind::point:
      return "Z_" + to_string(label.point);
    case QLabel::Kind::color:
      return "Z_D(" + label.color + ")";
    case QLabel::Kind::translated_color:
      return weyl_label + ".Z_D(" + label.color + ")";
  }
  return {};
}

QDivisor build_q_divisor(const ColoredDivisorialFan& e, size_t element_index,
                         const std::string& weyl_label) {
  if (element_index >= e.elements.size()) throw std::out_of_range("element index out of range");
  const auto& el = e.elements[element_index];
  const Cone& sigma = el.divisor.tail;

  QDivisor q;
  q.element_index = static_cast<int>(element_index);
  q.weyl_label = weyl_label;

  for (const auto& c : e.colors) {
    Polyhedron shifted =
        make_polyhedron(e.ambient_rank, {to_rational(c.rho)}, sigma.generators);
    q.coefficients.emplace(QLabel{QLabel::Kind::color, ProjPoint{}, c.name}, std::move(shifted));
  }
  std::set<ProjPoint> fiber_points;
  for (const auto& y : support(underlying_fan(e))) fiber_points.insert(y);
  for (const auto& [y, coeff] : el.divisor.coefficients) fiber_points.insert(y);
  for (const auto& y : fiber_points) {
    q.coefficients.emplace(QLabel{QLabel::Kind::point, y, {}}, coefficient_at(el.divisor, y));
  }
  for (const auto& c : e.colors) {
    if (el.marked.count(c.name)) continue;
    q.coefficients.emplace(QLabel{QLabel::Kind::translated_color, ProjPoint{}, c.name},
                           empty_polyhedron(e.ambient_rank));
  }
  return q;
}

std::vector<Diagnostic> validate_colored(const ColoredDivisorialFan& e) {
  std::vector<Diagnostic> out = validate(underlying_fan(e));
  auto error = [&](std::string msg) { out.push_back({Severity::error, std::move(msg)}); };
  auto warning = [&](std::string msg) { out.push_back({Severity::warning, std::move(msg)}); };

  std::set<std::string> names;
  for (const auto& c : e.colors) {
    if (!names.insert(c.name).second) error("duplicate color name '" + c.name + "'");
    if (c.rho.size() != e.ambient_rank) error("color '" + c.name + "' has wrong rank");
  }
  for (size_t i = 0; i < e.elements.size(); ++i) {
    for (const auto& m : e.elements[i].marked) {
      if (!names.count(m)) {
        error("element " + std::to_string(i) + " marks unknown color '" + m + "'");
      }
    }
  }

  if (e.ray_override) {
    const auto pool = tail_ray_pool(e);
    for (const auto& r : *e.ray_override) {
      if (std::find(pool.begin(), pool.end(), r) == pool.end()) {
        error("override ray " + to_string(r) + " is not an extremal tail ray");
      }
    }
  }

  // Two colors on one ray with inconsistent marking is legal but suspicious.
  const auto marked = marked_anywhere(e);
  for (size_t i = 0; i < e.colors.size(); ++i) {
    for (size_t j = i + 1; j < e.colors.size(); ++j) {
      const auto& a = e.colors[i];
      const auto& b = e.colors[j];
      if (a.rho.isZero() || b.rho.isZero()) continue;
      if (primitive_generator(a.rho) != primitive_generator(b.rho)) continue;
      if (marked.count(a.name) != marked.count(b.name)) {
        warning("colors '" + a.name + "' and '" + b.name +
                "' share a ray but only one is marked");
      }
    }
  }
  return out;
}

}  // namespace horocox
