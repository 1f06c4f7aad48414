#include "horocox/classgroup.hpp"

#include "horocox/abelian.hpp"

#include <algorithm>
#include <stdexcept>

namespace horocox {

std::vector<DivisorGenerator> divisor_generators(const ColoredDivisorialFan& e) {
  std::vector<DivisorGenerator> out;
  for (const auto& r : rays(e)) {
    DivisorGenerator g;
    g.kind = GenKind::ray;
    g.ray = r;
    g.label = "ray " + to_string(r);
    out.push_back(std::move(g));
  }
  for (const auto& v : vert(underlying_fan(e))) {
    DivisorGenerator g;
    g.kind = GenKind::vertex;
    g.vertex = v;
    g.label = "vertex " + to_string(v.vertex) + " over " + to_string(v.point);
    out.push_back(std::move(g));
  }
  for (const auto& c : e.colors) {
    DivisorGenerator g;
    g.kind = GenKind::color;
    g.color = c.name;
    g.label = "color " + c.name;
    out.push_back(std::move(g));
  }
  DivisorGenerator fiber;
  fiber.kind = GenKind::fiber;
  fiber.label = "fiber";
  out.push_back(std::move(fiber));
  return out;
}

IntMatrix relation_matrix(const ColoredDivisorialFan& e) {
  const auto gens = divisor_generators(e);
  const auto support_points = support(underlying_fan(e));
  const int n = e.ambient_rank;
  const int g = static_cast<int>(gens.size());
  const int rows = n + static_cast<int>(support_points.size());

  IntMatrix m = IntMatrix::Zero(rows, g);

  // Character rows: the principal divisor of the eigenfunction of weight e_k.
  for (int k = 0; k < n; ++k) {
    for (int j = 0; j < g; ++j) {
      const auto& gen = gens[static_cast<size_t>(j)];
      switch (gen.kind) {
        case GenKind::ray:
          m(k, j) = gen.ray(k);
          break;
        case GenKind::vertex: {
          Rational val = gen.vertex.vertex(k) * Rational(gen.vertex.multiplicity);
          if (val.get_den() != 1) throw std::logic_error("non-integral vertex pairing");
          m(k, j) = val.get_num();
          break;
        }
        case GenKind::color: {
          int idx = -1;
          for (size_t c = 0; c < e.colors.size(); ++c) {
            if (e.colors[c].name == gen.color) idx = static_cast<int>(c);
          }
          m(k, j) = e.colors[static_cast<size_t>(idx)].rho(k);
          break;
        }
        case GenKind::fiber:
          break;
      }
    }
  }

  // Fiber rows: the fiber over y_i is linearly equivalent to the generic one.
  for (size_t i = 0; i < support_points.size(); ++i) {
    const int row = n + static_cast<int>(i);
    for (int j = 0; j < g; ++j) {
      const auto& gen = gens[static_cast<size_t>(j)];
      if (gen.kind == GenKind::vertex && gen.vertex.point == support_points[i]) {
        m(row, j) = gen.vertex.multiplicity;
      } else if (gen.kind == GenKind::fiber) {
        m(row, j) = -1;
      }
    }
  }
  return m;
}

GroupElement AbelianGroup::project(const LatticeVector& x) const {
  LatticeVector y = projection * x;
  GroupElement e;
  e.coords.resize(static_cast<size_t>(y.size()));
  for (Eigen::Index i = 0; i < y.size(); ++i) {
    if (i >= free_rank) {
      const Integer& d = torsion[static_cast<size_t>(i - free_rank)];
      Integer r;
      mpz_mod(r.get_mpz_t(), y(i).get_mpz_t(), d.get_mpz_t());
      e.coords[static_cast<size_t>(i)] = r;
    } else {
      e.coords[static_cast<size_t>(i)] = y(i);
    }
  }
  return e;
}

GroupElement AbelianGroup::project_generator(int index) const {
  LatticeVector x = LatticeVector::Zero(generator_count);
  x(index) = 1;
  return project(x);
}

GroupElement AbelianGroup::zero() const {
  GroupElement e;
  e.coords.assign(static_cast<size_t>(free_rank) + torsion.size(), Integer(0));
  return e;
}

GroupElement AbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
  GroupElement e = zero();
  for (size_t i = 0; i < e.coords.size(); ++i) {
    Integer s = a.coords[i] + b.coords[i];
    if (static_cast<int>(i) >= free_rank) {
      const Integer& d = torsion[i - static_cast<size_t>(free_rank)];
      Integer r;
      mpz_mod(r.get_mpz_t(), s.get_mpz_t(), d.get_mpz_t());
      s = r;
    }
    e.coords[i] = s;
  }
  return e;
}

GroupElement AbelianGroup::scale(const Integer& n, const GroupElement& a) const {
  GroupElement e = zero();
  for (size_t i = 0; i < e.coords.size(); ++i) {
    Integer s = n * a.coords[i];
    if (static_cast<int>(i) >= free_rank) {
      const Integer& d = torsion[i - static_cast<size_t>(free_rank)];
      Integer r;
      mpz_mod(r.get_mpz_t(), s.get_mpz_t(), d.get_mpz_t());
      s = r;
    }
    e.coords[i] = s;
  }
  return e;
}

bool AbelianGroup::is_zero(const GroupElement& a) const {
  return std::all_of(a.coords.begin(), a.coords.end(), [](const Integer& c) { return c == 0; });
}

std::string to_string(const AbelianGroup& g, const GroupElement& e) {
  std::string out = "(";
  for (int i = 0; i < g.free_rank; ++i) {
    if (i > 0) out += ",";
    out += to_string(e.coords[static_cast<size_t>(i)]);
  }
  if (!g.torsion.empty()) {
    out += " | ";
    for (size_t j = 0; j < g.torsion.size(); ++j) {
      if (j > 0) out += ",";
      out += to_string(e.coords[static_cast<size_t>(g.free_rank) + j]) + " mod " +
             to_string(g.torsion[j]);
    }
  }
  out += ")";
  return out;
}

AbelianGroup class_group(const ColoredDivisorialFan& e) {
  const IntMatrix m = relation_matrix(e);
  const int g = static_cast<int>(m.cols());
  const SNFResult snf = smith_normal_form(m);

  int rank = 0;
  const int steps = static_cast<int>(std::min(m.rows(), m.cols()));
  for (int i = 0; i < steps; ++i) {
    if (snf.S(i, i) != 0) ++rank;
  }

  AbelianGroup group;
  group.generator_count = g;
  group.free_rank = g - rank;

  // Quotient coordinates: y = V^T x splits the generator lattice along the
  // diagonal of S; rows past the rank are free, rows with d_i > 1 are
  // torsion.
  const IntMatrix vt = snf.V.transpose();
  std::vector<int> free_rows;
  std::vector<int> torsion_rows;
  for (int i = rank; i < g; ++i) free_rows.push_back(i);
  for (int i = 0; i < rank; ++i) {
    if (snf.S(i, i) > 1) {
      torsion_rows.push_back(i);
      group.torsion.push_back(snf.S(i, i));
    }
  }

  group.projection = IntMatrix::Zero(group.free_rank + static_cast<int>(torsion_rows.size()), g);
  int row = 0;
  for (int i : free_rows) group.projection.row(row++) = vt.row(i);
  for (int i : torsion_rows) group.projection.row(row++) = vt.row(i);
  return group;
}

GradedDegrees variable_degrees(const ColoredDivisorialFan& e, const CoxPresentation& pres) {
  GradedDegrees out;
  out.group = class_group(e);
  const auto gens = divisor_generators(e);

  auto generator_index = [&](auto&& pred) {
    for (size_t i = 0; i < gens.size(); ++i) {
      if (pred(gens[i])) return static_cast<int>(i);
    }
    throw std::logic_error("divisor generator not found");
  };

  const int fiber_index =
      generator_index([](const DivisorGenerator& g) { return g.kind == GenKind::fiber; });

  for (const auto& var : pres.variables) {
    switch (var.kind) {
      case VarKind::ray: {
        int idx = generator_index([&](const DivisorGenerator& g) {
          return g.kind == GenKind::ray && g.ray == var.ray;
        });
        out.by_variable.push_back(out.group.project_generator(idx));
        break;
      }
      case VarKind::vertex: {
        int idx = generator_index([&](const DivisorGenerator& g) {
          return g.kind == GenKind::vertex && g.vertex.point == var.vertex.point &&
                 g.vertex.vertex == var.vertex.vertex;
        });
        out.by_variable.push_back(out.group.project_generator(idx));
        break;
      }
      case VarKind::t0:
      case VarKind::t1:
        out.by_variable.push_back(out.group.project_generator(fiber_index));
        break;
      case VarKind::flag: {
        const std::string& color = pres.slot_colors[static_cast<size_t>(var.flag.slot)];
        int idx = generator_index([&](const DivisorGenerator& g) {
          return g.kind == GenKind::color && g.color == color;
        });
        out.by_variable.push_back(out.group.project_generator(idx));
        break;
      }
    }
  }

  for (const auto& color : pres.slot_colors) {
    int idx = generator_index(
        [&](const DivisorGenerator& g) { return g.kind == GenKind::color && g.color == color; });
    out.by_slot.push_back(out.group.project_generator(idx));
  }
  return out;
}

bool check_homogeneity(const CoxPresentation& pres, const GradedDegrees& degrees) {
  for (const auto& rel : pres.relations) {
    if (rel.terms.size() < 2) continue;
    std::optional<GroupElement> common;
    for (const auto& term : rel.terms) {
      GroupElement deg = degrees.group.zero();
      for (const auto& [var, exp] : term.exponents) {
        deg = degrees.group.add(
            deg, degrees.group.scale(Integer(exp), degrees.by_variable[static_cast<size_t>(var)]));
      }
      if (!common) {
        common = deg;
      } else if (!(*common == deg)) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace horocox
