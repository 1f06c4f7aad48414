#include "horocox/divfan.hpp"

#include "horocox/abelian.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace horocox {

ProjPoint::ProjPoint(Integer a, Integer b) : alpha(std::move(a)), beta(std::move(b)) {
  if (alpha == 0 && beta == 0) throw std::invalid_argument("projective point (0,0)");
  Integer g = gcd(alpha, beta);
  alpha = exact_div(alpha, g);
  beta = exact_div(beta, g);
  if (beta < 0 || (beta == 0 && alpha < 0)) {
    alpha = -alpha;
    beta = -beta;
  }
}

std::string to_string(const ProjPoint& p) {
  return "[" + to_string(p.alpha) + ":" + to_string(p.beta) + "]";
}

Polyhedron coefficient_at(const PolyhedralDivisor& d, const ProjPoint& y) {
  auto it = d.coefficients.find(y);
  if (it != d.coefficients.end()) return it->second;
  return cone_as_polyhedron(d.tail);
}

bool has_errors(const std::vector<Diagnostic>& ds) {
  return std::any_of(ds.begin(), ds.end(),
                     [](const Diagnostic& d) { return d.severity == Severity::error; });
}

namespace {

std::vector<Polyhedron> dedup_cells(std::vector<Polyhedron> cells) {
  std::sort(cells.begin(), cells.end(), polyhedron_less);
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  return cells;
}

std::set<ProjPoint> listed_points(const DivisorialFan& fan) {
  std::set<ProjPoint> pts;
  for (const auto& d : fan.divisors) {
    for (const auto& [y, coeff] : d.coefficients) pts.insert(y);
  }
  return pts;
}

}  // namespace

std::vector<Polyhedron> slice(const DivisorialFan& fan, const ProjPoint& y) {
  std::vector<Polyhedron> cells;
  for (const auto& d : fan.divisors) {
    Polyhedron c = coefficient_at(d, y);
    if (!c.is_empty) cells.push_back(std::move(c));
  }
  return dedup_cells(std::move(cells));
}

std::vector<Polyhedron> generic_slice(const DivisorialFan& fan) {
  std::vector<Polyhedron> cells;
  for (const auto& d : fan.divisors) cells.push_back(cone_as_polyhedron(d.tail));
  return dedup_cells(std::move(cells));
}

std::vector<ProjPoint> support(const DivisorialFan& fan) {
  const auto generic = generic_slice(fan);
  std::vector<ProjPoint> out;
  for (const auto& y : listed_points(fan)) {
    if (slice(fan, y) != generic) out.push_back(y);
  }
  return out;
}

std::vector<VertexDatum> vert(const DivisorialFan& fan) {
  std::vector<VertexDatum> out;
  for (const auto& y : support(fan)) {
    std::vector<RationalVector> seen;
    for (const auto& cell : slice(fan, y)) {
      for (const auto& v : cell.vertices) {
        if (std::find(seen.begin(), seen.end(), v) == seen.end()) seen.push_back(v);
      }
    }
    std::sort(seen.begin(), seen.end(), LexLess<Rational>{});
    for (const auto& v : seen) out.push_back(VertexDatum{y, v, mu(v)});
  }
  return out;
}

std::map<ProjPoint, Rational> evaluate(const PolyhedralDivisor& d, const LatticeVector& m) {
  for (const auto& g : d.tail.generators) {
    Rational val = 0;
    for (Eigen::Index i = 0; i < g.size(); ++i) val += Rational(g(i)) * Rational(m(i));
    if (val < 0) throw std::domain_error("unbounded evaluation");
  }
  std::map<ProjPoint, Rational> out;
  for (const auto& [y, coeff] : d.coefficients) {
    if (coeff.is_empty) throw std::domain_error("evaluation undefined on open loci");
    auto val = min_pairing(coeff, m);
    if (!val) throw std::domain_error("unbounded evaluation");
    if (*val != 0) out.emplace(y, *val);
  }
  return out;
}

namespace {

// Coverage of N_Q by the full-dimensional cells: with face compatibility in
// force, the union is everything iff every facet of every maximal cell lies
// in a second cell.
bool covers_space(const std::vector<Polyhedron>& cells, int rank) {
  std::vector<Polyhedron> maximal;
  for (const auto& c : cells) {
    if (!c.is_empty && polyhedron_dim(c) == rank) maximal.push_back(c);
  }
  if (maximal.empty()) return false;
  for (const auto& cell : maximal) {
    for (const auto& facet : proper_facets(cell)) {
      bool shared = false;
      for (const auto& other : maximal) {
        if (other == cell) continue;
        if (polyhedron_subset(facet, other)) {
          shared = true;
          break;
        }
      }
      if (!shared) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<Diagnostic> validate(const DivisorialFan& fan) {
  std::vector<Diagnostic> out;
  auto error = [&](std::string msg) { out.push_back({Severity::error, std::move(msg)}); };
  auto warning = [&](std::string msg) { out.push_back({Severity::warning, std::move(msg)}); };

  for (size_t i = 0; i < fan.divisors.size(); ++i) {
    const auto& d = fan.divisors[i];
    if (d.tail.ambient_rank != fan.ambient_rank) {
      error("divisor " + std::to_string(i) + ": tail rank mismatch");
      return out;
    }
    for (const auto& [y, coeff] : d.coefficients) {
      if (coeff.ambient_rank != fan.ambient_rank) {
        error("divisor " + std::to_string(i) + ": coefficient rank mismatch at " + to_string(y));
        return out;
      }
      if (!coeff.is_empty && tail_cone(coeff) != d.tail) {
        error("divisor " + std::to_string(i) + ": coefficient tail mismatch at " + to_string(y));
      }
    }
  }
  if (has_errors(out)) return out;

  // Pairwise compatibility of tails and of coefficients over every listed
  // point (unlisted coefficients default to the tail).
  const auto points = listed_points(fan);
  for (size_t i = 0; i < fan.divisors.size(); ++i) {
    for (size_t j = i + 1; j < fan.divisors.size(); ++j) {
      const auto& a = fan.divisors[i];
      const auto& b = fan.divisors[j];
      if (!intersect_is_face(cone_as_polyhedron(a.tail), cone_as_polyhedron(b.tail))) {
        error("non-face tail intersection between divisors " + std::to_string(i) + " and " +
              std::to_string(j));
      }
      for (const auto& y : points) {
        Polyhedron ca = coefficient_at(a, y);
        Polyhedron cb = coefficient_at(b, y);
        if (ca.is_empty || cb.is_empty) continue;
        if (!intersect_is_face(ca, cb)) {
          error("non-face intersection at " + to_string(y));
        }
      }
    }
  }

  if (!covers_space(generic_slice(fan), fan.ambient_rank)) {
    error("tail fan does not cover N_Q");
  }
  for (const auto& y : points) {
    if (!covers_space(slice(fan, y), fan.ambient_rank)) {
      error("slice does not cover N_Q at " + to_string(y));
    }
  }

  // Degree-polyhedron check for divisors carrying nontrivial data over all of
  // P^1; tail-only divisors encode product charts and are exempt.
  for (size_t i = 0; i < fan.divisors.size(); ++i) {
    const auto& d = fan.divisors[i];
    if (d.coefficients.empty()) continue;
    bool all_nonempty = true;
    bool any_nontrivial = false;
    const Polyhedron tail_poly = cone_as_polyhedron(d.tail);
    Polyhedron degree = tail_poly;
    for (const auto& [y, coeff] : d.coefficients) {
      if (coeff.is_empty) {
        all_nonempty = false;
        break;
      }
      if (coeff != tail_poly) any_nontrivial = true;
      degree = minkowski_sum(degree, coeff);
    }
    if (!all_nonempty || !any_nontrivial) continue;
    if (!polyhedron_subset(degree, tail_poly) || degree == tail_poly) {
      warning("divisor " + std::to_string(i) +
              ": degree polyhedron not strictly contained in the tail cone");
    }
  }

  return out;
}

}  // namespace horocox
