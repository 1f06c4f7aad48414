#include "horocox/coxring.hpp"

#include "horocox/abelian.hpp"

#include <algorithm>
#include <stdexcept>

namespace horocox {

namespace {

// Lexicographic on exponents in variable order, highest first.
bool term_before(const Term& a, const Term& b) {
  auto ia = a.exponents.begin();
  auto ib = b.exponents.begin();
  while (ia != a.exponents.end() && ib != b.exponents.end()) {
    if (ia->first != ib->first) return ia->first < ib->first;
    if (ia->second != ib->second) return ia->second > ib->second;
    ++ia;
    ++ib;
  }
  return ia != a.exponents.end();
}

}  // namespace

bool operator==(const SparsePolynomial& a, const SparsePolynomial& b) {
  if (a.terms.size() != b.terms.size()) return false;
  for (size_t i = 0; i < a.terms.size(); ++i) {
    if (a.terms[i].coeff != b.terms[i].coeff) return false;
    if (a.terms[i].exponents != b.terms[i].exponents) return false;
  }
  return true;
}

SparsePolynomial make_polynomial(std::vector<Term> terms) {
  for (auto& t : terms) {
    std::erase_if(t.exponents, [](const auto& kv) { return kv.second == 0; });
  }
  std::sort(terms.begin(), terms.end(), term_before);
  std::vector<Term> merged;
  for (auto& t : terms) {
    if (!merged.empty() && merged.back().exponents == t.exponents) {
      merged.back().coeff += t.coeff;
    } else {
      merged.push_back(std::move(t));
    }
  }
  std::erase_if(merged, [](const Term& t) { return t.coeff == 0; });
  return SparsePolynomial{std::move(merged)};
}

bool equal_up_to_scalar(const SparsePolynomial& a, const SparsePolynomial& b) {
  if (a.terms.size() != b.terms.size()) return false;
  if (a.terms.empty()) return true;
  // a ~ b iff a_i * b_0 == b_i * a_0 for all i, with matching monomials.
  const Integer& a0 = a.terms.front().coeff;
  const Integer& b0 = b.terms.front().coeff;
  for (size_t i = 0; i < a.terms.size(); ++i) {
    if (a.terms[i].exponents != b.terms[i].exponents) return false;
    if (a.terms[i].coeff * b0 != b.terms[i].coeff * a0) return false;
  }
  return true;
}

std::vector<std::string> FlagModel::flat_generators() const {
  std::vector<std::string> out;
  for (const auto& block : blocks) out.insert(out.end(), block.begin(), block.end());
  return out;
}

namespace {

std::string strip_spaces(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c != ' ') out += c;
  }
  return out;
}

// Splits "a,b,c" at top-level commas, respecting parentheses.
std::vector<std::string> split_args(const std::string& s) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

FlagModel product_of(const std::vector<FlagModel>& factors) {
  FlagModel out;
  out.id = "product(";
  for (size_t i = 0; i < factors.size(); ++i) {
    if (i > 0) out.id += ",";
    out.id += factors[i].id;
  }
  out.id += ")";
  const bool prefix = factors.size() > 1;
  int offset = 0;
  for (size_t f = 0; f < factors.size(); ++f) {
    const auto& m = factors[f];
    for (const auto& block : m.blocks) {
      std::vector<std::string> named;
      for (const auto& g : block) {
        named.push_back(prefix ? "g" + std::to_string(f + 1) + "_" + g : g);
      }
      out.blocks.push_back(std::move(named));
    }
    for (const auto& rel : m.relations) {
      std::vector<Term> terms;
      for (const auto& t : rel.terms) {
        Term shifted{t.coeff, {}};
        for (const auto& [k, e] : t.exponents) shifted.exponents[k + offset] = e;
        terms.push_back(std::move(shifted));
      }
      out.relations.push_back(make_polynomial(std::move(terms)));
    }
    offset += static_cast<int>(m.flat_generators().size());
    out.symbolic = out.symbolic || m.symbolic;
  }
  return out;
}

}  // namespace

FlagModel flag_catalog(const std::string& raw_name) {
  const std::string name = strip_spaces(raw_name);
  auto unknown = [&] { return std::invalid_argument("unknown flag model '" + raw_name + "'"); };

  if (name == "point") {
    return FlagModel{"point", {}, {}, false};
  }
  if (name == "SL3/B") {
    FlagModel m;
    m.id = "SL3/B";
    m.blocks = {{"x1", "x2", "x3"}, {"z1", "z2", "z3"}};
    m.relations = {make_polynomial({Term{1, {{0, 1}, {3, 1}}}, Term{1, {{1, 1}, {4, 1}}},
                                    Term{1, {{2, 1}, {5, 1}}}})};
    return m;
  }
  auto parse_arg = [&](const std::string& prefix) -> std::optional<std::string> {
    if (name.size() > prefix.size() + 1 && name.compare(0, prefix.size() + 1, prefix + "(") == 0 &&
        name.back() == ')') {
      return name.substr(prefix.size() + 1, name.size() - prefix.size() - 2);
    }
    return std::nullopt;
  };
  if (auto arg = parse_arg("projective_space")) {
    int n = -1;
    try {
      size_t used = 0;
      n = std::stoi(*arg, &used);
      if (used != arg->size()) throw unknown();
    } catch (...) {
      throw unknown();
    }
    if (n < 1) throw unknown();
    FlagModel m;
    m.id = "projective_space(" + std::to_string(n) + ")";
    std::vector<std::string> gens;
    for (int i = 0; i <= n; ++i) gens.push_back("x" + std::to_string(i + 1));
    m.blocks = {gens};
    return m;
  }
  if (auto arg = parse_arg("symbolic")) {
    int k = -1;
    try {
      size_t used = 0;
      k = std::stoi(*arg, &used);
      if (used != arg->size()) throw unknown();
    } catch (...) {
      throw unknown();
    }
    if (k < 0) throw unknown();
    FlagModel m;
    m.id = "symbolic(" + std::to_string(k) + ")";
    m.blocks.assign(static_cast<size_t>(k), {});
    m.symbolic = true;
    return m;
  }
  if (auto arg = parse_arg("product")) {
    std::vector<FlagModel> factors;
    for (const auto& part : split_args(*arg)) {
      if (part.empty()) throw unknown();
      factors.push_back(flag_catalog(part));
    }
    if (factors.empty()) throw unknown();
    return product_of(factors);
  }
  throw unknown();
}

int CoxPresentation::var_index(const std::string& name_or_alias) const {
  for (size_t i = 0; i < variables.size(); ++i) {
    if (variables[i].name == name_or_alias || variables[i].alias == name_or_alias) {
      return static_cast<int>(i);
    }
  }
  throw std::invalid_argument("unknown variable '" + name_or_alias + "'");
}

namespace {

std::string vertex_var_name(const VertexDatum& v) {
  return "T_" + to_string(v.point) + "_" + to_string(v.vertex);
}

std::vector<std::string> resolve_slots(const ColoredDivisorialFan& e, const FlagModel& flag,
                                       std::vector<std::string> slot_colors) {
  if (flag.slot_count() != static_cast<int>(e.colors.size())) {
    throw std::invalid_argument("color-slot mismatch");
  }
  if (slot_colors.empty()) {
    for (const auto& c : e.colors) slot_colors.push_back(c.name);
    return slot_colors;
  }
  if (static_cast<int>(slot_colors.size()) != flag.slot_count()) {
    throw std::invalid_argument("color-slot mismatch");
  }
  std::vector<std::string> names;
  for (const auto& c : e.colors) names.push_back(c.name);
  auto sorted_a = names;
  auto sorted_b = slot_colors;
  std::sort(sorted_a.begin(), sorted_a.end());
  std::sort(sorted_b.begin(), sorted_b.end());
  if (sorted_a != sorted_b) throw std::invalid_argument("color-slot mismatch");
  return slot_colors;
}

CoxPresentation build_presentation(const ColoredDivisorialFan& e, const FlagModel& flag,
                                   std::vector<std::string> slot_colors, bool eliminated) {
  auto diagnostics = validate_colored(e);
  if (has_errors(diagnostics)) {
    std::string msg = "invalid colored divisorial fan";
    for (const auto& d : diagnostics) {
      if (d.severity == Severity::error) {
        msg += "; " + d.message;
      }
    }
    throw std::invalid_argument(msg);
  }

  CoxPresentation pres;
  pres.flag = flag;
  pres.slot_colors = resolve_slots(e, flag, std::move(slot_colors));
  pres.eliminated = eliminated;

  const auto fan = underlying_fan(e);
  const auto ray_list = rays(e);
  const auto vert_list = vert(fan);
  const auto support_points = support(fan);

  for (size_t i = 0; i < ray_list.size(); ++i) {
    Variable v;
    v.name = "S_" + to_string(ray_list[i]);
    v.alias = "s" + std::to_string(i + 1);
    v.kind = VarKind::ray;
    v.ray = ray_list[i];
    pres.variables.push_back(std::move(v));
  }
  pres.ray_count = static_cast<int>(ray_list.size());

  if (!eliminated) {
    Variable t0;
    t0.name = "T_0";
    t0.alias = "T0";
    t0.kind = VarKind::t0;
    pres.variables.push_back(std::move(t0));
    Variable t1;
    t1.name = "T_1";
    t1.alias = "T1";
    t1.kind = VarKind::t1;
    pres.variables.push_back(std::move(t1));
  }

  const int vertex_base = static_cast<int>(pres.variables.size());
  for (size_t i = 0; i < vert_list.size(); ++i) {
    Variable v;
    v.name = vertex_var_name(vert_list[i]);
    v.alias = "t" + std::to_string(i + 1);
    v.kind = VarKind::vertex;
    v.vertex = vert_list[i];
    pres.variables.push_back(std::move(v));
  }
  pres.vertex_count = static_cast<int>(vert_list.size());

  const int flag_base = static_cast<int>(pres.variables.size());
  for (int slot = 0; slot < flag.slot_count(); ++slot) {
    for (const auto& g : flag.blocks[static_cast<size_t>(slot)]) {
      Variable v;
      v.name = g;
      v.alias = g;
      v.kind = VarKind::flag;
      v.flag = FlagOrigin{slot, g};
      pres.variables.push_back(std::move(v));
    }
  }
  pres.flag_count = static_cast<int>(pres.variables.size()) - flag_base;

  // The monomial F_i = prod over vertices of the slice over y_i.
  auto support_monomial = [&](const ProjPoint& y) {
    std::map<int, int> exps;
    for (size_t i = 0; i < vert_list.size(); ++i) {
      if (vert_list[i].point == y) {
        if (!vert_list[i].multiplicity.fits_sint_p()) {
          throw std::overflow_error("vertex multiplicity exceeds supported exponent range");
        }
        exps[vertex_base + static_cast<int>(i)] =
            static_cast<int>(vert_list[i].multiplicity.get_si());
      }
    }
    return exps;
  };

  if (!eliminated) {
    const int t0 = pres.ray_count;
    const int t1 = pres.ray_count + 1;
    for (const auto& y : support_points) {
      std::vector<Term> terms;
      terms.push_back(Term{-y.alpha, {{t0, 1}}});
      terms.push_back(Term{-y.beta, {{t1, 1}}});
      terms.push_back(Term{1, support_monomial(y)});
      pres.relations.push_back(make_polynomial(std::move(terms)));
    }
  } else {
    const int r = static_cast<int>(support_points.size());
    if (r < 2) throw std::invalid_argument("elimination requires at least two support points");
    IntMatrix coords(2, r);
    for (int i = 0; i < r; ++i) {
      coords(0, i) = support_points[static_cast<size_t>(i)].alpha;
      coords(1, i) = support_points[static_cast<size_t>(i)].beta;
    }
    for (const auto& gamma : integer_kernel_basis(coords)) {
      std::vector<Term> terms;
      for (int i = 0; i < r; ++i) {
        if (gamma(i) == 0) continue;
        terms.push_back(Term{gamma(i), support_monomial(support_points[static_cast<size_t>(i)])});
      }
      pres.relations.push_back(make_polynomial(std::move(terms)));
    }
  }

  for (const auto& rel : flag.relations) {
    std::vector<Term> terms;
    for (const auto& t : rel.terms) {
      Term shifted{t.coeff, {}};
      for (const auto& [k, exp] : t.exponents) shifted.exponents[flag_base + k] = exp;
      terms.push_back(std::move(shifted));
    }
    pres.relations.push_back(make_polynomial(std::move(terms)));
  }

  return pres;
}

}  // namespace

CoxPresentation cox_presentation(const ColoredDivisorialFan& e, const FlagModel& flag,
                                 std::vector<std::string> slot_colors) {
  return build_presentation(e, flag, std::move(slot_colors), false);
}

CoxPresentation eliminated_presentation(const ColoredDivisorialFan& e, const FlagModel& flag,
                                        std::vector<std::string> slot_colors) {
  return build_presentation(e, flag, std::move(slot_colors), true);
}

std::string render(const SparsePolynomial& p, const CoxPresentation& pres) {
  if (p.terms.empty()) return "0";
  std::string out;
  for (size_t i = 0; i < p.terms.size(); ++i) {
    const Term& t = p.terms[i];
    Integer c = t.coeff;
    if (i == 0) {
      if (c < 0) {
        out += "-";
        c = -c;
      }
    } else {
      out += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    }
    std::string mono;
    for (const auto& [var, exp] : t.exponents) {
      if (!mono.empty()) mono += "*";
      mono += pres.variables[static_cast<size_t>(var)].alias;
      if (exp != 1) mono += "^" + std::to_string(exp);
    }
    if (mono.empty()) {
      out += to_string(c);
    } else {
      if (c != 1) out += to_string(c) + "*";
      out += mono;
    }
  }
  return out;
}

}  // namespace horocox
