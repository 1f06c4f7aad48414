#include "horocox/cli.hpp"

#include "horocox/classgroup.hpp"
#include "horocox/io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <sstream>

namespace horocox {

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitUsage = 2;

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path);
  if (!file) throw ParseError("cannot open input file '" + path + "'");
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

std::string severity_name(Severity s) { return s == Severity::error ? "error" : "warning"; }

std::string kind_name(VarKind k) {
  switch (k) {
    case VarKind::ray:
      return "ray";
    case VarKind::vertex:
      return "vertex";
    case VarKind::t0:
    case VarKind::t1:
      return "fiber";
    case VarKind::flag:
      return "flag";
  }
  return {};
}

json rational_vector_json(const RationalVector& v) {
  json arr = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(to_string(v(i)));
  return arr;
}

json lattice_vector_json(const LatticeVector& v) {
  json arr = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(to_string(v(i)));
  return arr;
}

json polyhedron_json(const Polyhedron& p) {
  json out;
  if (p.is_empty) {
    out["empty"] = true;
    return out;
  }
  out["vertices"] = json::array();
  for (const auto& v : p.vertices) out["vertices"].push_back(rational_vector_json(v));
  out["rays"] = json::array();
  for (const auto& r : p.rays) out["rays"].push_back(lattice_vector_json(r));
  return out;
}

std::string variable_describe(const Variable& v, const CoxPresentation& pres) {
  switch (v.kind) {
    case VarKind::ray:
      return "ray " + to_string(v.ray);
    case VarKind::vertex:
      return "vertex " + to_string(v.vertex.vertex) + " over " + to_string(v.vertex.point) +
             ", multiplicity " + to_string(v.vertex.multiplicity);
    case VarKind::t0:
    case VarKind::t1:
      return "fiber coordinate";
    case VarKind::flag:
      return "flag generator, slot " + std::to_string(v.flag.slot + 1) + " ~ color " +
             pres.slot_colors[static_cast<size_t>(v.flag.slot)];
  }
  return {};
}

json variable_json(const Variable& v, const CoxPresentation& pres) {
  json out;
  out["name"] = v.name;
  out["alias"] = v.alias;
  out["kind"] = kind_name(v.kind);
  switch (v.kind) {
    case VarKind::ray:
      out["ray"] = lattice_vector_json(v.ray);
      break;
    case VarKind::vertex:
      out["point"] = json::array(
          {to_string(v.vertex.point.alpha), to_string(v.vertex.point.beta)});
      out["vertex"] = rational_vector_json(v.vertex.vertex);
      out["multiplicity"] = to_string(v.vertex.multiplicity);
      break;
    case VarKind::flag:
      out["slot"] = v.flag.slot + 1;
      out["color"] = pres.slot_colors[static_cast<size_t>(v.flag.slot)];
      break;
    default:
      break;
  }
  return out;
}

json relation_json(const SparsePolynomial& p, const CoxPresentation& pres) {
  json terms = json::array();
  for (const auto& t : p.terms) {
    json term;
    term["coefficient"] = to_string(t.coeff);
    json mono;
    for (const auto& [var, exp] : t.exponents) {
      mono[pres.variables[static_cast<size_t>(var)].alias] = exp;
    }
    term["monomial"] = std::move(mono);
    terms.push_back(std::move(term));
  }
  return json{{"rendered", render(p, pres)}, {"terms", std::move(terms)}};
}

json degree_json(const AbelianGroup& g, const GroupElement& e) {
  json out;
  json free = json::array();
  for (int i = 0; i < g.free_rank; ++i) free.push_back(to_string(e.coords[static_cast<size_t>(i)]));
  out["free"] = std::move(free);
  json torsion = json::array();
  for (size_t j = 0; j < g.torsion.size(); ++j) {
    torsion.push_back(json{{"value", to_string(e.coords[static_cast<size_t>(g.free_rank) + j])},
                           {"modulus", to_string(g.torsion[j])}});
  }
  out["torsion"] = std::move(torsion);
  return out;
}

void print_flag_factor(const CoxPresentation& pres, std::ostream& out) {
  out << "flag factor: " << pres.flag.id;
  if (pres.flag.symbolic) {
    out << " (opaque tensor factor; slots:";
    for (size_t i = 0; i < pres.slot_colors.size(); ++i) {
      out << (i == 0 ? " " : ", ") << pres.slot_colors[i];
    }
    out << ")";
  }
  out << "\n";
}

int cmd_validate(const FanBundle& bundle, const std::string& format, std::ostream& out) {
  auto diagnostics = validate_colored(bundle.fan);
  if (format == "structured") {
    json doc;
    doc["schema_version"] = 1;
    doc["diagnostics"] = json::array();
    for (const auto& d : diagnostics) {
      doc["diagnostics"].push_back(
          json{{"severity", severity_name(d.severity)}, {"message", d.message}});
    }
    out << doc.dump(2) << "\n";
  } else {
    for (const auto& d : diagnostics) {
      out << severity_name(d.severity) << ": " << d.message << "\n";
    }
  }
  return has_errors(diagnostics) ? kExitValidation : kExitOk;
}

int cmd_cox(const FanBundle& bundle, bool eliminate, const std::string& format,
            std::ostream& out) {
  const CoxPresentation pres =
      eliminate ? eliminated_presentation(bundle.fan, bundle.flag, bundle.slot_colors)
                : cox_presentation(bundle.fan, bundle.flag, bundle.slot_colors);
  if (format == "structured") {
    json doc;
    doc["schema_version"] = 1;
    doc["eliminated"] = pres.eliminated;
    doc["variables"] = json::array();
    for (const auto& v : pres.variables) doc["variables"].push_back(variable_json(v, pres));
    doc["relations"] = json::array();
    for (const auto& r : pres.relations) doc["relations"].push_back(relation_json(r, pres));
    doc["flag"] = json{{"id", pres.flag.id},
                       {"symbolic", pres.flag.symbolic},
                       {"slot_colors", pres.slot_colors}};
    out << doc.dump(2) << "\n";
    return kExitOk;
  }
  out << "cox presentation (" << (pres.eliminated ? "eliminated" : "full") << " form)\n";
  out << "variables (" << pres.variables.size() << "):\n";
  for (const auto& v : pres.variables) {
    out << "  " << v.alias;
    if (v.alias != v.name) out << " = " << v.name;
    out << "   [" << variable_describe(v, pres) << "]\n";
  }
  out << "relations (" << pres.relations.size() << "):\n";
  for (const auto& r : pres.relations) out << "  " << render(r, pres) << "\n";
  print_flag_factor(pres, out);
  return kExitOk;
}

int cmd_classgroup(const FanBundle& bundle, const std::string& format, std::ostream& out) {
  const CoxPresentation pres = cox_presentation(bundle.fan, bundle.flag, bundle.slot_colors);
  const GradedDegrees degrees = variable_degrees(bundle.fan, pres);
  const AbelianGroup& group = degrees.group;

  if (format == "structured") {
    json doc;
    doc["schema_version"] = 1;
    doc["free_rank"] = group.free_rank;
    doc["invariant_factors"] = json::array();
    for (const auto& d : group.torsion) doc["invariant_factors"].push_back(to_string(d));
    doc["degrees"] = json::array();
    for (size_t i = 0; i < pres.variables.size(); ++i) {
      doc["degrees"].push_back(json{{"variable", pres.variables[i].alias},
                                    {"degree", degree_json(group, degrees.by_variable[i])}});
    }
    doc["slot_degrees"] = json::array();
    for (size_t i = 0; i < degrees.by_slot.size(); ++i) {
      doc["slot_degrees"].push_back(json{{"color", pres.slot_colors[i]},
                                         {"degree", degree_json(group, degrees.by_slot[i])}});
    }
    out << doc.dump(2) << "\n";
    return kExitOk;
  }

  out << "class group: rank " << group.free_rank << ", torsion [";
  for (size_t j = 0; j < group.torsion.size(); ++j) {
    out << (j ? ", " : "") << to_string(group.torsion[j]);
  }
  out << "]\n";
  out << "degrees:\n";
  for (size_t i = 0; i < pres.variables.size(); ++i) {
    out << "  " << pres.variables[i].alias << ": "
        << to_string(group, degrees.by_variable[i]) << "\n";
  }
  return kExitOk;
}

int cmd_tfan(const FanBundle& bundle, const std::string& weyl, const std::string& format,
             std::ostream& out) {
  json elements = json::array();
  for (size_t i = 0; i < bundle.fan.elements.size(); ++i) {
    const QDivisor q = build_q_divisor(bundle.fan, i, weyl);
    if (format == "structured") {
      json je;
      je["element"] = i;
      je["tail_rays"] = json::array();
      for (const auto& g : bundle.fan.elements[i].divisor.tail.generators) {
        je["tail_rays"].push_back(lattice_vector_json(g));
      }
      je["coefficients"] = json::array();
      for (const auto& [label, coeff] : q.coefficients) {
        je["coefficients"].push_back(json{{"label", to_string(label, q.weyl_label)},
                                          {"coefficient", polyhedron_json(coeff)}});
      }
      elements.push_back(std::move(je));
    } else {
      out << "element " << i << " ("
          << to_string(bundle.fan.elements[i].divisor.tail) << "), weyl label " << weyl << ":\n";
      for (const auto& [label, coeff] : q.coefficients) {
        out << "  " << to_string(label, q.weyl_label) << " -> " << to_string(coeff) << "\n";
      }
    }
  }
  if (format == "structured") {
    json doc;
    doc["schema_version"] = 1;
    doc["weyl_label"] = weyl;
    doc["elements"] = std::move(elements);
    out << doc.dump(2) << "\n";
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Cox rings of complete rational complexity-one horospherical varieties"};
  app.require_subcommand(1);

  std::string file = "-";
  std::string format = "text";
  std::string weyl = "e";
  bool eliminate = false;
  std::string example_name;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("file", file, "input document ('-' for stdin)");
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "structured"}));
  };

  CLI::App* validate_cmd = app.add_subcommand("validate", "check the combinatorial data");
  add_common(validate_cmd);
  CLI::App* cox_cmd = app.add_subcommand("cox", "print the Cox ring presentation");
  add_common(cox_cmd);
  cox_cmd->add_flag("--eliminate", eliminate, "eliminate the homogeneous fiber coordinates");
  CLI::App* class_cmd = app.add_subcommand("classgroup", "print the divisor class group");
  add_common(class_cmd);
  CLI::App* tfan_cmd = app.add_subcommand("tfan", "print the torus-action chart coefficients");
  add_common(tfan_cmd);
  tfan_cmd->add_option("--weyl", weyl, "weyl label for the translated color divisors");
  CLI::App* example_cmd = app.add_subcommand("example", "emit a built-in input document");
  example_cmd->add_option("name", example_name, "example name (sl3, p1p1)")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help and friends.
      return app.exit(e, out, err);
    }
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (example_cmd->parsed()) {
      try {
        out << render_document(builtin_document(example_name));
      } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
      }
      return kExitOk;
    }
    const FanBundle bundle = to_colored_fan(parse_document(read_input(file, in)));
    if (validate_cmd->parsed()) return cmd_validate(bundle, format, out);
    if (cox_cmd->parsed()) return cmd_cox(bundle, eliminate, format, out);
    if (class_cmd->parsed()) return cmd_classgroup(bundle, format, out);
    if (tfan_cmd->parsed()) return cmd_tfan(bundle, weyl, format, out);
    err << "error: no command\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }
}

}  // namespace horocox
