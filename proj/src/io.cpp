#include "horocox/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>

namespace horocox {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw ParseError(path + ": " + message);
}

const json& member(const json& obj, const std::string& key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(path, "missing field '" + key + "'");
  return *it;
}

void check_keys(const json& obj, const std::set<std::string>& allowed, const std::string& path) {
  if (!obj.is_object()) fail(path, "expected an object");
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.count(key)) fail(path, "unknown field '" + key + "'");
  }
}

Integer get_integer(const json& v, const std::string& path) {
  if (v.is_number_integer()) return Integer(v.get<long long>());
  if (v.is_string()) {
    try {
      return Integer(v.get<std::string>());
    } catch (const std::invalid_argument&) {
      fail(path, "malformed integer '" + v.get<std::string>() + "'");
    }
  }
  fail(path, "expected an integer");
}

Rational get_rational(const json& v, const std::string& path) {
  if (v.is_number_integer()) return Rational(Integer(v.get<long long>()));
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
      fail(path, e.what());
    }
  }
  fail(path, "expected an integer or a rational string \"p/q\"");
}

LatticeVector get_lattice_vector(const json& v, int rank, const std::string& path) {
  if (!v.is_array() || static_cast<int>(v.size()) != rank) {
    fail(path, "expected an array of " + std::to_string(rank) + " integers");
  }
  LatticeVector out(rank);
  for (int i = 0; i < rank; ++i) {
    out(i) = get_integer(v[static_cast<size_t>(i)], path + "[" + std::to_string(i) + "]");
  }
  return out;
}

RationalVector get_rational_vector(const json& v, int rank, const std::string& path) {
  if (!v.is_array() || static_cast<int>(v.size()) != rank) {
    fail(path, "expected an array of " + std::to_string(rank) + " coordinates");
  }
  RationalVector out(rank);
  for (int i = 0; i < rank; ++i) {
    out(i) = get_rational(v[static_cast<size_t>(i)], path + "[" + std::to_string(i) + "]");
  }
  return out;
}

ProjPoint get_point(const json& v, const std::string& path) {
  if (!v.is_array() || v.size() != 2) fail(path, "expected a point [alpha, beta]");
  Integer a = get_integer(v[0], path + "[0]");
  Integer b = get_integer(v[1], path + "[1]");
  try {
    return ProjPoint(a, b);
  } catch (const std::invalid_argument& e) {
    fail(path, e.what());
  }
}

json integer_json(const Integer& n) {
  if (n.fits_slong_p()) return json(n.get_si());
  return json(to_string(n));
}

json lattice_vector_json(const LatticeVector& v) {
  json arr = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(integer_json(v(i)));
  return arr;
}

json rational_vector_json(const RationalVector& v) {
  json arr = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(to_string(v(i)));
  return arr;
}

}  // namespace

InputDocument parse_document(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("input is not valid JSON: ") + e.what());
  }
  check_keys(doc,
             {"schema_version", "lattice_rank", "colors", "flag_model", "elements",
              "rays_override"},
             "$");

  if (doc.contains("schema_version")) {
    const json& v = doc["schema_version"];
    if (!v.is_number_integer() || v.get<long long>() != 1) {
      fail("$.schema_version", "unsupported schema version");
    }
  }

  InputDocument out;
  {
    const json& v = member(doc, "lattice_rank", "$");
    if (!v.is_number_integer()) fail("$.lattice_rank", "expected an integer");
    const long long rank = v.get<long long>();
    if (rank < 1 || rank > 3) fail("$.lattice_rank", "unsupported rank " + std::to_string(rank));
    out.lattice_rank = static_cast<int>(rank);
  }

  std::set<std::string> color_names;
  if (doc.contains("colors")) {
    const json& colors = doc["colors"];
    if (!colors.is_array()) fail("$.colors", "expected an array");
    for (size_t i = 0; i < colors.size(); ++i) {
      const std::string path = "$.colors[" + std::to_string(i) + "]";
      check_keys(colors[i], {"name", "rho"}, path);
      Color c;
      const json& name = member(colors[i], "name", path);
      if (!name.is_string()) fail(path + ".name", "expected a string");
      c.name = name.get<std::string>();
      if (!color_names.insert(c.name).second) {
        fail(path + ".name", "duplicate color name '" + c.name + "'");
      }
      c.rho = get_lattice_vector(member(colors[i], "rho", path), out.lattice_rank, path + ".rho");
      out.colors.push_back(std::move(c));
    }
  }

  if (doc.contains("flag_model")) {
    const json& fm = doc["flag_model"];
    check_keys(fm, {"name", "color_order"}, "$.flag_model");
    const json& name = member(fm, "name", "$.flag_model");
    if (!name.is_string()) fail("$.flag_model.name", "expected a string");
    out.flag_name = name.get<std::string>();
    if (fm.contains("color_order")) {
      const json& order = fm["color_order"];
      if (!order.is_array()) fail("$.flag_model.color_order", "expected an array");
      for (size_t i = 0; i < order.size(); ++i) {
        const std::string path = "$.flag_model.color_order[" + std::to_string(i) + "]";
        if (!order[i].is_string()) fail(path, "expected a string");
        const std::string n = order[i].get<std::string>();
        if (!color_names.count(n)) fail(path, "unknown color '" + n + "'");
        out.flag_color_order.push_back(n);
      }
    }
  }
  if (out.flag_color_order.empty()) {
    for (const auto& c : out.colors) out.flag_color_order.push_back(c.name);
  }
  {
    std::vector<std::string> a = out.flag_color_order;
    std::vector<std::string> b;
    for (const auto& c : out.colors) b.push_back(c.name);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) fail("$.flag_model.color_order", "must be a permutation of the color names");
  }

  const json& elements = member(doc, "elements", "$");
  if (!elements.is_array() || elements.empty()) {
    fail("$.elements", "expected a nonempty array");
  }
  for (size_t ei = 0; ei < elements.size(); ++ei) {
    const std::string epath = "$.elements[" + std::to_string(ei) + "]";
    check_keys(elements[ei], {"tail_rays", "coefficients", "marked"}, epath);
    ElementDoc el;

    const json& tails = member(elements[ei], "tail_rays", epath);
    if (!tails.is_array()) fail(epath + ".tail_rays", "expected an array");
    for (size_t i = 0; i < tails.size(); ++i) {
      el.tail_rays.push_back(get_lattice_vector(tails[i], out.lattice_rank,
                                                epath + ".tail_rays[" + std::to_string(i) + "]"));
    }

    if (elements[ei].contains("coefficients")) {
      const json& coeffs = elements[ei]["coefficients"];
      if (!coeffs.is_array()) fail(epath + ".coefficients", "expected an array");
      std::set<ProjPoint> seen;
      for (size_t ci = 0; ci < coeffs.size(); ++ci) {
        const std::string cpath = epath + ".coefficients[" + std::to_string(ci) + "]";
        check_keys(coeffs[ci], {"point", "vertices", "rays", "empty"}, cpath);
        CoefficientDoc cd;
        cd.point = get_point(member(coeffs[ci], "point", cpath), cpath + ".point");
        if (!seen.insert(cd.point).second) {
          fail(cpath + ".point", "duplicate point " + to_string(cd.point));
        }
        if (coeffs[ci].contains("empty")) {
          const json& e = coeffs[ci]["empty"];
          if (!e.is_boolean()) fail(cpath + ".empty", "expected a boolean");
          cd.empty = e.get<bool>();
        }
        if (cd.empty) {
          if (coeffs[ci].contains("vertices") || coeffs[ci].contains("rays")) {
            fail(cpath, "an empty coefficient carries no vertices or rays");
          }
        } else {
          const json& verts = member(coeffs[ci], "vertices", cpath);
          if (!verts.is_array() || verts.empty()) {
            fail(cpath + ".vertices", "expected a nonempty array (or set empty: true)");
          }
          for (size_t i = 0; i < verts.size(); ++i) {
            cd.vertices.push_back(get_rational_vector(
                verts[i], out.lattice_rank, cpath + ".vertices[" + std::to_string(i) + "]"));
          }
          if (coeffs[ci].contains("rays")) {
            const json& rays = coeffs[ci]["rays"];
            if (!rays.is_array()) fail(cpath + ".rays", "expected an array");
            for (size_t i = 0; i < rays.size(); ++i) {
              cd.rays.push_back(get_lattice_vector(rays[i], out.lattice_rank,
                                                   cpath + ".rays[" + std::to_string(i) + "]"));
            }
          } else {
            cd.rays = el.tail_rays;
          }
        }
        el.coefficients.push_back(std::move(cd));
      }
    }

    if (elements[ei].contains("marked")) {
      const json& marked = elements[ei]["marked"];
      if (!marked.is_array()) fail(epath + ".marked", "expected an array");
      for (size_t i = 0; i < marked.size(); ++i) {
        const std::string mpath = epath + ".marked[" + std::to_string(i) + "]";
        if (!marked[i].is_string()) fail(mpath, "expected a string");
        const std::string n = marked[i].get<std::string>();
        if (!color_names.count(n)) fail(mpath, "unknown color '" + n + "'");
        el.marked.push_back(n);
      }
    }
    out.elements.push_back(std::move(el));
  }

  if (doc.contains("rays_override")) {
    const json& rays = doc["rays_override"];
    if (!rays.is_array()) fail("$.rays_override", "expected an array");
    std::vector<LatticeVector> override_rays;
    for (size_t i = 0; i < rays.size(); ++i) {
      override_rays.push_back(get_lattice_vector(rays[i], out.lattice_rank,
                                                 "$.rays_override[" + std::to_string(i) + "]"));
    }
    out.rays_override = std::move(override_rays);
  }
  return out;
}

std::string render_document(const InputDocument& doc) {
  json out;
  out["schema_version"] = 1;
  out["lattice_rank"] = doc.lattice_rank;
  out["colors"] = json::array();
  for (const auto& c : doc.colors) {
    json jc;
    jc["name"] = c.name;
    jc["rho"] = lattice_vector_json(c.rho);
    out["colors"].push_back(std::move(jc));
  }
  out["flag_model"] = json{{"name", doc.flag_name}, {"color_order", doc.flag_color_order}};
  out["elements"] = json::array();
  for (const auto& el : doc.elements) {
    json je;
    je["tail_rays"] = json::array();
    for (const auto& r : el.tail_rays) je["tail_rays"].push_back(lattice_vector_json(r));
    je["coefficients"] = json::array();
    for (const auto& cd : el.coefficients) {
      json jc;
      jc["point"] = json::array({integer_json(cd.point.alpha), integer_json(cd.point.beta)});
      if (cd.empty) {
        jc["empty"] = true;
      } else {
        jc["vertices"] = json::array();
        for (const auto& v : cd.vertices) jc["vertices"].push_back(rational_vector_json(v));
        jc["rays"] = json::array();
        for (const auto& r : cd.rays) jc["rays"].push_back(lattice_vector_json(r));
      }
      je["coefficients"].push_back(std::move(jc));
    }
    je["marked"] = el.marked;
    out["elements"].push_back(std::move(je));
  }
  if (doc.rays_override) {
    out["rays_override"] = json::array();
    for (const auto& r : *doc.rays_override) out["rays_override"].push_back(lattice_vector_json(r));
  }
  return out.dump(2) + "\n";
}

FanBundle to_colored_fan(const InputDocument& doc) {
  FanBundle bundle;
  bundle.fan.ambient_rank = doc.lattice_rank;
  bundle.fan.colors = doc.colors;
  for (const auto& el : doc.elements) {
    ColoredPolyhedralDivisor cpd;
    cpd.divisor.tail = make_cone(doc.lattice_rank, el.tail_rays);
    for (const auto& cd : el.coefficients) {
      Polyhedron coeff = cd.empty
                             ? empty_polyhedron(doc.lattice_rank)
                             : make_polyhedron(doc.lattice_rank, cd.vertices, cd.rays);
      cpd.divisor.coefficients.emplace(cd.point, std::move(coeff));
    }
    cpd.marked.insert(el.marked.begin(), el.marked.end());
    bundle.fan.elements.push_back(std::move(cpd));
  }
  bundle.fan.ray_override = doc.rays_override;
  bundle.flag = flag_catalog(doc.flag_name);
  bundle.slot_colors = doc.flag_color_order;
  return bundle;
}

namespace {

ElementDoc quadrant_element(const LatticeVector& r1, const LatticeVector& r2,
                            std::vector<CoefficientDoc> coeffs, std::vector<std::string> marked) {
  ElementDoc el;
  el.tail_rays = {r1, r2};
  for (auto& c : coeffs) {
    if (!c.empty && c.rays.empty()) c.rays = el.tail_rays;
  }
  el.coefficients = std::move(coeffs);
  el.marked = std::move(marked);
  return el;
}

CoefficientDoc coeff_at(ProjPoint p, std::vector<RationalVector> vertices) {
  CoefficientDoc c;
  c.point = std::move(p);
  c.vertices = std::move(vertices);
  return c;
}

CoefficientDoc empty_at(ProjPoint p) {
  CoefficientDoc c;
  c.point = std::move(p);
  c.empty = true;
  return c;
}

InputDocument build_sl3() {
  InputDocument doc;
  doc.lattice_rank = 2;
  doc.colors = {Color{"D1", lattice_vec({1, 0})}, Color{"D2", lattice_vec({0, 1})}};
  doc.flag_name = "SL3/B";
  doc.flag_color_order = {"D1", "D2"};

  const ProjPoint y1(0, 1), y2(1, 1), y3(2, 3);
  const RationalVector u = rational_vec({"-1/2", "1/2"});
  const RationalVector w = rational_vec({"1/4", "-1/4"});
  const RationalVector c = rational_vec({"0", "1/9"});
  const LatticeVector e1 = lattice_vec({1, 0});
  const LatticeVector e2 = lattice_vec({0, 1});

  // Two charts per unbounded-degree quadrant, with the fiber over one support
  // point removed from each so that the pair still covers P^1.
  doc.elements = {
      quadrant_element(-e1, e2, {coeff_at(y1, {u}), coeff_at(y2, {c}), coeff_at(y3, {c})}, {}),
      quadrant_element(e1, -e2, {coeff_at(y1, {w}), coeff_at(y2, {c}), coeff_at(y3, {c})},
                       {"D1"}),
      quadrant_element(e1, e2, {empty_at(y1), coeff_at(y2, {c}), coeff_at(y3, {c})}, {"D1"}),
      quadrant_element(e1, e2, {coeff_at(y1, {u, w}), empty_at(y2), coeff_at(y3, {c})}, {"D1"}),
      quadrant_element(-e1, -e2, {empty_at(y1), coeff_at(y2, {c}), coeff_at(y3, {c})}, {}),
      quadrant_element(-e1, -e2, {coeff_at(y1, {u, w}), empty_at(y2), coeff_at(y3, {c})}, {}),
  };
  return doc;
}

InputDocument build_p1p1() {
  InputDocument doc;
  doc.lattice_rank = 1;
  doc.flag_name = "point";
  const ProjPoint zero(0, 1), infinity(1, 0);
  const LatticeVector plus = lattice_vec({1});
  const LatticeVector minus = lattice_vec({-1});
  for (const auto& ray : {plus, minus}) {
    for (const auto& removed : {infinity, zero}) {
      ElementDoc el;
      el.tail_rays = {ray};
      el.coefficients = {empty_at(removed)};
      doc.elements.push_back(std::move(el));
    }
  }
  return doc;
}

}  // namespace

const std::vector<std::string>& example_names() {
  static const std::vector<std::string> names = {"sl3", "p1p1"};
  return names;
}

InputDocument builtin_document(const std::string& name) {
  if (name == "sl3") return build_sl3();
  if (name == "p1p1") return build_p1p1();
  throw std::invalid_argument("unknown example '" + name + "' (available: sl3, p1p1)");
}

}  // namespace horocox
