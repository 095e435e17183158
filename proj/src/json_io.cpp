#include "wha/json_io.hpp"

#include <fstream>

namespace wha::io {

namespace {

[[noreturn]] void parse_fail(const std::string& msg) {
  throw Error(ErrorKind::parse, msg);
}

const json& need(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_fail(std::string("missing key '") + key + "'");
  return j.at(key);
}

} // namespace

json field_to_json(const FieldSpec& f) {
  if (f.is_prime_field()) return json{{"kind", "Fp"}, {"p", f.p()}};
  return json{{"kind", "Q"}};
}

FieldSpec field_from_json(const json& j) {
  std::string kind = need(j, "kind").get<std::string>();
  if (kind == "Q" || kind == "rationals") return FieldSpec::Q();
  if (kind == "Fp" || kind == "prime_field") return FieldSpec::Fp(need(j, "p").get<long>());
  parse_fail("unknown field kind '" + kind + "'");
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m.field().to_string(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& j, const FieldSpec& field) {
  if (!j.is_array()) parse_fail("matrix must be an array of rows");
  int rows = static_cast<int>(j.size());
  int cols = rows == 0 ? 0 : static_cast<int>(j.at(0).size());
  Matrix m(rows, cols, field);
  for (int r = 0; r < rows; ++r) {
    const json& row = j.at(r);
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      parse_fail("ragged matrix row");
    for (int c = 0; c < cols; ++c) {
      const json& e = row.at(c);
      Scalar v = e.is_string() ? field.parse(e.get<std::string>())
                               : field.from_long(e.get<long>());
      m.set(r, c, v);
    }
  }
  return m;
}

json mor_to_json(const Mor& m) {
  return json{{"dom", m.dom()},
              {"cod", m.cod()},
              {"field", field_to_json(m.field())},
              {"mat", matrix_to_json(m.mat())}};
}

Mor mor_from_json(const json& j) {
  FieldSpec f = field_from_json(need(j, "field"));
  Matrix mat = matrix_from_json(need(j, "mat"), f);
  return Mor(need(j, "dom").get<int>(), need(j, "cod").get<int>(), std::move(mat));
}

json groupoid_to_json(const Groupoid& g) {
  json arrows = json::array();
  for (const auto& a : g.arrows())
    arrows.push_back(json{{"name", a.name}, {"src", a.src}, {"tgt", a.tgt}});
  json inverses = json::object();
  for (int i = 0; i < g.arrow_count(); ++i)
    inverses[g.arrows()[i].name] = g.arrows()[g.inverse(i)].name;
  return json{{"objects", g.objects()}, {"arrows", arrows}, {"inverses", inverses}};
}

Groupoid groupoid_from_json(const json& j) {
  std::vector<std::string> objects;
  for (const auto& o : need(j, "objects")) objects.push_back(o.get<std::string>());
  std::vector<Groupoid::Arrow> arrows;
  for (const auto& a : need(j, "arrows"))
    arrows.push_back({need(a, "name").get<std::string>(), need(a, "src").get<std::string>(),
                      need(a, "tgt").get<std::string>()});
  std::map<std::string, std::string> inverses;
  for (const auto& [k, v] : need(j, "inverses").items())
    inverses.emplace(k, v.get<std::string>());
  std::optional<Groupoid::ComposeTable> table;
  if (j.contains("compose")) {
    Groupoid::ComposeTable t;
    for (const auto& e : j.at("compose")) {
      if (!e.is_array() || e.size() != 3) parse_fail("compose entries are [f,g,fg] triples");
      t.push_back({e.at(0).get<std::string>(), e.at(1).get<std::string>(),
                   e.at(2).get<std::string>()});
    }
    table = std::move(t);
  }
  return Groupoid::make(std::move(objects), std::move(arrows), inverses, table);
}

HopfData hopf_data_from_json(const json& j) {
  FieldSpec f = field_from_json(need(j, "field"));
  if (j.contains("groupoid")) {
    Groupoid g = groupoid_from_json(j.at("groupoid"));
    const int n = g.arrow_count();
    WeakHopf h = WeakHopf::groupoid_algebra(g, f);
    return HopfData{n, f, h.eta(), h.mu(), h.eps(), h.delta(), h.antipode()};
  }
  const int n = need(j, "dim").get<int>();
  auto m = [&](const char* key, int dom, int cod) {
    return Mor(dom, cod, matrix_from_json(need(j, key), f));
  };
  return HopfData{n,
                  f,
                  m("eta", 1, n),
                  m("mu", n * n, n),
                  m("eps", n, 1),
                  m("delta", n, n * n),
                  m("lambda", n, n)};
}

json hopf_data_to_json(const HopfData& d) {
  return json{{"dim", d.dim},
              {"field", field_to_json(d.field)},
              {"eta", matrix_to_json(d.eta.mat())},
              {"mu", matrix_to_json(d.mu.mat())},
              {"eps", matrix_to_json(d.eps.mat())},
              {"delta", matrix_to_json(d.delta.mat())},
              {"lambda", matrix_to_json(d.lambda.mat())}};
}

namespace {

json override_field_value(const json& j, const FieldSpec& f) {
  json out = j;
  out["field"] = field_to_json(f);
  if (out.contains("groupoid")) return out;
  return out;
}

} // namespace

ModuleAlgebra module_algebra_from_json(const json& j,
                                       const std::optional<FieldSpec>& field_override) {
  json hopf_json = need(j, "hopf");
  if (field_override) hopf_json = override_field_value(hopf_json, *field_override);
  HopfData hd = hopf_data_from_json(hopf_json);
  auto h = std::make_shared<const WeakHopf>(WeakHopf::from_data(hd));

  const FieldSpec& f = hd.field;
  const json& aj = need(j, "algebra");
  Matrix eta_m = matrix_from_json(need(aj, "eta"), f);
  const int m = eta_m.rows();
  Algebra a = Algebra::make(Mor(1, m, std::move(eta_m)),
                            Mor(m * m, m, matrix_from_json(need(aj, "mu"), f)));
  Mor phi(h->dim() * m, m, matrix_from_json(need(j, "phi"), f));
  return ModuleAlgebra::make(std::move(h), std::move(a), std::move(phi));
}

json cochain_to_json(const ModuleAlgebra& ctx, const Cochain& c) {
  (void)ctx;
  json out{{"degree", c.degree}, {"matrix", matrix_to_json(c.map.mat())}};
  if (c.inv) out["inv"] = matrix_to_json(c.inv->mat());
  out["normalized"] = c.normalized;
  return out;
}

Cochain cochain_from_json(const ModuleAlgebra& ctx, const json& j) {
  const int degree = need(j, "degree").get<int>();
  const int n = ctx.cochain_dom(degree);
  const int m = ctx.A().dim;
  Mor map(n, m, matrix_from_json(need(j, "matrix"), ctx.field()));
  Cochain c = make_cochain(ctx, degree, std::move(map));
  if (j.contains("inv")) {
    Mor given(n, m, matrix_from_json(j.at("inv"), ctx.field()));
    if (!c.inv || *c.inv != given)
      throw Error(ErrorKind::validation, "declared inverse does not verify", "c1");
  }
  return c;
}

json axiom_report_to_json(const AxiomReport& r) {
  json checks = json::object();
  for (const auto& c : r.checks) checks[c.label] = c.pass;
  return json{{"valid", r.valid()},
              {"cocommutative", r.cocommutative},
              {"commutative", r.commutative},
              {"checks", checks}};
}

json module_algebra_report_to_json(const ModuleAlgebraReport& r) {
  json checks = json::object();
  for (const auto& c : r.checks) checks[c.label] = c.pass;
  json out{{"valid", r.valid()}, {"checks", checks}};
  if (r.level)
    out["level"] = *r.level == ActionLevel::strict ? "strict" : "weak";
  return out;
}

json h2_to_json(const ModuleAlgebra& ctx, const H2Result& r) {
  json reps = json::array();
  for (const auto& c : r.class_reps) reps.push_back(matrix_to_json(c.map.mat()));
  (void)ctx;
  return json{{"order", r.order},
              {"class_reps", reps},
              {"cocycle_count", r.cocycle_count},
              {"coboundary_count", r.coboundary_count}};
}

json crossed_to_json(const CrossedProductData& cp) {
  return json{{"conditions",
               json{{"twisted", true}, {"cocycle", true}, {"normal", true}}},
              {"dims", json{{"AtensorH", cp.dim_big}, {"AtimesH", cp.dim_small}}},
              {"tables", json{{"mu_small", matrix_to_json(cp.mu_small.mat())},
                              {"unit_small", matrix_to_json(cp.unit_small.mat())},
                              {"rho", matrix_to_json(cp.rho.mat())}}},
              {"comodule", true}};
}

json classification_to_json(const ModuleAlgebra& ctx, const ClassificationReport& r) {
  (void)ctx;
  json classes = json::array();
  for (const auto& block : r.classes) {
    json members = json::array();
    for (int idx : block) members.push_back(matrix_to_json(r.cocycles[idx].map.mat()));
    classes.push_back(std::move(members));
  }
  return json{{"cocycle_count", r.cocycle_count},
              {"class_count", r.class_count},
              {"h2_order", r.h2_order},
              {"bijection_ok", r.bijection_ok},
              {"classes", classes}};
}

json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::io, "cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw Error(ErrorKind::parse, "bad JSON in '" + path + "': " + e.what());
  }
  return j;
}

} // namespace wha::io
