// Command-line front end: validates fixtures, computes cohomology, builds
// crossed products, classifies them, and evaluates morphism expressions.
// Output is always JSON on stdout. Exit codes: 0 success, 1 validation
// failure, 2 usage / IO / parse error.

#include <CLI11.hpp>

#include <iostream>

#include "wha/dsl.hpp"
#include "wha/json_io.hpp"

namespace {

using wha::io::json;

int exit_code_for(const wha::Error& e) {
  switch (e.kind()) {
    case wha::ErrorKind::io:
    case wha::ErrorKind::parse:
    case wha::ErrorKind::syntax:
      return 2;
    default:
      return 1;
  }
}

void emit_error(const wha::Error& e) {
  json out{{"error", json{{"kind", wha::error_kind_name(e.kind())}, {"message", e.what()}}}};
  if (!e.label().empty()) out["error"]["label"] = e.label();
  if (e.offset() >= 0) out["error"]["offset"] = e.offset();
  std::cout << out.dump(2) << "\n";
}

std::optional<wha::FieldSpec> parse_field_flag(const std::string& text) {
  if (text.empty()) return std::nullopt;
  if (text == "Q") return wha::FieldSpec::Q();
  if (text.rfind("Fp:", 0) == 0) return wha::FieldSpec::Fp(std::stol(text.substr(3)));
  throw wha::Error(wha::ErrorKind::parse, "--field wants Q or Fp:<prime>");
}

wha::ModuleAlgebra load_context(const std::string& path,
                                const std::optional<wha::FieldSpec>& field) {
  return wha::io::module_algebra_from_json(wha::io::load_file(path), field);
}

int cmd_check(const std::string& path, const std::optional<wha::FieldSpec>& field) {
  json j = wha::io::load_file(path);
  json out;
  bool valid = false;

  if (j.contains("objects") && j.contains("arrows")) {
    wha::Groupoid g = wha::io::groupoid_from_json(j);
    wha::FieldSpec f = field ? *field
                             : (j.contains("field") ? wha::io::field_from_json(j.at("field"))
                                                    : wha::FieldSpec::Q());
    wha::HopfData d{0, f, wha::Mor::identity(1, f), wha::Mor::identity(1, f),
                    wha::Mor::identity(1, f), wha::Mor::identity(1, f),
                    wha::Mor::identity(1, f)};
    {
      wha::WeakHopf h = wha::WeakHopf::groupoid_algebra(g, f);
      d = wha::HopfData{h.dim(), f, h.eta(), h.mu(), h.eps(), h.delta(), h.antipode()};
    }
    wha::AxiomReport r = wha::validate_weak_hopf(d);
    out = wha::io::axiom_report_to_json(r);
    out["type"] = "groupoid-algebra";
    out["dim"] = d.dim;
    valid = r.valid();
  } else if (j.contains("phi")) {
    json hopf_json = j.at("hopf");
    if (field) hopf_json["field"] = wha::io::field_to_json(*field);
    wha::HopfData hd = wha::io::hopf_data_from_json(hopf_json);
    wha::AxiomReport hr = wha::validate_weak_hopf(hd);
    if (!hr.valid()) {
      out = wha::io::axiom_report_to_json(hr);
      out["type"] = "module-algebra";
    } else {
      auto h = std::make_shared<const wha::WeakHopf>(wha::WeakHopf::from_data(hd));
      const wha::FieldSpec& f = hd.field;
      const json& aj = j.at("algebra");
      wha::Matrix eta_m = wha::io::matrix_from_json(aj.at("eta"), f);
      const int m = eta_m.rows();
      wha::Algebra a = wha::Algebra::make(
          wha::Mor(1, m, std::move(eta_m)),
          wha::Mor(m * m, m, wha::io::matrix_from_json(aj.at("mu"), f)));
      wha::Mor phi(h->dim() * m, m, wha::io::matrix_from_json(j.at("phi"), f));
      wha::ModuleAlgebraReport r = wha::validate_module_algebra(*h, a, phi);
      out = wha::io::module_algebra_report_to_json(r);
      out["type"] = "module-algebra";
      out["valid"] = r.valid();
      out["cocommutative"] = hr.cocommutative;
      out["commutative"] = a.commutative;
      valid = r.valid();
    }
  } else {
    if (field) {
      json patched = j;
      patched["field"] = wha::io::field_to_json(*field);
      j = patched;
    }
    wha::HopfData d = wha::io::hopf_data_from_json(j);
    wha::AxiomReport r = wha::validate_weak_hopf(d);
    out = wha::io::axiom_report_to_json(r);
    out["type"] = "weak-hopf";
    valid = r.valid();
  }

  std::cout << out.dump(2) << "\n";
  return valid ? 0 : 1;
}

int cmd_cohomology(const std::string& path, int degree, std::uint64_t budget,
                   const std::optional<wha::FieldSpec>& field) {
  wha::ModuleAlgebra ctx = load_context(path, field);
  wha::H2Result r = wha::cohomology_group(ctx, degree, budget);
  std::cout << wha::io::h2_to_json(ctx, r).dump(2) << "\n";
  return 0;
}

int cmd_crossed(const std::string& path, const std::string& sigma_path, std::uint64_t budget,
                const std::optional<wha::FieldSpec>& field) {
  (void)budget;
  wha::ModuleAlgebra ctx = load_context(path, field);
  wha::Cochain sigma = wha::io::cochain_from_json(ctx, wha::io::load_file(sigma_path));
  wha::CrossedProductData cp = wha::build_crossed_product(ctx, sigma);
  std::cout << wha::io::crossed_to_json(cp).dump(2) << "\n";
  return 0;
}

int cmd_equiv(const std::string& path, const std::string& a_path, const std::string& b_path,
              std::uint64_t budget, const std::optional<wha::FieldSpec>& field) {
  wha::ModuleAlgebra ctx = load_context(path, field);
  wha::Cochain alpha = wha::io::cochain_from_json(ctx, wha::io::load_file(a_path));
  wha::Cochain beta = wha::io::cochain_from_json(ctx, wha::io::load_file(b_path));
  auto gauge = wha::find_equivalence(ctx, alpha, beta, budget);
  json out{{"equivalent", gauge.has_value()}};
  if (gauge) {
    out["gauge"] = json{{"f", wha::io::matrix_to_json(gauge->f.map.mat())},
                        {"f_inv", wha::io::matrix_to_json(gauge->f.inverse().mat())}};
    wha::CrossedProductData cpa = wha::build_crossed_product(ctx, alpha);
    wha::CrossedProductData cpb = wha::build_crossed_product(ctx, beta);
    out["omega"] = wha::io::matrix_to_json(wha::build_isomorphism(cpa, cpb, *gauge).mat());
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_classify(const std::string& path, std::uint64_t budget,
                 const std::optional<wha::FieldSpec>& field) {
  wha::ModuleAlgebra ctx = load_context(path, field);
  wha::ClassificationReport r = wha::classify(ctx, budget);
  std::cout << wha::io::classification_to_json(ctx, r).dump(2) << "\n";
  return 0;
}

wha::dsl::Env env_from_json(const json& j,
                            const std::optional<wha::FieldSpec>& field_override) {
  wha::dsl::Env env;
  if (j.contains("phi") && j.contains("hopf")) {
    // A module-algebra fixture binds the standard generator names.
    wha::ModuleAlgebra ctx = wha::io::module_algebra_from_json(j, field_override);
    env.field = ctx.field();
    env.objects = {{"K", 1}, {"H", ctx.H().dim()}, {"A", ctx.A().dim}};
    env.gens.emplace("eta", ctx.H().eta());
    env.gens.emplace("mu", ctx.H().mu());
    env.gens.emplace("eps", ctx.H().eps());
    env.gens.emplace("delta", ctx.H().delta());
    env.gens.emplace("lambda", ctx.H().antipode());
    env.gens.emplace("eta_A", ctx.A().eta);
    env.gens.emplace("mu_A", ctx.A().mu);
    env.gens.emplace("phi", ctx.phi());
    return env;
  }
  env.field = field_override ? *field_override
                             : wha::io::field_from_json(j.at("field"));
  for (const auto& [name, dim] : j.at("objects").items())
    env.objects[name] = dim.get<int>();
  for (const auto& [name, mor] : j.at("gens").items())
    env.gens.emplace(name, wha::io::mor_from_json(mor));
  env.validate();
  return env;
}

int cmd_eval(const std::string& env_path, const std::string& expr,
             const std::optional<wha::FieldSpec>& field) {
  wha::dsl::Env env = env_from_json(wha::io::load_file(env_path), field);
  wha::dsl::ExprPtr ast = wha::dsl::parse(expr);
  wha::Mor result = wha::dsl::eval(*ast, env);
  std::cout << wha::io::mor_to_json(result).dump(2) << "\n";
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact weak Hopf algebra toolkit"};
  app.require_subcommand(1);

  std::string field_text;
  std::uint64_t budget = 1000000;
  app.add_option("--field", field_text, "Override the fixture field (Q or Fp:<prime>)");
  app.add_option("--budget", budget, "Enumeration budget (candidate count)");

  std::string path, sigma_path, a_path, b_path, expr;
  int degree = 2;

  auto* check = app.add_subcommand("check", "Validate a fixture file");
  check->add_option("path", path)->required();

  auto* coh = app.add_subcommand("cohomology", "Compute H^k by enumeration");
  coh->add_option("path", path)->required();
  coh->add_option("--degree", degree, "Cohomology degree (1 or 2)");

  auto* crossed = app.add_subcommand("crossed", "Build a weak crossed product");
  crossed->add_option("path", path)->required();
  crossed->add_option("sigma", sigma_path)->required();

  auto* equiv = app.add_subcommand("equiv", "Search for a gauge equivalence");
  equiv->add_option("path", path)->required();
  equiv->add_option("alpha", a_path)->required();
  equiv->add_option("beta", b_path)->required();

  auto* classify = app.add_subcommand("classify", "Classify crossed products against H^2");
  classify->add_option("path", path)->required();

  auto* eval = app.add_subcommand("eval", "Evaluate a morphism expression");
  eval->add_option("env", path)->required();
  eval->add_option("expr", expr)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    std::optional<wha::FieldSpec> field = parse_field_flag(field_text);
    if (check->parsed()) return cmd_check(path, field);
    if (coh->parsed()) return cmd_cohomology(path, degree, budget, field);
    if (crossed->parsed()) return cmd_crossed(path, sigma_path, budget, field);
    if (equiv->parsed()) return cmd_equiv(path, a_path, b_path, budget, field);
    if (classify->parsed()) return cmd_classify(path, budget, field);
    if (eval->parsed()) return cmd_eval(path, expr, field);
  } catch (const wha::Error& e) {
    emit_error(e);
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cout << json{{"error", json{{"kind", "InternalError"}, {"message", e.what()}}}}.dump(2)
              << "\n";
    return 2;
  }
  return 2;
}
