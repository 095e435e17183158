#include "wha/module_algebra.hpp"

#include <mutex>

namespace wha {

struct ModuleAlgebra::Cache {
  std::mutex mutex;
  std::map<int, Mor> u;
  std::map<int, Mor> action; // phi^n
  std::map<int, bool> group_like;
};

AxiomReport Algebra::validate(const Mor& eta, const Mor& mu) {
  if (eta.dom() != 1)
    throw Error(ErrorKind::dimension_mismatch, "eta must start at the unit object");
  const int m = eta.cod();
  if (mu.dom() != m * m || mu.cod() != m)
    throw Error(ErrorKind::dimension_mismatch, "mu must be A (x) A -> A");
  if (eta.field() != mu.field())
    throw Error(ErrorKind::field_mismatch, "eta and mu live in different fields");

  const Mor idA = Mor::identity(m, eta.field());
  AxiomReport r;
  r.checks.push_back({"unit", compose(mu, tensor(idA, eta)) == idA &&
                                  compose(mu, tensor(eta, idA)) == idA});
  r.checks.push_back({"assoc", compose(mu, tensor(idA, mu)) == compose(mu, tensor(mu, idA))});
  r.commutative = compose(mu, swap(m, m, eta.field())) == mu;
  return r;
}

Algebra Algebra::make(const Mor& eta, const Mor& mu) {
  AxiomReport r = validate(eta, mu);
  if (!r.valid())
    throw Error(ErrorKind::validation, "algebra axiom failed", r.first_failure());
  return Algebra{eta.cod(), eta.field(), eta, mu, r.commutative};
}

bool ModuleAlgebraReport::passed(const std::string& label) const {
  for (const auto& c : checks)
    if (c.label == label) return c.pass;
  throw Error(ErrorKind::internal, "no module-algebra check labelled '" + label + "'");
}

std::string ModuleAlgebraReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.pass && c.label != "b3-1") return c.label;
  return {};
}

ModuleAlgebraReport validate_module_algebra(const WeakHopf& h, const Algebra& a,
                                            const Mor& phi) {
  const int n = h.dim(), m = a.dim;
  if (h.field() != a.field || phi.field() != a.field)
    throw Error(ErrorKind::field_mismatch, "H, A and phi must share a field");
  if (phi.dom() != n * m || phi.cod() != m)
    throw Error(ErrorKind::dimension_mismatch, "phi must be H (x) A -> A");

  const FieldSpec& f = a.field;
  const Mor idH = h.id();
  const Mor idA = Mor::identity(m, f);
  const Mor cHA = swap(n, m, f);
  const Mor cHH = swap(n, n, f);
  const Mor cAA = swap(m, m, f);
  const Mor u1 = compose(phi, tensor(idH, a.eta));
  const Mor epsmu = compose(h.eps(), h.mu());

  ModuleAlgebraReport r;
  auto check = [&](const std::string& label, bool pass) {
    r.checks.push_back({label, pass});
  };

  check("b1", compose(phi, tensor(h.eta(), idA)) == idA);
  check("b2", compose(phi, tensor(idH, a.mu)) ==
                  compose(a.mu, tensor(phi, phi), tensor(idH, cHA, idA),
                          tensor(h.delta(), idA, idA)));
  check("b3", compose(phi, tensor(h.mu(), a.eta)) == compose(phi, tensor(idH, u1)));
  check("b4", compose(phi, tensor(h.piL(), idA)) == compose(a.mu, tensor(u1, idA)));
  check("b5", compose(phi, tensor(h.piLbar(), idA)) ==
                  compose(a.mu, cAA, tensor(u1, idA)));
  check("b6", compose(phi, tensor(h.piL(), a.eta)) == u1);
  check("b7", compose(phi, tensor(h.piLbar(), a.eta)) == u1);
  check("b8", compose(phi, tensor(idH, u1)) ==
                  compose(tensor(u1, epsmu), tensor(h.delta(), idH)));
  check("b9", compose(phi, tensor(idH, u1)) ==
                  compose(tensor(epsmu, u1), tensor(idH, cHH), tensor(h.delta(), idH)));
  check("b3-1", compose(phi, tensor(h.mu(), idA)) == compose(phi, tensor(idH, phi)));

  bool weak_ok = true;
  for (const auto& c : r.checks)
    if (c.label != "b3-1" && !c.pass) weak_ok = false;
  if (weak_ok)
    r.level = r.passed("b3-1") ? ActionLevel::strict : ActionLevel::weak;
  return r;
}

ModuleAlgebra::ModuleAlgebra(std::shared_ptr<const WeakHopf> h, Algebra a, Mor phi,
                             ActionLevel level)
    : h_(std::move(h)), a_(std::move(a)), phi_(std::move(phi)), level_(level),
      cache_(std::make_shared<Cache>()) {
  if (h_->cocommutative()) hl_ = hl_split(*h_);
}

ModuleAlgebra ModuleAlgebra::make(std::shared_ptr<const WeakHopf> h, Algebra a, Mor phi) {
  ModuleAlgebraReport r = validate_module_algebra(*h, a, phi);
  if (!r.valid())
    throw Error(ErrorKind::validation, "module-algebra condition failed", r.first_failure());
  return ModuleAlgebra(std::move(h), std::move(a), std::move(phi), *r.level);
}

const HLData& ModuleAlgebra::hl() const {
  if (!hl_)
    throw Error(ErrorKind::not_cocommutative, "H_L data needs a cocommutative H");
  return *hl_;
}

Mor ModuleAlgebra::u(int n) const {
  if (n < 0) throw Error(ErrorKind::bad_degree, "u_n needs n >= 0");
  {
    std::scoped_lock lock(cache_->mutex);
    auto it = cache_->u.find(n);
    if (it != cache_->u.end()) return it->second;
  }
  const Mor idH = h_->id();
  const Mor u1 = compose(phi_, tensor(idH, a_.eta));
  Mor result = u1;
  if (n == 0) {
    result = compose(u1, hl().i_L);
  } else if (n >= 2) {
    result = compose(phi_, tensor(h_->iterated_product(n), a_.eta));
    // Same map through the iterated action; both routes must agree.
    Mor via_action = compose(iterated_action(n - 1), tensor(h_->id(n - 1), u1));
    if (result != via_action)
      throw Error(ErrorKind::internal, "u_" + std::to_string(n) + " routes disagree");
  }
  std::scoped_lock lock(cache_->mutex);
  cache_->u.emplace(n, result);
  return result;
}

Mor ModuleAlgebra::iterated_action(int n) const {
  if (n < 1) throw Error(ErrorKind::bad_degree, "iterated action needs n >= 1");
  {
    std::scoped_lock lock(cache_->mutex);
    auto it = cache_->action.find(n);
    if (it != cache_->action.end()) return it->second;
  }
  Mor result = phi_;
  for (int k = 2; k <= n; ++k) result = compose(phi_, tensor(h_->id(), result));
  if (n >= 2 && strict()) {
    const Mor idA = Mor::identity(a_.dim, a_.field);
    if (result != compose(phi_, tensor(h_->iterated_product(n), idA)))
      throw Error(ErrorKind::internal, "strict action does not factor through m^n");
  }
  std::scoped_lock lock(cache_->mutex);
  cache_->action.emplace(n, result);
  return result;
}

int ModuleAlgebra::cochain_dom(int degree) const {
  if (degree < 0) throw Error(ErrorKind::bad_degree, "negative cochain degree");
  if (degree == 0) return hl().dim;
  return h_->dim_pow(degree);
}

Mor ModuleAlgebra::cochain_coproduct(int degree) const {
  if (degree < 0) throw Error(ErrorKind::bad_degree, "negative cochain degree");
  if (degree == 0) return hl().delta;
  return h_->iterated_coproduct(degree);
}

bool ModuleAlgebra::coproduct_is_group_like(int degree) const {
  {
    std::scoped_lock lock(cache_->mutex);
    auto it = cache_->group_like.find(degree);
    if (it != cache_->group_like.end()) return it->second;
  }
  const Mor delta = cochain_coproduct(degree);
  const int n = delta.dom();
  bool flag = true;
  for (int v = 0; v < n && flag; ++v)
    for (int r = 0; r < n * n && flag; ++r) {
      const Scalar& e = delta.mat().at(r, v);
      if (r == v * n + v) {
        if (e != delta.field().one()) flag = false;
      } else if (sgn(e) != 0) {
        flag = false;
      }
    }
  std::scoped_lock lock(cache_->mutex);
  cache_->group_like.emplace(degree, flag);
  return flag;
}

} // namespace wha
