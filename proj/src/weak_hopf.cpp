#include "wha/weak_hopf.hpp"

#include <mutex>

namespace wha {

struct WeakHopf::DeltaCache {
  std::mutex mutex;
  std::map<int, Mor> delta_pow;
};

bool AxiomReport::valid() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

bool AxiomReport::passed(const std::string& label) const {
  for (const auto& c : checks)
    if (c.label == label) return c.pass;
  throw Error(ErrorKind::internal, "no axiom check labelled '" + label + "'");
}

std::string AxiomReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.pass) return c.label;
  return {};
}

namespace {

void require_shapes(const HopfData& d) {
  const int n = d.dim;
  auto want = [&](const Mor& m, int dom, int cod, const char* what) {
    if (m.dom() != dom || m.cod() != cod)
      throw Error(ErrorKind::dimension_mismatch,
                  std::string(what) + " must be " + std::to_string(dom) + " -> " +
                      std::to_string(cod));
    if (m.field() != d.field)
      throw Error(ErrorKind::field_mismatch, std::string(what) + " lives in the wrong field");
  };
  if (n <= 0) throw Error(ErrorKind::dimension_mismatch, "dim must be positive");
  want(d.eta, 1, n, "eta");
  want(d.mu, n * n, n, "mu");
  want(d.eps, n, 1, "eps");
  want(d.delta, n, n * n, "delta");
  want(d.lambda, n, n, "lambda");
}

Mor delta_tensor_square(const HopfData& d) {
  // delta on H (x) H: (H (x) c (x) H) . (delta (x) delta)
  const Mor idH = Mor::identity(d.dim, d.field);
  const Mor c = swap(d.dim, d.dim, d.field);
  return compose(tensor(idH, c, idH), tensor(d.delta, d.delta));
}

} // namespace

Mor make_piL(const HopfData& d) {
  const Mor idH = Mor::identity(d.dim, d.field);
  const Mor c = swap(d.dim, d.dim, d.field);
  const Mor epsmu = compose(d.eps, d.mu);
  const Mor deltaeta = compose(d.delta, d.eta);
  return compose(tensor(epsmu, idH), tensor(idH, c), tensor(deltaeta, idH));
}

Mor make_piR(const HopfData& d) {
  const Mor idH = Mor::identity(d.dim, d.field);
  const Mor c = swap(d.dim, d.dim, d.field);
  const Mor epsmu = compose(d.eps, d.mu);
  const Mor deltaeta = compose(d.delta, d.eta);
  return compose(tensor(idH, epsmu), tensor(c, idH), tensor(idH, deltaeta));
}

Mor make_piLbar(const HopfData& d) {
  const Mor idH = Mor::identity(d.dim, d.field);
  const Mor epsmu = compose(d.eps, d.mu);
  const Mor deltaeta = compose(d.delta, d.eta);
  return compose(tensor(idH, epsmu), tensor(deltaeta, idH));
}

Mor make_piRbar(const HopfData& d) {
  const Mor idH = Mor::identity(d.dim, d.field);
  const Mor epsmu = compose(d.eps, d.mu);
  const Mor deltaeta = compose(d.delta, d.eta);
  return compose(tensor(epsmu, idH), tensor(idH, deltaeta));
}

AxiomReport validate_weak_hopf(const HopfData& d) {
  require_shapes(d);
  const Mor idH = Mor::identity(d.dim, d.field);
  const Mor idK = Mor::identity(1, d.field);
  const Mor c = swap(d.dim, d.dim, d.field);

  AxiomReport r;
  auto check = [&](const std::string& label, bool pass) {
    r.checks.push_back({label, pass});
  };

  check("algebra", compose(d.mu, tensor(idH, d.eta)) == idH &&
                       compose(d.mu, tensor(d.eta, idH)) == idH &&
                       compose(d.mu, tensor(idH, d.mu)) == compose(d.mu, tensor(d.mu, idH)));
  check("coalgebra",
        compose(tensor(d.eps, idH), d.delta) == idH &&
            compose(tensor(idH, d.eps), d.delta) == idH &&
            compose(tensor(d.delta, idH), d.delta) == compose(tensor(idH, d.delta), d.delta));

  const Mor dHH = delta_tensor_square(d);
  check("a1", compose(d.delta, d.mu) == compose(tensor(d.mu, d.mu), dHH));

  const Mor lhs_a2 = compose(d.eps, d.mu, tensor(d.mu, idH));
  const Mor epseps = tensor(d.eps, d.eps);
  const Mor mumu = tensor(d.mu, d.mu);
  check("a2-1", lhs_a2 == compose(epseps, mumu, tensor(idH, d.delta, idH)));
  check("a2-2", lhs_a2 == compose(epseps, mumu, tensor(idH, compose(c, d.delta), idH)));

  const Mor lhs_a3 = compose(tensor(d.delta, idH), d.delta, d.eta);
  const Mor deltadelta_eta = compose(tensor(d.delta, d.delta), tensor(d.eta, d.eta));
  check("a3-1", lhs_a3 == compose(tensor(idH, d.mu, idH), deltadelta_eta));
  check("a3-2", lhs_a3 == compose(tensor(idH, compose(d.mu, c), idH), deltadelta_eta));

  auto conv = [&](const Mor& f, const Mor& g) { return convolve(d.mu, d.delta, f, g); };
  check("a4-1", conv(idH, d.lambda) == make_piL(d));
  check("a4-2", conv(d.lambda, idH) == make_piR(d));
  check("a4-3", conv(conv(d.lambda, idH), d.lambda) == d.lambda);

  (void)idK;
  r.cocommutative = compose(c, d.delta) == d.delta;
  r.commutative = compose(d.mu, c) == d.mu;
  return r;
}

WeakHopf::WeakHopf(HopfData d)
    : d_(std::move(d)),
      piL_(make_piL(d_)),
      piR_(make_piR(d_)),
      piLbar_(make_piLbar(d_)),
      piRbar_(make_piRbar(d_)),
      omega_left_(Mor::identity(1, d_.field)),
      omega_right_(Mor::identity(1, d_.field)),
      cache_(std::make_shared<DeltaCache>()) {
  const Mor c = swap(d_.dim, d_.dim, d_.field);
  cocommutative_ = compose(c, d_.delta) == d_.delta;
  commutative_ = compose(d_.mu, c) == d_.mu;

  for (const Mor* p : {&piL_, &piR_, &piLbar_, &piRbar_})
    if (compose(*p, *p) != *p)
      throw Error(ErrorKind::validation, "projection is not idempotent", "pi-idempotent");

  const Mor dHH = delta_tensor_square(d_);
  const Mor epsmu = compose(d_.eps, d_.mu);
  const Mor idHH = Mor::identity(d_.dim * d_.dim, d_.field);
  omega_left_ = compose(tensor(epsmu, idHH), dHH);
  omega_right_ = compose(tensor(idHH, epsmu), dHH);
  for (const Mor* p : {&omega_left_, &omega_right_})
    if (compose(*p, *p) != *p)
      throw Error(ErrorKind::validation, "Omega is not idempotent", "omega-idempotent");
  if (cocommutative_) {
    if (omega_left_ != omega_right_)
      throw Error(ErrorKind::not_cocommutative,
                  "Omega left/right disagree on a cocommutative coproduct");
    omega2_ = omega_left_;
  }
}

WeakHopf WeakHopf::from_data(const HopfData& d) {
  AxiomReport r = validate_weak_hopf(d);
  if (!r.valid())
    throw Error(ErrorKind::validation, "weak Hopf axiom failed", r.first_failure());
  return WeakHopf(d);
}

WeakHopf WeakHopf::groupoid_algebra(const Groupoid& g, const FieldSpec& field) {
  const int n = g.arrow_count();
  Matrix eta(n, 1, field), mu(n, n * n, field), eps(1, n, field), delta(n * n, n, field),
      lambda(n, n, field);
  for (const auto& x : g.objects()) eta.set(g.identity_of(x), 0, field.one());
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      if (auto st = g.compose(s, t)) mu.set(*st, s * n + t, field.one());
  for (int s = 0; s < n; ++s) {
    eps.set(0, s, field.one());
    delta.set(s * n + s, s, field.one());
    lambda.set(g.inverse(s), s, field.one());
  }
  HopfData d{n,
             field,
             Mor(1, n, std::move(eta)),
             Mor(n * n, n, std::move(mu)),
             Mor(n, 1, std::move(eps)),
             Mor(n, n * n, std::move(delta)),
             Mor(n, n, std::move(lambda))};
  return from_data(d);
}

const Mor& WeakHopf::omega2() const {
  if (!omega2_)
    throw Error(ErrorKind::not_cocommutative, "Omega^2 needs a cocommutative coproduct");
  return *omega2_;
}

Mor WeakHopf::id(int tensor_power) const {
  return Mor::identity(dim_pow(tensor_power), d_.field);
}

int WeakHopf::dim_pow(int n) const {
  if (n < 0) throw Error(ErrorKind::bad_degree, "negative tensor power");
  long d = 1;
  for (int i = 0; i < n; ++i) d *= d_.dim;
  return static_cast<int>(d);
}

Mor WeakHopf::iterated_product(int n) const {
  if (n < 2) throw Error(ErrorKind::bad_degree, "iterated product needs n >= 2");
  Mor m = d_.mu;
  for (int k = 3; k <= n; ++k) m = compose(m, tensor(id(k - 2), d_.mu));
  return m;
}

Mor WeakHopf::iterated_product_left(int n) const {
  if (n < 2) throw Error(ErrorKind::bad_degree, "iterated product needs n >= 2");
  Mor m = d_.mu;
  for (int k = 3; k <= n; ++k) m = compose(m, tensor(d_.mu, id(k - 2)));
  return m;
}

Mor WeakHopf::iterated_coproduct(int n) const {
  if (n < 0) throw Error(ErrorKind::bad_degree, "negative coproduct degree");
  if (n == 0) return Mor::identity(1, d_.field);
  if (n == 1) return d_.delta;
  std::scoped_lock lock(cache_->mutex);
  // Filled bottom-up; delta_{H^k} = (H (x) c_{H,H^{k-1}} (x) H^{k-1}) . (delta (x) delta_{H^{k-1}}).
  Mor cur = d_.delta;
  for (int k = 2; k <= n; ++k) {
    auto kit = cache_->delta_pow.find(k);
    if (kit != cache_->delta_pow.end()) {
      cur = kit->second;
      continue;
    }
    const Mor idH = Mor::identity(d_.dim, d_.field);
    const Mor c = swap(d_.dim, dim_pow(k - 1), d_.field);
    cur = compose(tensor(idH, c, id(k - 1)), tensor(d_.delta, cur));
    cache_->delta_pow.emplace(k, cur);
  }
  return cur;
}

Mor WeakHopf::iterated_coproduct_split(int n, int k) const {
  if (n < 2 || k < 1 || k >= n)
    throw Error(ErrorKind::bad_degree, "split coproduct needs 1 <= k < n");
  const Mor dk = iterated_coproduct(k);
  const Mor dnk = iterated_coproduct(n - k);
  const Mor c = swap(dim_pow(k), dim_pow(n - k), d_.field);
  return compose(tensor(id(k), c, id(n - k)), tensor(dk, dnk));
}

Mor WeakHopf::counit_power(int n) const {
  if (n < 0) throw Error(ErrorKind::bad_degree, "negative counit power");
  Mor e = Mor::identity(1, d_.field);
  for (int i = 0; i < n; ++i) e = tensor(e, d_.eps);
  return e;
}

Mor WeakHopf::conv_endo(const Mor& f, const Mor& g) const {
  return convolve(d_.mu, d_.delta, f, g);
}

AxiomReport structural_identity_report(const WeakHopf& h) {
  AxiomReport r;
  auto check = [&](const std::string& label, bool pass) {
    r.checks.push_back({label, pass});
  };

  const FieldSpec& f = h.field();
  const int n = h.dim();
  const Mor idH = h.id();
  const Mor c = swap(n, n, f);
  const Mor& mu = h.mu();
  const Mor& delta = h.delta();
  const Mor& eta = h.eta();
  const Mor& eps = h.eps();
  const Mor& lam = h.antipode();
  const Mor epsmu = compose(eps, mu);
  const Mor deltaeta = compose(delta, eta);
  const Mor& piL = h.piL();
  const Mor& piR = h.piR();
  const Mor& piLbar = h.piLbar();
  const Mor& piRbar = h.piRbar();

  check("pi-conv-L", h.conv_endo(piL, piL) == piL);
  check("pi-conv-R", h.conv_endo(piR, piR) == piR);
  check("pi-conv-forms", h.conv_endo(idH, lam) == piL && h.conv_endo(lam, idH) == piR);

  check("lastone-1", compose(piL, piLbar) == piL);
  check("lastone-2", compose(piL, piRbar) == piRbar);
  check("lastone-3", compose(piR, piLbar) == piLbar);
  check("lastone-4", compose(piR, piRbar) == piR);
  check("lastone-5", compose(piLbar, piL) == piLbar);
  check("lastone-6", compose(piLbar, piR) == piR);
  check("lastone-7", compose(piRbar, piL) == piL);
  check("lastone-8", compose(piRbar, piR) == piRbar);

  check("deltamu-L", compose(piL, mu, tensor(idH, piL)) == compose(piL, mu));
  check("deltamu-R", compose(piR, mu, tensor(piR, idH)) == compose(piR, mu));
  check("deltapi-L", compose(tensor(idH, piL), delta, piL) == compose(delta, piL));
  check("deltapi-R", compose(tensor(piR, idH), delta, piR) == compose(delta, piR));

  check("delta-pi1", compose(mu, tensor(idH, piL)) ==
                         compose(tensor(epsmu, idH), tensor(idH, c), tensor(delta, idH)));
  check("delta-pi2", compose(tensor(idH, piL), delta) ==
                         compose(tensor(mu, idH), tensor(idH, c), tensor(deltaeta, idH)));
  check("delta-pi3", compose(mu, tensor(piR, idH)) ==
                         compose(tensor(idH, epsmu), tensor(c, idH), tensor(idH, delta)));
  check("delta-pi4", compose(tensor(piR, idH), delta) ==
                         compose(tensor(idH, mu), tensor(c, idH), tensor(idH, deltaeta)));
  check("delta-pi11", compose(mu, tensor(piRbar, idH)) ==
                          compose(tensor(epsmu, idH), tensor(idH, delta)));
  check("delta-pi21", compose(mu, tensor(idH, piLbar)) ==
                          compose(tensor(idH, epsmu), tensor(delta, idH)));
  check("delta-pi31", compose(tensor(piLbar, idH), delta) ==
                          compose(tensor(idH, mu), tensor(deltaeta, idH)));
  check("delta-pi41", compose(tensor(idH, piRbar), delta) ==
                          compose(tensor(mu, idH), tensor(idH, deltaeta)));

  check("antipode-antimult", compose(lam, mu) == compose(mu, tensor(lam, lam), c));
  check("antipode-anticomult", compose(delta, lam) == compose(c, tensor(lam, lam), delta));
  check("antipode-unit", compose(lam, eta) == eta);
  check("antipode-counit", compose(eps, lam) == eps);

  const Mor& oL = h.omega_left();
  const Mor& oR = h.omega_right();
  const Mor idHH = Mor::identity(n * n, f);
  check("omega-L-idem", compose(oL, oL) == oL);
  check("omega-R-idem", compose(oR, oR) == oR);
  check("omega-L-alt", oL == compose(tensor(compose(mu, tensor(idH, piL)), idH),
                                     tensor(idH, delta)));
  check("omega-R-alt", oR == compose(tensor(idH, compose(mu, tensor(piR, idH))),
                                     tensor(delta, idH)));
  check("omega-mu", compose(mu, oL) == mu && compose(mu, oR) == mu);
  check("omega-left-module", compose(oL, tensor(mu, idH)) == compose(tensor(mu, idH), tensor(idH, oL)));
  check("omega-right-module", compose(oL, tensor(idH, mu)) == compose(tensor(idH, mu), tensor(oL, idH)));
  check("omega-right-comodule",
        compose(tensor(idH, delta), oL) == compose(tensor(oL, idH), tensor(idH, delta)));

  if (h.cocommutative()) {
    check("antipode-involutive", compose(lam, lam) == idH);
    check("omega-LR-equal", oL == oR);
    const Mor dHH = h.iterated_coproduct(2);
    const Mor o2 = h.omega2();
    check("cocom-omega-delta-1", compose(dHH, o2) == compose(tensor(idHH, o2), dHH));
    check("cocom-omega-delta-2", compose(dHH, o2) == compose(tensor(o2, idHH), dHH));
    check("cocom-omega-delta-3", compose(dHH, o2) == compose(tensor(o2, o2), dHH));
  }
  r.cocommutative = h.cocommutative();
  r.commutative = h.commutative();
  return r;
}

} // namespace wha
