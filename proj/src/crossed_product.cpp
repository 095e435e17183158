#include "wha/crossed_product.hpp"

namespace wha {

namespace {

void require_cocommutative(const ModuleAlgebra& ctx) {
  if (!ctx.H().cocommutative())
    throw Error(ErrorKind::not_cocommutative, "this construction needs cocommutative H");
}

void require_regular(const Cochain& sigma) {
  if (sigma.degree != 2)
    throw Error(ErrorKind::bad_degree, "crossed products are driven by degree-2 cochains");
  if (!sigma.regular())
    throw Error(ErrorKind::not_regular, "sigma has no relative inverse");
}

} // namespace

Mor psi_map(const ModuleAlgebra& ctx) {
  const WeakHopf& h = ctx.H();
  const FieldSpec& f = ctx.field();
  const int n = h.dim(), m = ctx.A().dim;
  const Mor idA = Mor::identity(m, f);
  const Mor idH = h.id();

  Mor psi = compose(tensor(ctx.phi(), idH), tensor(idH, swap(n, m, f)),
                    tensor(h.delta(), idA));
  const Mor muA = ctx.A().mu;
  if (compose(tensor(muA, idH), tensor(idA, psi), tensor(psi, idA)) !=
      compose(psi, tensor(idH, muA)))
    throw Error(ErrorKind::internal, "psi fails the weak-measuring exchange law");
  return psi;
}

Mor sigma_lift(const ModuleAlgebra& ctx, const Cochain& sigma) {
  require_cocommutative(ctx);
  require_regular(sigma);
  const WeakHopf& h = ctx.H();
  const Mor d2 = h.iterated_coproduct(2);
  Mor lifted = compose(tensor(sigma.map, h.mu()), d2);

  const Mor idA = Mor::identity(ctx.A().dim, ctx.field());
  if (compose(tensor(idA, h.delta()), lifted) != compose(tensor(lifted, h.mu()), d2))
    throw Error(ErrorKind::internal, "sigma_H^A fails its coproduct exchange law");
  if (compose(nabla_map(ctx), lifted) != lifted)
    throw Error(ErrorKind::internal, "sigma_H^A is not nabla-invariant");
  if (compose(tensor(idA, h.eps()), lifted) != sigma.map)
    throw Error(ErrorKind::internal, "counit does not recover sigma");
  return lifted;
}

Mor nabla_map(const ModuleAlgebra& ctx) {
  const WeakHopf& h = ctx.H();
  const FieldSpec& f = ctx.field();
  const int m = ctx.A().dim;
  const Mor idA = Mor::identity(m, f);
  const Mor idH = h.id();
  const Mor muA = ctx.A().mu;

  Mor psi = psi_map(ctx);
  Mor direct = compose(tensor(muA, idH), tensor(idA, psi), tensor(idA, idH, ctx.A().eta));
  Mor via_u1 = compose(tensor(compose(muA, tensor(idA, ctx.u(1))), idH),
                       tensor(idA, h.delta()));
  if (direct != via_u1)
    throw Error(ErrorKind::internal, "the two nabla formulas disagree");
  if (compose(direct, direct) != direct)
    throw Error(ErrorKind::internal, "nabla is not idempotent");
  if (compose(tensor(idA, h.eps()), direct) != compose(muA, tensor(idA, ctx.u(1))))
    throw Error(ErrorKind::internal, "nabla fails its counit law");
  if (compose(tensor(idA, h.delta()), direct) !=
      compose(tensor(direct, idH), tensor(idA, h.delta())))
    throw Error(ErrorKind::internal, "nabla fails its coproduct law");
  return direct;
}

TwistedFlags twisted_check(const ModuleAlgebra& ctx, const Cochain& sigma) {
  require_cocommutative(ctx);
  require_regular(sigma);
  const WeakHopf& h = ctx.H();
  const FieldSpec& f = ctx.field();
  const int n = h.dim(), m = ctx.A().dim;
  const Mor idA = Mor::identity(m, f);
  const Mor idH = h.id();
  const Mor idHH = h.id(2);
  const Mor muA = ctx.A().mu;
  const Mor& phi = ctx.phi();
  const Mor psi = psi_map(ctx);
  const Mor sHA = sigma_lift(ctx, sigma);
  const Mor d2 = h.iterated_coproduct(2);

  const Mor phi2 = compose(phi, tensor(idH, phi));
  bool sigma_level =
      compose(muA, tensor(phi2, idA), tensor(idHH, swap(m, m, f)),
              tensor(compose(tensor(idHH, sigma.map), d2), idA)) ==
      compose(muA, tensor(idA, phi), tensor(sHA, idA));

  bool quadruple =
      compose(tensor(muA, idH), tensor(idA, psi), tensor(sHA, idA)) ==
      compose(tensor(muA, idH), tensor(idA, sHA), tensor(psi, idH), tensor(idH, psi));

  if (sigma_level != quadruple)
    throw Error(ErrorKind::internal, "twisted condition levels disagree");
  if (ctx.A().commutative && !sigma_level)
    throw Error(ErrorKind::internal, "twisted condition failed over a commutative A");
  return {sigma_level, quadruple};
}

CocycleFlags cocycle_check(const ModuleAlgebra& ctx, const Cochain& sigma) {
  require_cocommutative(ctx);
  require_regular(sigma);
  if (!ctx.strict())
    throw Error(ErrorKind::not_strict_module_algebra,
                "the face operators need a (strict) left H-module algebra");
  const WeakHopf& h = ctx.H();
  const FieldSpec& f = ctx.field();
  const int m = ctx.A().dim;
  const Mor idA = Mor::identity(m, f);
  const Mor idH = h.id();
  const Mor muA = ctx.A().mu;
  const Mor psi = psi_map(ctx);
  const Mor sHA = sigma_lift(ctx, sigma);

  const Mor f0 = coface(ctx, 0, sigma).map;
  const Mor f1 = coface(ctx, 1, sigma).map;
  const Mor f2 = coface(ctx, 2, sigma).map;
  const Mor f3 = coface(ctx, 3, sigma).map;
  bool faces = convolve_maps(ctx, 3, f3, f1) == convolve_maps(ctx, 3, f0, f2);

  bool direct = compose(muA, tensor(idA, sigma.map), tensor(sHA, idH)) ==
                compose(muA, tensor(idA, sigma.map), tensor(psi, idH), tensor(idH, sHA));
  if (faces != direct)
    throw Error(ErrorKind::internal, "2-cocycle characterizations disagree");

  bool quadruple =
      compose(tensor(muA, idH), tensor(idA, sHA), tensor(sHA, idH)) ==
      compose(tensor(muA, idH), tensor(idA, sHA), tensor(psi, idH), tensor(idH, sHA));
  if (faces != quadruple)
    throw Error(ErrorKind::internal, "cocycle condition levels disagree");
  return {faces, quadruple};
}

bool normal_check(const ModuleAlgebra& ctx, const Cochain& sigma) {
  if (sigma.degree != 2)
    throw Error(ErrorKind::bad_degree, "the normal condition applies in degree 2");
  const WeakHopf& h = ctx.H();
  const Mor u1 = ctx.u(1);
  bool flag = compose(sigma.map, tensor(h.eta(), h.id())) == u1 &&
              compose(sigma.map, tensor(h.id(), h.eta())) == u1;
  if (sigma.regular() && flag != is_normalized(ctx, sigma))
    throw Error(ErrorKind::internal, "normal condition disagrees with Reg^+ membership");
  return flag;
}

namespace {

// All preunit candidates are pinned by a linear system (the defining
// equations that are linear in nu, plus nabla-invariance); the quadratic
// preunit law is then checked on the solution set.
void assert_preunit_unique(const ModuleAlgebra& ctx, const CrossedProductData& cp) {
  const FieldSpec& f = ctx.field();
  const int ab = cp.dim_big;
  const int hdim = ctx.H().dim();
  const int adim = ctx.A().dim;
  const Mor idAH = Mor::identity(ab, f);
  const Mor idA = Mor::identity(adim, f);
  const Mor idH = ctx.H().id();
  const Mor muA = ctx.A().mu;
  const Mor rhs_fixed = compose(cp.nabla, tensor(ctx.A().eta, idH));

  struct Block {
    Matrix op;   // rows x ab
    Matrix rhs;  // rows x 1
  };
  std::vector<Block> blocks;
  auto add_block = [&](const std::function<Mor(const Mor&)>& t, const Mor* fixed_rhs) {
    Mor probe = t(Mor::zero(1, ab, f));
    const int rows = probe.cod() * probe.dom();
    Block b{Matrix(rows, ab, f), Matrix(rows, 1, f)};
    for (int k = 0; k < ab; ++k) {
      Matrix e(ab, 1, f);
      e.set(k, 0, f.one());
      Mor image = t(Mor(1, ab, std::move(e)));
      for (int r = 0; r < image.cod(); ++r)
        for (int c = 0; c < image.dom(); ++c)
          b.op.set(r * image.dom() + c, k, image.mat().at(r, c));
    }
    if (fixed_rhs) {
      for (int r = 0; r < fixed_rhs->cod(); ++r)
        for (int c = 0; c < fixed_rhs->dom(); ++c)
          b.rhs.set(r * fixed_rhs->dom() + c, 0, fixed_rhs->mat().at(r, c));
    }
    blocks.push_back(std::move(b));
  };

  add_block([&](const Mor& v) {
    return compose(tensor(muA, idH), tensor(idA, cp.sigmaHA), tensor(cp.psi, idH),
                   tensor(idH, v));
  }, &rhs_fixed);
  add_block([&](const Mor& v) {
    return compose(tensor(muA, idH), tensor(idA, cp.sigmaHA), tensor(v, idH));
  }, &rhs_fixed);
  add_block([&](const Mor& v) {
    return mor_sub(compose(tensor(muA, idH), tensor(idA, cp.psi), tensor(v, idA)),
                   compose(tensor(muA, idH), tensor(idA, v)));
  }, nullptr);
  add_block([&](const Mor& v) { return mor_sub(compose(cp.nabla, v), v); }, nullptr);
  add_block([&](const Mor& v) {
    return mor_sub(compose(cp.mu_big, tensor(idAH, v)), compose(cp.mu_big, tensor(v, idAH)));
  }, nullptr);

  int total_rows = 0;
  for (const auto& b : blocks) total_rows += b.op.rows();
  Matrix sys(total_rows, ab, f), rhs(total_rows, 1, f);
  int at = 0;
  for (const auto& b : blocks) {
    for (int r = 0; r < b.op.rows(); ++r) {
      for (int c = 0; c < ab; ++c) sys.set(at + r, c, b.op.at(r, c));
      rhs.set(at + r, 0, b.rhs.at(r, 0));
    }
    at += b.op.rows();
  }

  SolutionSet sol = solve_affine(sys, rhs);
  if (!sol.consistent())
    throw Error(ErrorKind::condition_failed, "preunit system inconsistent", "preunit-unique");

  auto as_mor = [&](const Matrix& v) {
    Matrix col(ab, 1, f);
    for (int r = 0; r < ab; ++r) col.set(r, 0, v.at(r, 0));
    return Mor(1, ab, std::move(col));
  };
  auto is_preunit = [&](const Mor& v) {
    Mor right = compose(cp.mu_big, tensor(idAH, v));
    Mor left = compose(cp.mu_big, tensor(v, idAH));
    Mor doubled = compose(cp.mu_big, tensor(idAH, compose(cp.mu_big, tensor(v, v))));
    return right == left && right == doubled;
  };

  if (sol.nullspace_basis.empty()) {
    Mor cand = as_mor(*sol.particular);
    if (!(is_preunit(cand) && cand == cp.nu))
      throw Error(ErrorKind::condition_failed, "a second preunit candidate differs from nu",
                  "preunit-unique");
    return;
  }

  if (!f.is_prime_field())
    throw Error(ErrorKind::condition_failed,
                "preunit solution space unexpectedly positive-dimensional",
                "preunit-unique");
  const long p = f.p();
  double size = 1;
  for (size_t i = 0; i < sol.nullspace_basis.size(); ++i) size *= static_cast<double>(p);
  if (size > 65536.0)
    throw Error(ErrorKind::condition_failed, "preunit solution space too large to sweep",
                "preunit-unique");
  std::vector<long> coeff(sol.nullspace_basis.size(), 0);
  while (true) {
    Matrix v = *sol.particular;
    for (size_t i = 0; i < coeff.size(); ++i) {
      if (coeff[i] == 0) continue;
      Scalar ci = f.from_long(coeff[i]);
      for (int r = 0; r < ab; ++r)
        v.set(r, 0, f.add(v.at(r, 0), f.mul(ci, sol.nullspace_basis[i].at(r, 0))));
    }
    Mor cand = as_mor(v);
    if (is_preunit(cand) && cand != cp.nu)
      throw Error(ErrorKind::condition_failed, "a second preunit candidate differs from nu",
                  "preunit-unique");
    size_t d = 0;
    while (d < coeff.size() && ++coeff[d] == p) coeff[d++] = 0;
    if (d == coeff.size()) break;
  }
}

} // namespace

CrossedProductData build_crossed_product(const ModuleAlgebra& ctx, const Cochain& sigma) {
  require_cocommutative(ctx);
  require_regular(sigma);
  if (!twisted_check(ctx, sigma).sigma_level)
    throw Error(ErrorKind::condition_failed, "twisted condition fails", "twisted");
  if (!cocycle_check(ctx, sigma).two_cocycle)
    throw Error(ErrorKind::condition_failed, "2-cocycle condition fails", "cocycle");
  if (!normal_check(ctx, sigma))
    throw Error(ErrorKind::condition_failed, "normal condition fails", "normal");

  const WeakHopf& h = ctx.H();
  const FieldSpec& f = ctx.field();
  const int m = ctx.A().dim;
  const Mor idA = Mor::identity(m, f);
  const Mor idH = h.id();
  const Mor muA = ctx.A().mu;

  CrossedProductData cp{ctx,
                        sigma,
                        psi_map(ctx),
                        sigma_lift(ctx, sigma),
                        nabla_map(ctx),
                        Mor::identity(1, f),
                        Mor::identity(1, f),
                        Mor::identity(1, f),
                        Mor::identity(1, f),
                        Mor::identity(1, f),
                        Mor::identity(1, f),
                        Mor::identity(1, f),
                        Mor::identity(1, f),
                        m * h.dim(),
                        0};

  auto fail = [](const std::string& label) {
    throw Error(ErrorKind::condition_failed, "crossed-product law '" + label + "' fails",
                label);
  };

  cp.mu_big = compose(tensor(muA, idH), tensor(muA, cp.sigmaHA), tensor(idA, cp.psi, idH));
  cp.nu = compose(cp.nabla, tensor(ctx.A().eta, h.eta()));
  cp.beta_nu = compose(tensor(muA, idH), tensor(idA, cp.nu));

  const Mor nab_eta_H = compose(cp.nabla, tensor(ctx.A().eta, idH));
  if (compose(cp.sigmaHA, tensor(h.eta(), idH)) != nab_eta_H ||
      compose(cp.sigmaHA, tensor(idH, h.eta())) != nab_eta_H)
    fail("sigma-preunit1");

  if (compose(tensor(muA, idH), tensor(idA, cp.sigmaHA), tensor(cp.psi, idH),
              tensor(idH, cp.nu)) != nab_eta_H)
    fail("pre1");
  if (compose(tensor(muA, idH), tensor(idA, cp.sigmaHA), tensor(cp.nu, idH)) != nab_eta_H)
    fail("pre2");
  if (compose(tensor(muA, idH), tensor(idA, cp.psi), tensor(cp.nu, idA)) != cp.beta_nu)
    fail("pre3");

  const Mor idAH = Mor::identity(cp.dim_big, f);
  if (compose(cp.mu_big, tensor(cp.mu_big, idAH)) !=
      compose(cp.mu_big, tensor(idAH, cp.mu_big)))
    fail("mu-assoc");
  if (compose(cp.nabla, cp.mu_big) != cp.mu_big) fail("mu-normalized-out");
  if (compose(cp.mu_big, tensor(cp.nabla, cp.nabla)) != cp.mu_big) fail("mu-normalized-in");
  if (compose(cp.mu_big, tensor(cp.nabla, idAH)) != cp.mu_big) fail("mu-nabla-left");
  if (compose(cp.mu_big, tensor(idAH, cp.nabla)) != cp.mu_big) fail("mu-nabla-right");
  if (compose(cp.mu_big, tensor(tensor(muA, idH), idAH)) !=
      compose(tensor(muA, idH), tensor(idA, cp.mu_big)))
    fail("mu-left-linear");

  const Mor preunit_r = compose(cp.mu_big, tensor(idAH, cp.nu));
  const Mor preunit_l = compose(cp.mu_big, tensor(cp.nu, idAH));
  if (preunit_r != preunit_l ||
      preunit_r != compose(cp.mu_big, tensor(idAH, compose(cp.mu_big, tensor(cp.nu, cp.nu)))))
    fail("preunit");
  if (preunit_r != cp.nabla) fail("preunit-nabla");

  auto [i_m, p_m] = split_idempotent(cp.nabla.mat());
  cp.dim_small = i_m.cols();
  cp.i_AH = Mor(cp.dim_small, cp.dim_big, std::move(i_m));
  cp.p_AH = Mor(cp.dim_big, cp.dim_small, std::move(p_m));

  cp.mu_small = compose(cp.p_AH, cp.mu_big, tensor(cp.i_AH, cp.i_AH));
  cp.unit_small = compose(cp.p_AH, cp.nu);

  const Mor idS = Mor::identity(cp.dim_small, f);
  if (compose(cp.mu_small, tensor(idS, cp.unit_small)) != idS ||
      compose(cp.mu_small, tensor(cp.unit_small, idS)) != idS)
    fail("unit-small");
  if (compose(cp.mu_small, tensor(cp.mu_small, idS)) !=
      compose(cp.mu_small, tensor(idS, cp.mu_small)))
    fail("assoc-small");

  if (compose(cp.beta_nu, muA) != compose(cp.mu_big, tensor(cp.beta_nu, cp.beta_nu)))
    fail("beta-multiplicative");
  if (compose(cp.beta_nu, muA) != compose(tensor(muA, idH), tensor(idA, cp.beta_nu)))
    fail("beta-left-linear");
  if (compose(cp.beta_nu, ctx.A().eta) != cp.nu) fail("beta-eta");

  assert_preunit_unique(ctx, cp);

  cp.rho = compose(tensor(cp.p_AH, idH), tensor(idA, h.delta()), cp.i_AH);
  if (!comodule_check(cp)) fail("rho-comodule");
  return cp;
}

ComoduleReport comodule_report(const CrossedProductData& cp, const Mor& rho) {
  const ModuleAlgebra& ctx = cp.ctx;
  const WeakHopf& h = ctx.H();
  const FieldSpec& f = ctx.field();
  const int b = cp.dim_small;
  const int n = h.dim();
  const Mor idB = Mor::identity(b, f);
  const Mor idH = h.id();
  const Mor& muB = cp.mu_small;
  const Mor eta_b = cp.unit_small;

  ComoduleReport r;
  auto check = [&](const std::string& label, bool pass) {
    r.checks.push_back({label, pass});
  };

  check("comodule-counit", compose(tensor(idB, h.eps()), rho) == idB);
  check("comodule-coassoc",
        compose(tensor(rho, idH), rho) == compose(tensor(idB, h.delta()), rho));

  const Mor mu_BH = compose(tensor(muB, h.mu()), tensor(idB, swap(n, b, f), idH));
  check("comod-alg", compose(mu_BH, tensor(rho, rho)) == compose(rho, muB));

  bool base = r.checks[0].pass && r.checks[1].pass && r.checks[2].pass;

  const Mor rho_eta = compose(rho, eta_b);
  const Mor delta_eta = compose(h.delta(), h.eta());
  bool d1 = compose(tensor(rho, idH), rho, eta_b) ==
            compose(tensor(idB, compose(h.mu(), swap(n, n, f)), idH),
                    tensor(rho_eta, delta_eta));
  bool d2 = compose(tensor(rho, idH), rho, eta_b) ==
            compose(tensor(idB, h.mu(), idH), tensor(rho_eta, delta_eta));
  bool d3 = compose(tensor(idB, h.piRbar()), rho) ==
            compose(tensor(muB, idH), tensor(idB, rho_eta));
  bool d4 = compose(tensor(idB, h.piL()), rho) ==
            compose(tensor(compose(muB, swap(b, b, f)), idH), tensor(idB, rho_eta));
  bool d5 = compose(tensor(idB, h.piRbar()), rho_eta) == rho_eta;
  bool d6 = compose(tensor(idB, h.piL()), rho_eta) == rho_eta;

  check("d1", d1);
  check("d2", d2);
  check("d3", d3);
  check("d4", d4);
  check("d5", d5);
  check("d6", d6);

  if (base && !(d1 == d2 && d2 == d3 && d3 == d4 && d4 == d5 && d5 == d6))
    throw Error(ErrorKind::internal, "comodule-algebra conditions d1..d6 disagree");

  r.pass = base && d1 && d2 && d3 && d4 && d5 && d6;
  return r;
}

bool comodule_check(const CrossedProductData& cp) {
  return comodule_report(cp, cp.rho).pass;
}

} // namespace wha
