#include <doctest.h>

#include "fixtures.hpp"
#include "wha/equivalence.hpp"

using namespace wha;
using namespace wha::testing;

namespace {

const ModuleAlgebra& z2f3() {
  static const ModuleAlgebra ctx = trivial_action_ctx(z2_groupoid(), FieldSpec::Fp(3));
  return ctx;
}

Cochain z2f3_cocycle(long at_gg) {
  Matrix m(1, 4, z2f3().field());
  m.set(0, 0, z2f3().field().one());
  m.set(0, 1, z2f3().field().one());
  m.set(0, 2, z2f3().field().one());
  m.set(0, 3, z2f3().field().from_long(at_gg));
  return make_cochain(z2f3(), 2, Mor(4, 1, std::move(m)));
}

Mor gamma_formula(const ModuleAlgebra& ctx, const Mor& f) {
  const Mor idA = Mor::identity(ctx.A().dim, ctx.field());
  return compose(tensor(compose(ctx.A().mu, tensor(idA, f)), ctx.H().id()),
                 tensor(idA, ctx.H().delta()));
}

Mor recover_f(const ModuleAlgebra& ctx, const Mor& gamma) {
  const Mor idA = Mor::identity(ctx.A().dim, ctx.field());
  return compose(tensor(idA, ctx.H().eps()), gamma, tensor(ctx.A().eta, ctx.H().id()));
}

} // namespace

TEST_CASE("the neutral gauge is nabla") {
  const ModuleAlgebra& ctx = z2f3();
  Gauge g = gamma_of(ctx, unit_cochain(ctx, 1));
  CHECK(g.gamma == nabla_map(ctx));
  CHECK(g.gamma_inv == nabla_map(ctx));
}

TEST_CASE("gauges over an ordinary Hopf algebra are invertible") {
  const ModuleAlgebra& ctx = z2f3();
  for (const Cochain& f : enumerate_reg_plus(ctx, 1)) {
    Gauge g = gamma_of(ctx, f);
    // nabla = id here, so the pair is a genuine inverse pair.
    CHECK(compose(g.gamma, g.gamma_inv) == Mor::identity(2, ctx.field()));
    CHECK(recover_f(ctx, g.gamma) == f.map);
  }
}

TEST_CASE("the gauge correspondence is a bijection on arbitrary maps") {
  auto rng = fixed_rng(81);
  for (auto ctx : {translation_ctx(indiscrete2_groupoid(), FieldSpec::Fp(3)), z2f3()}) {
    for (int trial = 0; trial < 12; ++trial) {
      Mor f = random_mor(ctx.H().dim(), ctx.A().dim, ctx.field(), rng);
      Mor gamma = gamma_formula(ctx, f);
      CHECK(recover_f(ctx, gamma) == f);
      CHECK(gamma_formula(ctx, recover_f(ctx, gamma)) == gamma);
      // Gamma_f is left A-linear and right H-colinear by construction.
      const Mor idA = Mor::identity(ctx.A().dim, ctx.field());
      Mor act = tensor(ctx.A().mu, ctx.H().id());
      CHECK(compose(gamma, act) == compose(act, tensor(idA, gamma)));
      Mor coact = tensor(idA, ctx.H().delta());
      CHECK(compose(coact, gamma) == compose(tensor(gamma, ctx.H().id()), coact));
    }
  }
}

TEST_CASE("sandwich laws hold exactly for relative-inverse pairs") {
  const ModuleAlgebra& ctx = z2f3();
  const Mor nabla = nabla_map(ctx);
  // Sweep all 81 pairs of degree-1 maps over F3.
  for (long a0 = 0; a0 < 3; ++a0)
    for (long a1 = 0; a1 < 3; ++a1)
      for (long b0 = 0; b0 < 3; ++b0)
        for (long b1 = 0; b1 < 3; ++b1) {
          Matrix fm(1, 2, ctx.field());
          fm.set(0, 0, ctx.field().from_long(a0));
          fm.set(0, 1, ctx.field().from_long(a1));
          Matrix gm(1, 2, ctx.field());
          gm.set(0, 0, ctx.field().from_long(b0));
          gm.set(0, 1, ctx.field().from_long(b1));
          Mor f(2, 1, fm), g(2, 1, gm);
          Mor gf = gamma_formula(ctx, f), gg = gamma_formula(ctx, g);
          bool gauge_laws = compose(gf, gg) == nabla && compose(gg, gf) == nabla &&
                            compose(gf, gg, gf) == gf && compose(gg, gf, gg) == gg;
          Mor u = ctx.u(1);
          bool inverse_laws =
              convolve_maps(ctx, 1, f, g) == u && convolve_maps(ctx, 1, g, f) == u &&
              convolve_maps(ctx, 1, convolve_maps(ctx, 1, f, g), f) == f &&
              convolve_maps(ctx, 1, convolve_maps(ctx, 1, g, f), g) == g;
          CHECK(gauge_laws == inverse_laws);
        }
}

TEST_CASE("gauge links: reflexivity and the obstructed pair") {
  const ModuleAlgebra& ctx = z2f3();
  Cochain u2 = unit_cochain(ctx, 2);
  Cochain nontrivial = z2f3_cocycle(2);
  Cochain u1 = unit_cochain(ctx, 1);

  CHECK(gauge_links(ctx, u1, u2, u2));
  // No normalized regular degree-1 cochain can link the two classes.
  for (const Cochain& f : enumerate_reg_plus(ctx, 1)) {
    CHECK_FALSE(gauge_links(ctx, f, u2, nontrivial));
    CHECK_FALSE(gauge_links(ctx, f, nontrivial, u2));
  }
}

TEST_CASE("gauge links cohomologous pairs built by construction") {
  for (auto ctx : {z2f3(), translation_ctx(discrete2_groupoid(), FieldSpec::Fp(3))}) {
    std::vector<Cochain> fs = enumerate_reg_plus(ctx, 1);
    std::vector<Cochain> cocycles;
    for (const Cochain& s : enumerate_reg_plus(ctx, 2))
      if (cocycle_check(ctx, s).two_cocycle) cocycles.push_back(s);
    for (const Cochain& alpha : cocycles)
      for (const Cochain& f : fs) {
        Cochain beta = convolution(ctx, alpha, coboundary(ctx, f));
        REQUIRE(beta.regular());
        CHECK(gauge_links(ctx, f, alpha, beta));
        // Symmetry through the inverse cochain.
        CHECK(gauge_links(ctx, f.inverted(), beta, alpha));
      }
  }
}

TEST_CASE("find_equivalence: reflexive, obstructed, and constructed pairs") {
  const ModuleAlgebra& ctx = z2f3();
  Cochain u2 = unit_cochain(ctx, 2);
  Cochain nontrivial = z2f3_cocycle(2);

  auto self_link = find_equivalence(ctx, u2, u2);
  REQUIRE(self_link.has_value());
  CHECK(self_link->f.map == ctx.u(1));

  CHECK_FALSE(find_equivalence(ctx, u2, nontrivial).has_value());

  for (const Cochain& f : enumerate_reg_plus(ctx, 1)) {
    Cochain beta = convolution(ctx, nontrivial, coboundary(ctx, f));
    auto found = find_equivalence(ctx, nontrivial, beta);
    CHECK(found.has_value());
  }
}

TEST_CASE("build_isomorphism: identity on the reflexive gauge") {
  const ModuleAlgebra& ctx = z2f3();
  Cochain u2 = unit_cochain(ctx, 2);
  CrossedProductData cp = build_crossed_product(ctx, u2);
  Gauge g = gamma_of(ctx, unit_cochain(ctx, 1));
  Mor omega = build_isomorphism(cp, cp, g);
  CHECK(omega == Mor::identity(cp.dim_small, ctx.field()));
}

TEST_CASE("build_isomorphism on a cohomologous pair") {
  const ModuleAlgebra& ctx = z2f3();
  Cochain alpha = z2f3_cocycle(2);
  std::vector<Cochain> fs = enumerate_reg_plus(ctx, 1);
  Cochain f = unit_cochain(ctx, 1);
  bool found_nontrivial = false;
  for (const Cochain& c : fs)
    if (c.map != ctx.u(1)) {
      f = c;
      found_nontrivial = true;
    }
  REQUIRE(found_nontrivial);
  Cochain beta = convolution(ctx, alpha, coboundary(ctx, f));
  CrossedProductData cpa = build_crossed_product(ctx, alpha);
  CrossedProductData cpb = build_crossed_product(ctx, beta);
  Gauge g = gamma_of(ctx, f);
  REQUIRE(gauge_links(ctx, f, alpha, beta));
  Mor omega = build_isomorphism(cpa, cpb, g);
  // Unital algebra isomorphism; the law battery ran inside.
  CHECK(compose(omega, cpa.unit_small) == cpb.unit_small);
}

TEST_CASE("a non-normalized gauge candidate breaks preunit preservation") {
  const ModuleAlgebra& ctx = z2f3();
  Cochain u2 = unit_cochain(ctx, 2);
  CrossedProductData cp = build_crossed_product(ctx, u2);
  // f(e) = 2 is regular but not normalized; assemble the gauge by hand.
  Matrix m(1, 2, ctx.field());
  m.set(0, 0, ctx.field().from_long(2));
  m.set(0, 1, ctx.field().one());
  Cochain bad = make_cochain(ctx, 1, Mor(2, 1, std::move(m)));
  REQUIRE(bad.regular());
  REQUIRE_FALSE(bad.normalized);
  Gauge g{bad, gamma_formula(ctx, bad.map), gamma_formula(ctx, bad.inverse())};
  try {
    build_isomorphism(cp, cp, g);
    FAIL("expected ConditionFailed");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::condition_failed);
    CHECK((e.label() == "gamma-preunit" || e.label() == "f-eta"));
  }
}

TEST_CASE("linking gauges satisfy the exchange equation battery") {
  const ModuleAlgebra& ctx = z2f3();
  const WeakHopf& h = ctx.H();
  const FieldSpec& fl = ctx.field();
  const Mor idA = Mor::identity(ctx.A().dim, fl);
  const Mor idH = h.id();
  const Mor muA = ctx.A().mu;
  const Mor psi = psi_map(ctx);

  Cochain alpha = z2f3_cocycle(2);
  for (const Cochain& f : enumerate_reg_plus(ctx, 1)) {
    Cochain beta = convolution(ctx, alpha, coboundary(ctx, f));
    REQUIRE(gauge_links(ctx, f, alpha, beta));
    Gauge g = gamma_of(ctx, f);
    Mor sa = sigma_lift(ctx, alpha), sb = sigma_lift(ctx, beta);
    Mor fd = compose(tensor(f.map, idH), h.delta());
    Mor fid = compose(tensor(f.inverse(), idH), h.delta());

    // Forward exchange laws for Gamma_f.
    CHECK(compose(g.gamma, psi) ==
          compose(tensor(muA, idH), tensor(f.map, psi), tensor(h.delta(), idA)));
    CHECK(compose(g.gamma, sa) ==
          compose(tensor(muA, idH), tensor(muA, sb), tensor(idA, psi, idH),
                  tensor(fd, fd)));
    CHECK(compose(muA, tensor(idA, f.map), sa) ==
          convolve_maps(ctx, 2, alpha.map, coface(ctx, 1, f).map));

    // Inverse-side laws.
    CHECK(compose(muA, tensor(idA, f.inverse()), psi) ==
          compose(muA, tensor(f.inverse(), ctx.phi()), tensor(h.delta(), idA)));
    CHECK(compose(g.gamma_inv, psi) ==
          compose(tensor(muA, idH), tensor(f.inverse(), psi), tensor(h.delta(), idA)));
    CHECK(compose(g.gamma_inv, sb) ==
          compose(tensor(muA, idH), tensor(muA, sa), tensor(idA, psi, idH),
                  tensor(fid, fid)));
    Mor conj = compose(muA,
                       tensor(compose(ctx.phi(), tensor(idH, f.inverse())), f.inverse()),
                       tensor(idH, swap(h.dim(), h.dim(), fl)), tensor(h.delta(), idH));
    CHECK(compose(muA, tensor(idA, f.inverse()), sb) ==
          convolve_maps(ctx, 2, conj, alpha.map));
    Mor d0 = coface(ctx, 0, f.inverted()).map;
    Mor d1 = coface(ctx, 1, f.inverted()).map;
    Mor d2 = coface(ctx, 2, f.inverted()).map;
    CHECK(convolve_maps(ctx, 2, beta.map, d1) ==
          convolve_maps(ctx, 2, convolve_maps(ctx, 2, d0, d2), alpha.map));
  }
}

TEST_CASE("equivalence is transitive through convolution of gauges") {
  const ModuleAlgebra& ctx = z2f3();
  Cochain alpha = z2f3_cocycle(2);
  std::vector<Cochain> fs = enumerate_reg_plus(ctx, 1);
  for (const Cochain& f : fs)
    for (const Cochain& g : fs) {
      Cochain beta = convolution(ctx, alpha, coboundary(ctx, f));
      Cochain gamma_c = convolution(ctx, beta, coboundary(ctx, g));
      REQUIRE(gauge_links(ctx, f, alpha, beta));
      REQUIRE(gauge_links(ctx, g, beta, gamma_c));
      CHECK(gauge_links(ctx, convolution(ctx, f, g), alpha, gamma_c));
    }
}

TEST_CASE("classification of the F3 group algebra") {
  ClassificationReport r = classify(z2f3());
  CHECK(r.cocycle_count == 2);
  CHECK(r.class_count == 2);
  CHECK(r.h2_order == 2);
  CHECK(r.bijection_ok);
}

TEST_CASE("classification of the F2 group algebra") {
  ModuleAlgebra ctx = trivial_action_ctx(z2_groupoid(), FieldSpec::Fp(2));
  ClassificationReport r = classify(ctx);
  CHECK(r.cocycle_count == 1);
  CHECK(r.class_count == 1);
  CHECK(r.h2_order == 1);
  CHECK(r.bijection_ok);
}

TEST_CASE("classification of the discrete translation fixture") {
  ModuleAlgebra ctx = translation_ctx(discrete2_groupoid(), FieldSpec::Fp(3));
  ClassificationReport r = classify(ctx);
  // Frozen from the first enumeration run.
  CHECK(r.cocycle_count == 1);
  CHECK(r.class_count == 1);
  CHECK(r.h2_order == 1);
  CHECK(r.bijection_ok);
}

TEST_CASE("classification preconditions") {
  CHECK_THROWS_AS(classify(ut2_ctx()), Error);
}
