#include "wha/equivalence.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace wha {

namespace {

Mor gamma_for(const ModuleAlgebra& ctx, const Mor& f) {
  const Mor idA = Mor::identity(ctx.A().dim, ctx.field());
  return compose(tensor(compose(ctx.A().mu, tensor(idA, f)), ctx.H().id()),
                 tensor(idA, ctx.H().delta()));
}

void require_gauge_input(const Cochain& f) {
  if (f.degree != 1) throw Error(ErrorKind::bad_degree, "gauges come from degree-1 cochains");
  if (!f.regular()) throw Error(ErrorKind::not_regular, "gauge cochain has no inverse");
  if (!f.normalized)
    throw Error(ErrorKind::not_normalized, "gauge cochain is not normalized");
}

void require_checked_cocycle(const ModuleAlgebra& ctx, const Cochain& sigma,
                             const char* which) {
  if (!sigma.regular())
    throw Error(ErrorKind::not_regular, std::string(which) + " has no relative inverse");
  if (!normal_check(ctx, sigma))
    throw Error(ErrorKind::condition_failed, std::string(which) + " is not normal", "normal");
  if (!twisted_check(ctx, sigma).sigma_level)
    throw Error(ErrorKind::condition_failed, std::string(which) + " is not twisted",
                "twisted");
  if (!cocycle_check(ctx, sigma).two_cocycle)
    throw Error(ErrorKind::condition_failed, std::string(which) + " is not a 2-cocycle",
                "cocycle");
}

} // namespace

Gauge gamma_of(const ModuleAlgebra& ctx, const Cochain& f) {
  require_gauge_input(f);
  Gauge g{f, gamma_for(ctx, f.map), gamma_for(ctx, f.inverse())};

  const Mor nabla = nabla_map(ctx);
  if (compose(g.gamma, g.gamma_inv) != nabla || compose(g.gamma_inv, g.gamma) != nabla)
    throw Error(ErrorKind::internal, "gauge pair does not invert to nabla");
  if (compose(g.gamma, g.gamma_inv, g.gamma) != g.gamma ||
      compose(g.gamma_inv, g.gamma, g.gamma_inv) != g.gamma_inv)
    throw Error(ErrorKind::internal, "gauge pair fails the sandwich laws");

  // Round-trips of the correspondence between gauges and cochains.
  const Mor idA = Mor::identity(ctx.A().dim, ctx.field());
  Mor recovered = compose(tensor(idA, ctx.H().eps()), g.gamma, tensor(ctx.A().eta, ctx.H().id()));
  if (recovered != f.map)
    throw Error(ErrorKind::internal, "f is not recovered from its gauge");
  if (gamma_for(ctx, recovered) != g.gamma)
    throw Error(ErrorKind::internal, "gauge is not recovered from its cochain");
  return g;
}

bool gauge_links(const ModuleAlgebra& ctx, const Cochain& f, const Cochain& alpha,
                 const Cochain& beta) {
  require_gauge_input(f);
  require_checked_cocycle(ctx, alpha, "alpha");
  require_checked_cocycle(ctx, beta, "beta");

  const Mor idA = Mor::identity(ctx.A().dim, ctx.field());
  const Mor psi = psi_map(ctx);
  bool psi_crossed = compose(ctx.A().mu, tensor(idA, f.map), psi) ==
                     compose(ctx.A().mu, tensor(f.map, ctx.phi()),
                             tensor(ctx.H().delta(), idA));
  if (ctx.A().commutative && !psi_crossed)
    throw Error(ErrorKind::internal, "action exchange law failed over a commutative A");
  if (!psi_crossed) return false;

  const Mor d0 = coface(ctx, 0, f).map;
  const Mor d1 = coface(ctx, 1, f).map;
  const Mor d2 = coface(ctx, 2, f).map;
  Mor lhs = convolve_maps(ctx, 2, alpha.map, d1);
  Mor rhs = convolve_maps(ctx, 2, convolve_maps(ctx, 2, d0, d2), beta.map);
  return lhs == rhs;
}

std::optional<Gauge> find_equivalence(const ModuleAlgebra& ctx, const Cochain& alpha,
                                      const Cochain& beta, std::uint64_t budget) {
  std::optional<Gauge> found;
  std::vector<Cochain> candidates = enumerate_reg_plus(ctx, 1, budget);
  for (const Cochain& f : candidates) {
    if (gauge_links(ctx, f, alpha, beta)) {
      found = gamma_of(ctx, f);
      break;
    }
  }

  if (ctx.A().commutative) {
    // Independent route: alpha ^ beta^-1 must be a normalized coboundary.
    Mor target = convolve_maps(ctx, 2, alpha.map, beta.inverse());
    bool in_image = false;
    for (const Cochain& h : candidates)
      if (coboundary(ctx, h).map == target) {
        in_image = true;
        break;
      }
    if (in_image != found.has_value())
      throw Error(ErrorKind::internal, "gauge search and coboundary test disagree");
  }
  return found;
}

Mor build_isomorphism(const CrossedProductData& cp_alpha, const CrossedProductData& cp_beta,
                      const Gauge& g) {
  const ModuleAlgebra& ctx = cp_alpha.ctx;
  auto fail = [](const std::string& label) {
    throw Error(ErrorKind::condition_failed, "isomorphism law '" + label + "' fails", label);
  };

  if (cp_alpha.nabla != cp_beta.nabla || cp_alpha.psi != cp_beta.psi)
    fail("shared-context");
  const Mor& nabla = cp_alpha.nabla;
  const Mor& gamma = g.gamma;

  if (compose(gamma, nabla) != gamma || compose(nabla, gamma) != gamma)
    fail("gamma-nabla");
  if (compose(gamma, cp_alpha.nu) != cp_beta.nu) fail("gamma-preunit");
  if (compose(g.f.map, ctx.H().eta()) != ctx.A().eta) fail("f-eta");
  if (compose(gamma, cp_alpha.mu_big) !=
      compose(cp_beta.mu_big, tensor(gamma, gamma)))
    fail("gamma-multiplicative");

  const Mor omega = compose(cp_beta.p_AH, gamma, cp_alpha.i_AH);
  const Mor omega_inv = compose(cp_alpha.p_AH, g.gamma_inv, cp_beta.i_AH);
  const Mor idSa = Mor::identity(cp_alpha.dim_small, ctx.field());
  const Mor idSb = Mor::identity(cp_beta.dim_small, ctx.field());
  if (compose(omega_inv, omega) != idSa || compose(omega, omega_inv) != idSb)
    fail("omega-invertible");
  if (compose(omega, cp_alpha.unit_small) != cp_beta.unit_small) fail("omega-unital");
  if (compose(omega, cp_alpha.mu_small) !=
      compose(cp_beta.mu_small, tensor(omega, omega)))
    fail("omega-multiplicative");

  const Mor idA = Mor::identity(ctx.A().dim, ctx.field());
  const Mor act_a = compose(cp_alpha.p_AH, tensor(ctx.A().mu, ctx.H().id()),
                            tensor(idA, cp_alpha.i_AH));
  const Mor act_b = compose(cp_beta.p_AH, tensor(ctx.A().mu, ctx.H().id()),
                            tensor(idA, cp_beta.i_AH));
  if (compose(omega, act_a) != compose(act_b, tensor(idA, omega))) fail("omega-A-linear");

  if (compose(cp_beta.rho, omega) != compose(tensor(omega, ctx.H().id()), cp_alpha.rho))
    fail("omega-H-colinear");
  return omega;
}

ClassificationReport classify(const ModuleAlgebra& ctx, std::uint64_t budget) {
  if (!ctx.H().cocommutative())
    throw Error(ErrorKind::not_cocommutative, "classification needs cocommutative H");
  if (!ctx.A().commutative)
    throw Error(ErrorKind::not_commutative, "classification needs commutative A");

  ClassificationReport report;
  for (Cochain& c : enumerate_reg_plus(ctx, 2, budget)) {
    if (!twisted_check(ctx, c).sigma_level)
      throw Error(ErrorKind::internal, "twisted condition failed over a commutative A");
    if (cocycle_check(ctx, c).two_cocycle) report.cocycles.push_back(std::move(c));
  }
  report.cocycle_count = static_cast<long>(report.cocycles.size());

  // Gauge-equivalence partition by pairwise exhaustive search.
  const int k = static_cast<int>(report.cocycles.size());
  std::vector<int> parent(k);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      if (find(i) == find(j)) continue;
      if (find_equivalence(ctx, report.cocycles[i], report.cocycles[j], budget))
        parent[find(j)] = find(i);
    }
  std::map<int, std::vector<int>> blocks;
  for (int i = 0; i < k; ++i) blocks[find(i)].push_back(i);
  for (auto& [root, members] : blocks) report.classes.push_back(members);
  report.class_count = static_cast<long>(report.classes.size());

  // Independent quotient through the cohomology group.
  H2Result h2 = cohomology_h2(ctx, budget);
  report.h2_order = h2.order;

  bool ok = report.class_count == h2.order &&
            h2.kernel.size() == report.cocycles.size();
  if (ok) {
    // The kernel enumeration is sorted the same way; identify by key and
    // require the two partitions to coincide block-by-block.
    for (size_t i = 0; i < h2.kernel.size() && ok; ++i)
      if (h2.kernel[i].key() != report.cocycles[i].key()) ok = false;
    for (size_t i = 0; i < h2.kernel.size() && ok; ++i)
      for (size_t j = i + 1; j < h2.kernel.size() && ok; ++j) {
        bool gauge_same =
            find(static_cast<int>(i)) == find(static_cast<int>(j));
        bool h2_same = h2.class_of[i] == h2.class_of[j];
        if (gauge_same != h2_same) ok = false;
      }
  }
  report.bijection_ok = ok;
  return report;
}

} // namespace wha
