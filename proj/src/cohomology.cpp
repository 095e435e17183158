#include "wha/cohomology.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace wha {

namespace {

void require_strict(const ModuleAlgebra& ctx) {
  if (!ctx.strict())
    throw Error(ErrorKind::not_strict_module_algebra,
                "the cosimplicial structure needs a (strict) left H-module algebra");
}

// Applies a raw-map transformation to both the map and its inverse.
Cochain lift_through(const ModuleAlgebra& ctx, int out_degree, const Cochain& f,
                     const std::function<Mor(const Mor&)>& t) {
  Cochain out;
  out.degree = out_degree;
  out.map = t(f.map);
  if (f.inv) out.inv = t(*f.inv);
  out.normalized = is_normalized(ctx, out);
  return out;
}

} // namespace

Cochain coface(const ModuleAlgebra& ctx, int i, const Cochain& f) {
  require_strict(ctx);
  const int k = f.degree;
  if (i < 0 || i > k + 1)
    throw Error(ErrorKind::bad_index,
                "coface index " + std::to_string(i) + " out of range for degree " +
                    std::to_string(k));
  const WeakHopf& h = ctx.H();
  const Mor idH = h.id();

  if (k == 0) {
    if (i == 0)
      return lift_through(ctx, 1, f, [&](const Mor& g) {
        return compose(ctx.phi(), tensor(idH, compose(g, ctx.hl().p_L, h.piR())), h.delta());
      });
    return lift_through(ctx, 1, f,
                        [&](const Mor& g) { return compose(g, ctx.hl().p_L); });
  }

  if (i == 0)
    return lift_through(ctx, k + 1, f,
                        [&](const Mor& s) { return compose(ctx.phi(), tensor(idH, s)); });
  if (i <= k) {
    Mor insert = tensor(h.id(i - 1), h.mu(), h.id(k - i));
    return lift_through(ctx, k + 1, f, [&](const Mor& s) { return compose(s, insert); });
  }
  Mor last = tensor(h.id(k - 1), compose(h.mu(), tensor(idH, h.piL())));
  return lift_through(ctx, k + 1, f, [&](const Mor& s) { return compose(s, last); });
}

Cochain codegeneracy(const ModuleAlgebra& ctx, int i, const Cochain& f) {
  const int k = f.degree;
  if (k < 1) throw Error(ErrorKind::bad_degree, "codegeneracies start at degree 1");
  if (i < 0 || i > k - 1)
    throw Error(ErrorKind::bad_index,
                "codegeneracy index " + std::to_string(i) + " out of range for degree " +
                    std::to_string(k));
  const WeakHopf& h = ctx.H();
  if (k == 1)
    return lift_through(ctx, 0, f, [&](const Mor& s) { return compose(s, ctx.hl().i_L); });
  Mor insert = tensor(h.id(i), h.eta(), h.id(k - 1 - i));
  return lift_through(ctx, k - 1, f, [&](const Mor& s) { return compose(s, insert); });
}

Cochain coboundary(const ModuleAlgebra& ctx, const Cochain& f) {
  if (!f.regular())
    throw Error(ErrorKind::not_regular, "coboundary needs a relative inverse");
  const int k = f.degree;
  Cochain acc = coface(ctx, 0, f);
  for (int i = 1; i <= k + 1; ++i) {
    Cochain term = coface(ctx, i, i % 2 == 0 ? f : f.inverted());
    acc = convolution(ctx, acc, term);
  }
  if (!acc.inv)
    acc.inv = reg_inverse(ctx, acc.degree, acc.map);
  return acc;
}

namespace {

mpz_class candidate_space(const ModuleAlgebra& ctx, int degree) {
  mpz_class total;
  mpz_ui_pow_ui(total.get_mpz_t(),
                static_cast<unsigned long>(ctx.field().p()),
                static_cast<unsigned long>(ctx.A().dim) *
                    static_cast<unsigned long>(ctx.cochain_dom(degree)));
  return total;
}

void require_enumerable(const ModuleAlgebra& ctx, int degree, std::uint64_t budget) {
  if (!ctx.field().is_prime_field())
    throw Error(ErrorKind::validation, "enumeration needs a prime field");
  mpz_class total = candidate_space(ctx, degree);
  if (total > mpz_class(static_cast<unsigned long>(budget)))
    throw Error(ErrorKind::budget_exceeded,
                total.get_str() + " candidate maps exceed budget " + std::to_string(budget));
}

// Matrix of f -> f . precomp acting on row-major entry vectors of maps
// (N -> m); the image has shape (N2 -> m).
Matrix precompose_operator(const FieldSpec& fld, int m, int n, const Mor& precomp) {
  const int n2 = precomp.dom();
  Matrix out(m * n2, m * n, fld);
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < n; ++c) {
      Matrix basis(m, n, fld);
      basis.set(r, c, fld.one());
      Mor image = compose(Mor(n, m, std::move(basis)), precomp);
      for (int rr = 0; rr < m; ++rr)
        for (int cc = 0; cc < n2; ++cc)
          out.set(rr * n2 + cc, r * n + c, image.mat().at(rr, cc));
    }
  return out;
}

std::vector<std::pair<Mor, Mor>> normalization_constraints(const ModuleAlgebra& ctx,
                                                           int degree) {
  // Pairs (precomposite, target): f is normalized iff f . pre = target for
  // each pair. All constraints are linear in f.
  const WeakHopf& h = ctx.H();
  std::vector<std::pair<Mor, Mor>> out;
  if (degree == 0) {
    out.emplace_back(compose(ctx.hl().p_L, h.eta()), ctx.A().eta);
  } else if (degree == 1) {
    out.emplace_back(ctx.hl().i_L, ctx.u(0));
  } else {
    for (int i = 0; i < degree; ++i)
      out.emplace_back(tensor(h.id(i), h.eta(), h.id(degree - 1 - i)), ctx.u(degree - 1));
  }
  return out;
}

std::vector<Cochain> enumerate_filtered(const ModuleAlgebra& ctx, int degree,
                                        std::uint64_t budget, bool normalized_only) {
  require_enumerable(ctx, degree, budget);
  const FieldSpec& fld = ctx.field();
  const int m = ctx.A().dim;
  const int n = ctx.cochain_dom(degree);
  const int dim = m * n;
  const long p = fld.p();

  // Free coordinates of the candidate space: everything, or the affine
  // solution set of the normalization constraints.
  Matrix particular(dim, 1, fld);
  std::vector<Matrix> basis;
  if (normalized_only) {
    std::vector<Matrix> ops;
    std::vector<Mor> targets;
    int rows = 0;
    for (const auto& [pre, target] : normalization_constraints(ctx, degree)) {
      ops.push_back(precompose_operator(fld, m, n, pre));
      targets.push_back(target);
      rows += ops.back().rows();
    }
    Matrix sys(rows, dim, fld), rhs(rows, 1, fld);
    int at = 0;
    for (size_t k = 0; k < ops.size(); ++k) {
      const Matrix& op = ops[k];
      const Matrix& t = targets[k].mat();
      for (int r = 0; r < op.rows(); ++r) {
        for (int c = 0; c < dim; ++c) sys.set(at + r, c, op.at(r, c));
        rhs.set(at + r, 0, t.at(r / t.cols(), r % t.cols()));
      }
      at += op.rows();
    }
    SolutionSet sol = solve_affine(sys, rhs);
    if (!sol.consistent()) return {};
    particular = *sol.particular;
    basis = std::move(sol.nullspace_basis);
  } else {
    for (int i = 0; i < dim; ++i) {
      Matrix v(dim, 1, fld);
      v.set(i, 0, fld.one());
      basis.push_back(std::move(v));
    }
  }

  std::vector<Cochain> found;
  std::vector<long> coeff(basis.size(), 0);
  while (true) {
    Matrix vec = particular;
    for (size_t i = 0; i < basis.size(); ++i) {
      if (coeff[i] == 0) continue;
      Scalar ci = fld.from_long(coeff[i]);
      for (int r = 0; r < dim; ++r)
        vec.set(r, 0, fld.add(vec.at(r, 0), fld.mul(ci, basis[i].at(r, 0))));
    }
    Matrix mat(m, n, fld);
    for (int r = 0; r < m; ++r)
      for (int c = 0; c < n; ++c) mat.set(r, c, vec.at(r * n + c, 0));
    Mor cand(n, m, std::move(mat));
    if (auto inv = reg_inverse(ctx, degree, cand)) {
      Cochain c;
      c.degree = degree;
      c.map = std::move(cand);
      c.inv = std::move(inv);
      c.normalized = is_normalized(ctx, c);
      if (normalized_only && !c.normalized)
        throw Error(ErrorKind::internal, "normalization constraints missed a codegeneracy");
      if (!normalized_only || c.normalized) found.push_back(std::move(c));
    }
    size_t d = 0;
    while (d < coeff.size() && ++coeff[d] == p) coeff[d++] = 0;
    if (d == coeff.size()) break;
  }
  std::sort(found.begin(), found.end(),
            [](const Cochain& a, const Cochain& b) { return a.key() < b.key(); });
  return found;
}

} // namespace

std::vector<Cochain> enumerate_reg(const ModuleAlgebra& ctx, int degree,
                                   std::uint64_t budget) {
  return enumerate_filtered(ctx, degree, budget, false);
}

std::vector<Cochain> enumerate_reg_plus(const ModuleAlgebra& ctx, int degree,
                                        std::uint64_t budget) {
  return enumerate_filtered(ctx, degree, budget, true);
}

H2Result cohomology_group(const ModuleAlgebra& ctx, int k, std::uint64_t budget) {
  if (k < 1 || k > 2) throw Error(ErrorKind::bad_degree, "only degrees 1 and 2 are computed");
  if (!ctx.H().cocommutative())
    throw Error(ErrorKind::not_cocommutative, "Sweedler cohomology needs cocommutative H");
  if (!ctx.A().commutative)
    throw Error(ErrorKind::not_commutative, "Sweedler cohomology needs commutative A");
  require_strict(ctx);

  const Mor u_top = ctx.u(k + 1);
  std::vector<Cochain> reg_plus = enumerate_reg_plus(ctx, k, budget);

  H2Result out;
  for (auto& c : reg_plus)
    if (coboundary(ctx, c).map == u_top) out.kernel.push_back(c);
  out.cocycle_count = static_cast<long>(out.kernel.size());

  std::map<std::string, Mor> image;
  for (const Cochain& h : enumerate_reg_plus(ctx, k - 1, budget)) {
    Cochain b = coboundary(ctx, h);
    if (!b.normalized)
      throw Error(ErrorKind::internal, "coboundary left the normalized subcomplex");
    image.emplace(b.key(), b.map);
  }
  out.coboundary_count = static_cast<long>(image.size());

  // Canonical form: the lexicographically smallest serialized translate of
  // the coset through Im(D^{k-1}+).
  std::map<std::string, int> rep_index;
  for (const Cochain& c : out.kernel) {
    std::string best;
    Mor best_map = c.map;
    for (const auto& [bk, bmap] : image) {
      Mor t = convolve_maps(ctx, k, c.map, bmap);
      std::string tk = t.key();
      if (best.empty() || tk < best) {
        best = tk;
        best_map = t;
      }
    }
    auto it = rep_index.find(best);
    if (it == rep_index.end()) {
      rep_index.emplace(best, static_cast<int>(out.class_reps.size()));
      out.class_of.push_back(static_cast<int>(out.class_reps.size()));
      out.class_reps.push_back(make_cochain(ctx, k, best_map));
    } else {
      out.class_of.push_back(it->second);
    }
  }
  out.order = static_cast<long>(out.class_reps.size());

  if (out.cocycle_count != out.order * out.coboundary_count)
    throw Error(ErrorKind::internal, "coset sizes are not uniform");
  return out;
}

H2Result cohomology_h2(const ModuleAlgebra& ctx, std::uint64_t budget) {
  return cohomology_group(ctx, 2, budget);
}

} // namespace wha
