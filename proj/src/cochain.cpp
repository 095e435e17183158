#include "wha/cochain.hpp"

#include <functional>

namespace wha {

const Mor& Cochain::inverse() const {
  if (!inv) throw Error(ErrorKind::not_regular, "cochain has no relative inverse");
  return *inv;
}

Cochain Cochain::inverted() const {
  if (!inv) throw Error(ErrorKind::not_regular, "cochain has no relative inverse");
  return Cochain{degree, *inv, map, normalized};
}

Mor convolve_maps(const ModuleAlgebra& ctx, int degree, const Mor& f, const Mor& g) {
  return compose(ctx.A().mu, tensor(f, g), ctx.cochain_coproduct(degree));
}

Cochain convolution(const ModuleAlgebra& ctx, const Cochain& f, const Cochain& g) {
  if (f.degree != g.degree)
    throw Error(ErrorKind::degree_mismatch,
                std::to_string(f.degree) + " vs " + std::to_string(g.degree));
  Cochain out;
  out.degree = f.degree;
  out.map = convolve_maps(ctx, f.degree, f.map, g.map);
  if (f.inv && g.inv)
    out.inv = convolve_maps(ctx, f.degree, *g.inv, *f.inv);
  out.normalized = is_normalized(ctx, out);
  return out;
}

namespace {

// Matrix of a linear operator on maps (cochain_dom -> dim A), acting on
// row-major entry vectors.
Matrix operator_on_maps(const ModuleAlgebra& ctx, int degree,
                        const std::function<Mor(const Mor&)>& t) {
  const FieldSpec& f = ctx.field();
  const int m = ctx.A().dim;
  const int n = ctx.cochain_dom(degree);
  Matrix out(m * n, m * n, f);
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < n; ++c) {
      Matrix basis(m, n, f);
      basis.set(r, c, f.one());
      Mor image = t(Mor(n, m, std::move(basis)));
      for (int rr = 0; rr < m; ++rr)
        for (int cc = 0; cc < n; ++cc)
          out.set(rr * n + cc, r * n + c, image.mat().at(rr, cc));
    }
  return out;
}

Matrix vec_of(const Mor& f) {
  const Matrix& m = f.mat();
  Matrix v(m.rows() * m.cols(), 1, m.field());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) v.set(r * m.cols() + c, 0, m.at(r, c));
  return v;
}

Mor mor_of_vec(const Matrix& v, int dom, int cod) {
  Matrix m(cod, dom, v.field());
  for (int r = 0; r < cod; ++r)
    for (int c = 0; c < dom; ++c) m.set(r, c, v.at(r * dom + c, 0));
  return Mor(dom, cod, std::move(m));
}

// Over a group-like basis convolution is pointwise in A and the inverse
// problem splits into one small solve per basis vector.
std::optional<Mor> reg_inverse_group_like(const ModuleAlgebra& ctx, int degree,
                                          const Mor& f) {
  const FieldSpec& fld = ctx.field();
  const int m = ctx.A().dim;
  const int n = ctx.cochain_dom(degree);
  const Mor u = ctx.u(degree);
  const Matrix& mu = ctx.A().mu.mat();

  auto column = [&](const Mor& g, int v) {
    Matrix col(m, 1, fld);
    for (int r = 0; r < m; ++r) col.set(r, 0, g.mat().at(r, v));
    return col;
  };
  auto a_mul = [&](const Matrix& x, const Matrix& y) {
    Matrix k = kronecker(x, y); // (m*m) x 1
    return mul(mu, k);
  };

  Matrix result(m, n, fld);
  for (int v = 0; v < n; ++v) {
    Matrix fv = column(f, v), uv = column(u, v);
    if (a_mul(uv, a_mul(fv, uv)) != fv) return std::nullopt;

    Matrix sys(3 * m, m, fld), rhs(3 * m, 1, fld);
    for (int s = 0; s < m; ++s) {
      Matrix basis(m, 1, fld);
      basis.set(s, 0, fld.one());
      Matrix lf = a_mul(fv, basis);
      Matrix rf = a_mul(basis, fv);
      Matrix uu = a_mul(uv, a_mul(basis, uv));
      for (int r = 0; r < m; ++r) {
        sys.set(r, s, lf.at(r, 0));
        sys.set(m + r, s, rf.at(r, 0));
        Scalar d = uu.at(r, 0);
        if (r == s) d = fld.sub(d, fld.one());
        sys.set(2 * m + r, s, d);
      }
    }
    for (int r = 0; r < m; ++r) {
      rhs.set(r, 0, uv.at(r, 0));
      rhs.set(m + r, 0, uv.at(r, 0));
    }
    SolutionSet sol = solve_affine(sys, rhs);
    if (!sol.consistent()) return std::nullopt;
    if (!sol.nullspace_basis.empty())
      throw Error(ErrorKind::internal,
                  "relative inverse is not unique (multiplicity " +
                      std::to_string(sol.nullspace_basis.size()) + " observed)");
    Matrix xv = *sol.particular;
    bool ok = a_mul(fv, xv) == uv && a_mul(xv, fv) == uv &&
              a_mul(a_mul(fv, xv), fv) == fv && a_mul(a_mul(xv, fv), xv) == xv;
    if (!ok) return std::nullopt;
    for (int r = 0; r < m; ++r) result.set(r, v, xv.at(r, 0));
  }
  return Mor(n, m, std::move(result));
}

} // namespace

std::optional<Mor> reg_inverse(const ModuleAlgebra& ctx, int degree, const Mor& f) {
  const int m = ctx.A().dim;
  const int n = ctx.cochain_dom(degree);
  if (f.dom() != n || f.cod() != m)
    throw Error(ErrorKind::dimension_mismatch, "cochain has the wrong shape for its degree");

  if (ctx.coproduct_is_group_like(degree)) return reg_inverse_group_like(ctx, degree, f);

  const Mor u = ctx.u(degree);
  auto conv = [&](const Mor& a, const Mor& b) { return convolve_maps(ctx, degree, a, b); };

  // u ^ f ^ u = f is necessary: it follows from (c1) and (c2).
  if (conv(u, conv(f, u)) != f) return std::nullopt;

  // Solve { f^x = u, x^f = u, u^x^u = x }. Any solution satisfies
  // (c1)-(c3), and two solutions are convolution-linked, hence equal.
  const FieldSpec& fld = ctx.field();
  Matrix lf = operator_on_maps(ctx, degree, [&](const Mor& x) { return conv(f, x); });
  Matrix rf = operator_on_maps(ctx, degree, [&](const Mor& x) { return conv(x, f); });
  Matrix uu = operator_on_maps(ctx, degree, [&](const Mor& x) { return conv(u, conv(x, u)); });

  const int dim = m * n;
  Matrix sys(3 * dim, dim, fld), rhs(3 * dim, 1, fld);
  Matrix uvec = vec_of(Mor(n, m, u.mat()));
  const Matrix id = Matrix::identity(dim, fld);
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) {
      sys.set(r, c, lf.at(r, c));
      sys.set(dim + r, c, rf.at(r, c));
      sys.set(2 * dim + r, c, fld.sub(uu.at(r, c), id.at(r, c)));
    }
    rhs.set(r, 0, uvec.at(r, 0));
    rhs.set(dim + r, 0, uvec.at(r, 0));
  }

  SolutionSet sol = solve_affine(sys, rhs);
  if (!sol.consistent()) return std::nullopt;
  if (!sol.nullspace_basis.empty())
    throw Error(ErrorKind::internal,
                "relative inverse is not unique (multiplicity " +
                    std::to_string(sol.nullspace_basis.size()) + " observed)");

  Mor x = mor_of_vec(*sol.particular, n, m);
  bool ok = conv(f, x) == u && conv(x, f) == u && conv(conv(f, x), f) == f &&
            conv(conv(x, f), x) == x;
  if (!ok) return std::nullopt;
  return x;
}

Cochain make_cochain(const ModuleAlgebra& ctx, int degree, Mor map, bool want_inverse) {
  const int m = ctx.A().dim;
  const int n = ctx.cochain_dom(degree);
  if (map.dom() != n || map.cod() != m)
    throw Error(ErrorKind::dimension_mismatch, "cochain has the wrong shape for its degree");
  Cochain c;
  c.degree = degree;
  c.map = std::move(map);
  if (want_inverse) c.inv = reg_inverse(ctx, degree, c.map);
  c.normalized = is_normalized(ctx, c);
  return c;
}

Cochain unit_cochain(const ModuleAlgebra& ctx, int degree) {
  Cochain c;
  c.degree = degree;
  c.map = ctx.u(degree);
  c.inv = c.map;
  c.normalized = is_normalized(ctx, c);
  return c;
}

bool is_normalized(const ModuleAlgebra& ctx, const Cochain& f) {
  const WeakHopf& h = ctx.H();

  if (f.degree == 0) {
    return compose(f.map, ctx.hl().p_L, h.eta()) == ctx.A().eta;
  }

  bool primary = true;
  if (f.degree == 1) {
    primary = compose(f.map, ctx.hl().i_L) == ctx.u(0);
  } else {
    const Mor u_prev = ctx.u(f.degree - 1);
    for (int i = 0; i < f.degree && primary; ++i) {
      Mor insert = tensor(h.id(i), h.eta(), h.id(f.degree - 1 - i));
      if (compose(f.map, insert) != u_prev) primary = false;
    }
  }

  if (f.regular()) {
    // Unit/projection characterizations valid on regular cochains; a
    // disagreement would falsify the construction.
    if (f.degree == 1) {
      bool via_eta = compose(f.map, h.eta()) == ctx.A().eta;
      if (via_eta != primary)
        throw Error(ErrorKind::internal, "degree-1 normalization characterizations disagree");
    } else if (f.degree == 2) {
      const Mor u1 = ctx.u(1);
      bool via_pi =
          compose(f.map, tensor(h.piL(), h.id()), h.delta()) == u1 &&
          compose(f.map, tensor(h.id(), h.piR()), h.delta()) == u1;
      if (via_pi != primary)
        throw Error(ErrorKind::internal, "degree-2 normalization characterizations disagree");
    }
  }
  return primary;
}

} // namespace wha
