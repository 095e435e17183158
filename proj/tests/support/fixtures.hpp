#ifndef WHA_TEST_FIXTURES_HPP
#define WHA_TEST_FIXTURES_HPP

#include <memory>
#include <random>

#include "wha/cochain.hpp"
#include "wha/cohomology.hpp"

namespace wha::testing {

// --- groupoids -------------------------------------------------------------

inline Groupoid trivial_groupoid() {
  return Groupoid::make({"x"}, {{"id_x", "x", "x"}}, {{"id_x", "id_x"}});
}

inline Groupoid z2_groupoid() {
  Groupoid::ComposeTable t = {{"e", "e", "e"}, {"e", "g", "g"}, {"g", "e", "g"}, {"g", "g", "e"}};
  return Groupoid::make({"x"}, {{"e", "x", "x"}, {"g", "x", "x"}},
                        {{"e", "e"}, {"g", "g"}}, t);
}

inline Groupoid discrete2_groupoid() {
  return Groupoid::make({"x", "y"}, {{"id_x", "x", "x"}, {"id_y", "y", "y"}},
                        {{"id_x", "id_x"}, {"id_y", "id_y"}});
}

inline Groupoid indiscrete2_groupoid() {
  return Groupoid::make(
      {"x", "y"},
      {{"id_x", "x", "x"}, {"id_y", "y", "y"}, {"g", "x", "y"}, {"ginv", "y", "x"}},
      {{"id_x", "id_x"}, {"id_y", "id_y"}, {"g", "ginv"}, {"ginv", "g"}});
}

/// Disjoint union of two copies of Z/2 (a group bundle over two objects).
inline Groupoid z2_bundle_groupoid() {
  Groupoid::ComposeTable t;
  for (std::string o : {"x", "y"}) {
    std::string e = "e_" + o, g = "g_" + o;
    t.push_back({e, e, e});
    t.push_back({e, g, g});
    t.push_back({g, e, g});
    t.push_back({g, g, e});
  }
  return Groupoid::make({"x", "y"},
                        {{"e_x", "x", "x"}, {"g_x", "x", "x"}, {"e_y", "y", "y"},
                         {"g_y", "y", "y"}},
                        {{"e_x", "e_x"}, {"g_x", "g_x"}, {"e_y", "e_y"}, {"g_y", "g_y"}}, t);
}

// --- module algebras ---------------------------------------------------------

/// The one-dimensional algebra over `f` with the counit action of H.
inline ModuleAlgebra trivial_action_ctx(const Groupoid& g, const FieldSpec& f) {
  auto h = std::make_shared<const WeakHopf>(WeakHopf::groupoid_algebra(g, f));
  Algebra a = Algebra::make(Mor::identity(1, f), Mor::identity(1, f));
  Mor phi = h->eps(); // H (x) K = H -> K
  return ModuleAlgebra::make(h, a, phi);
}

/// Functions on the objects of g, with arrows acting by translation:
/// phi(s (x) e_x) = [src(s) = x] e_{tgt(s)}.
inline Algebra functions_on_objects(const Groupoid& g, const FieldSpec& f) {
  const int m = g.object_count();
  Matrix eta(m, 1, f), mu(m, m * m, f);
  for (int x = 0; x < m; ++x) {
    eta.set(x, 0, f.one());
    mu.set(x, x * m + x, f.one());
  }
  return Algebra::make(Mor(1, m, std::move(eta)), Mor(m * m, m, std::move(mu)));
}

inline Mor translation_phi(const Groupoid& g, const FieldSpec& f) {
  const int n = g.arrow_count(), m = g.object_count();
  Matrix phi(m, n * m, f);
  for (int s = 0; s < n; ++s)
    phi.set(g.tgt_object(s), s * m + g.src_object(s), f.one());
  return Mor(n * m, m, std::move(phi));
}

inline ModuleAlgebra translation_ctx(const Groupoid& g, const FieldSpec& f) {
  auto h = std::make_shared<const WeakHopf>(WeakHopf::groupoid_algebra(g, f));
  return ModuleAlgebra::make(h, functions_on_objects(g, f), translation_phi(g, f));
}

/// Source/target swapped; passes b1 and b2 but breaks b3/b4. Kept as a
/// negative control for the validator.
inline Mor flipped_translation_phi(const Groupoid& g, const FieldSpec& f) {
  const int n = g.arrow_count(), m = g.object_count();
  Matrix phi(m, n * m, f);
  for (int s = 0; s < n; ++s)
    phi.set(g.src_object(s), s * m + g.tgt_object(s), f.one());
  return Mor(n * m, m, std::move(phi));
}

/// Upper-triangular 2x2 matrices over F2 (basis E11, E12, E22) with Z/2
/// acting by conjugation with [[1,1],[0,1]]; the smallest noncommutative
/// fixture.
inline ModuleAlgebra ut2_ctx() {
  FieldSpec f = FieldSpec::Fp(2);
  auto h = std::make_shared<const WeakHopf>(WeakHopf::groupoid_algebra(z2_groupoid(), f));

  Matrix eta(3, 1, f), mu(3, 9, f);
  eta.set(0, 0, f.one());
  eta.set(2, 0, f.one());
  auto prod = [&](int a, int b, int c) { mu.set(c, a * 3 + b, f.one()); };
  prod(0, 0, 0); // E11 E11 = E11
  prod(0, 1, 1); // E11 E12 = E12
  prod(1, 2, 1); // E12 E22 = E12
  prod(2, 2, 2); // E22 E22 = E22
  Algebra a = Algebra::make(Mor(1, 3, std::move(eta)), Mor(9, 3, std::move(mu)));

  // e fixes everything; g: E11 -> E11+E12, E12 -> E12, E22 -> E12+E22.
  Matrix phi(3, 6, f);
  for (int c = 0; c < 3; ++c) phi.set(c, 0 * 3 + c, f.one());
  phi.set(0, 1 * 3 + 0, f.one());
  phi.set(1, 1 * 3 + 0, f.one());
  phi.set(1, 1 * 3 + 1, f.one());
  phi.set(1, 1 * 3 + 2, f.one());
  phi.set(2, 1 * 3 + 2, f.one());
  return ModuleAlgebra::make(h, a, Mor(6, 3, std::move(phi)));
}

// --- random generation -------------------------------------------------------

inline std::mt19937_64 fixed_rng(std::uint64_t seed = 0x5eed5eedULL) {
  return std::mt19937_64(seed);
}

inline Scalar random_scalar(const FieldSpec& f, std::mt19937_64& rng) {
  if (f.is_prime_field()) {
    std::uniform_int_distribution<long> d(0, f.p() - 1);
    return f.from_long(d(rng));
  }
  std::uniform_int_distribution<long> num(-3, 3);
  std::uniform_int_distribution<long> den(1, 3);
  return f.reduce(Scalar(num(rng)) / Scalar(den(rng)));
}

inline Mor random_mor(int dom, int cod, const FieldSpec& f, std::mt19937_64& rng) {
  Matrix m(cod, dom, f);
  for (int r = 0; r < cod; ++r)
    for (int c = 0; c < dom; ++c) m.set(r, c, random_scalar(f, rng));
  return Mor(dom, cod, std::move(m));
}

/// Uniform draw from the affine subspace { f : u ^ f ^ u = f }, rejected
/// until regular. The subspace cuts the candidate space down to where
/// regular cochains are dense enough for rejection to work at desk scale.
class RegularSampler {
public:
  RegularSampler(const ModuleAlgebra& ctx, int degree)
      : ctx_(ctx), degree_(degree) {
    const FieldSpec& fld = ctx.field();
    const int m = ctx.A().dim;
    const int n = ctx.cochain_dom(degree);
    const Mor u = ctx.u(degree);

    // Rows of (T - I) where T(f) = u ^ f ^ u.
    Matrix sys(m * n, m * n, fld);
    for (int r = 0; r < m; ++r)
      for (int c = 0; c < n; ++c) {
        Matrix basis(m, n, fld);
        basis.set(r, c, fld.one());
        Mor image = convolve_maps(ctx, degree, u,
                                  convolve_maps(ctx, degree, Mor(n, m, std::move(basis)), u));
        for (int rr = 0; rr < m; ++rr)
          for (int cc = 0; cc < n; ++cc) {
            Scalar v = image.mat().at(rr, cc);
            if (rr == r && cc == c) v = fld.sub(v, fld.one());
            sys.set(rr * n + cc, r * n + c, v);
          }
      }
    SolutionSet sol = solve_affine(sys, Matrix(m * n, 1, fld));
    basis_ = std::move(sol.nullspace_basis);
  }

  Cochain sample(std::mt19937_64& rng, int max_attempts = 400) const {
    const FieldSpec& fld = ctx_.field();
    const int m = ctx_.A().dim;
    const int n = ctx_.cochain_dom(degree_);
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
      Matrix vec(m * n, 1, fld);
      for (const Matrix& b : basis_) {
        Scalar c = random_scalar(fld, rng);
        if (fld.is_zero(c)) continue;
        for (int r = 0; r < m * n; ++r)
          vec.set(r, 0, fld.add(vec.at(r, 0), fld.mul(c, b.at(r, 0))));
      }
      Matrix mm(m, n, fld);
      for (int r = 0; r < m; ++r)
        for (int c = 0; c < n; ++c) mm.set(r, c, vec.at(r * n + c, 0));
      Mor cand(n, m, std::move(mm));
      if (auto inv = reg_inverse(ctx_, degree_, cand)) {
        Cochain out;
        out.degree = degree_;
        out.map = std::move(cand);
        out.inv = std::move(inv);
        out.normalized = is_normalized(ctx_, out);
        return out;
      }
    }
    // The regular set can be a single point; the neutral cochain is always
    // a valid sample.
    return unit_cochain(ctx_, degree_);
  }

private:
  const ModuleAlgebra& ctx_;
  int degree_;
  std::vector<Matrix> basis_;
};

} // namespace wha::testing

#endif
