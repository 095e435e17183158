#include <doctest.h>

#include "fixtures.hpp"
#include "wha/matrix.hpp"

using namespace wha;

namespace {

Matrix from_rows(const FieldSpec& f, std::vector<std::vector<long>> rows) {
  Matrix m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()),
           f);
  for (size_t r = 0; r < rows.size(); ++r)
    for (size_t c = 0; c < rows[r].size(); ++c)
      m.set(static_cast<int>(r), static_cast<int>(c), f.from_long(rows[r][c]));
  return m;
}

} // namespace

TEST_CASE("field canonical forms") {
  FieldSpec q = FieldSpec::Q();
  CHECK(q.parse("3/6") == q.parse("1/2"));
  CHECK(q.to_string(q.parse("-4/6")) == "-2/3");
  CHECK(q.to_string(q.parse("8/4")) == "2");

  FieldSpec f3 = FieldSpec::Fp(3);
  CHECK(f3.to_string(f3.parse("-1")) == "2");
  CHECK(f3.to_string(f3.parse("1/2")) == "2"); // 2 inverts to 2 mod 3
  CHECK(f3.mul(f3.from_long(2), f3.from_long(2)) == f3.one());
  CHECK_THROWS_AS(FieldSpec::Fp(6), Error);
  CHECK_THROWS_AS((void)f3.parse("1/3"), Error);
}

TEST_CASE("solve_affine identity and inconsistent cases") {
  FieldSpec q = FieldSpec::Q();
  Matrix one = from_rows(q, {{1}});
  SolutionSet s = solve_affine(one, one);
  REQUIRE(s.consistent());
  CHECK(*s.particular == one);
  CHECK(s.nullspace_basis.empty());

  Matrix zero = from_rows(q, {{0}});
  CHECK_FALSE(solve_affine(zero, one).consistent());
}

TEST_CASE("solve_affine over F2 matches exhaustive substitution") {
  FieldSpec f2 = FieldSpec::Fp(2);
  Matrix m = from_rows(f2, {{1, 1}, {0, 0}});
  Matrix b = from_rows(f2, {{1}, {0}});
  SolutionSet s = solve_affine(m, b);
  REQUIRE(s.consistent());
  CHECK(*s.particular == from_rows(f2, {{1}, {0}}));
  REQUIRE(s.nullspace_basis.size() == 1);
  CHECK(s.nullspace_basis[0] == from_rows(f2, {{1}, {1}}));

  // Oracle: all four vectors of F2^2, solutions must be exactly the affine
  // line found above.
  int solutions = 0;
  for (long x0 = 0; x0 < 2; ++x0)
    for (long x1 = 0; x1 < 2; ++x1) {
      Matrix v = from_rows(f2, {{x0}, {x1}});
      if (mul(m, v) == b) {
        ++solutions;
        bool is_particular = v == *s.particular;
        Matrix shifted = add(*s.particular, s.nullspace_basis[0]);
        CHECK((is_particular || v == shifted));
      }
    }
  CHECK(solutions == 2);

  // The returned data really solves the system.
  CHECK(mul(m, *s.particular) == b);
  CHECK(mul(m, s.nullspace_basis[0]).is_zero());
}

TEST_CASE("split_idempotent identity, zero and rank-1 cases") {
  FieldSpec q = FieldSpec::Q();
  auto [i3, p3] = split_idempotent(Matrix::identity(3, q));
  CHECK(i3 == Matrix::identity(3, q));
  CHECK(p3 == Matrix::identity(3, q));

  auto [iz, pz] = split_idempotent(Matrix::zero(2, 2, q));
  CHECK(iz.cols() == 0);
  CHECK(pz.rows() == 0);
  CHECK(mul(iz, pz) == Matrix::zero(2, 2, q));
  CHECK(mul(pz, iz).rows() == 0);

  FieldSpec f2 = FieldSpec::Fp(2);
  Matrix qm = from_rows(f2, {{1, 1}, {0, 0}});
  auto [i, p] = split_idempotent(qm);
  CHECK(i == from_rows(f2, {{1}, {0}}));
  CHECK(p == from_rows(f2, {{1, 1}}));
  CHECK(mul(i, p) == qm);
  CHECK(mul(p, i) == Matrix::identity(1, f2));

  CHECK_THROWS_AS(split_idempotent(from_rows(f2, {{0, 1}, {0, 0}})), Error);
}

namespace {

// Inverse by column-wise exact solves; requires full rank.
Matrix inverse_of(const Matrix& s) {
  Matrix inv(s.rows(), s.cols(), s.field());
  for (int c = 0; c < s.cols(); ++c) {
    Matrix e(s.rows(), 1, s.field());
    e.set(c, 0, s.field().one());
    SolutionSet sol = solve_affine(s, e);
    REQUIRE(sol.consistent());
    for (int r = 0; r < s.rows(); ++r) inv.set(r, c, sol.particular->at(r, 0));
  }
  return inv;
}

} // namespace

TEST_CASE("rank additivity for random conjugated idempotents") {
  auto rng = testing::fixed_rng(11);
  FieldSpec f3 = FieldSpec::Fp(3);
  int done = 0;
  while (done < 20) {
    Matrix s = testing::random_mor(4, 4, f3, rng).mat();
    if (rank(s) < 4) continue;
    Matrix d(4, 4, f3);
    for (int k = 0; k < 4; ++k)
      if (rng() % 2) d.set(k, k, f3.one());
    Matrix q = mul(mul(s, d), inverse_of(s));
    REQUIRE(mul(q, q) == q);
    CHECK(rank(q) + rank(sub(Matrix::identity(4, f3), q)) == 4);
    auto [i, p] = split_idempotent(q);
    CHECK(mul(i, p) == q);
    CHECK(mul(p, i).is_identity());
    CHECK(i.cols() == rank(d));
    ++done;
  }
}

TEST_CASE("matrix shape and field errors") {
  FieldSpec q = FieldSpec::Q();
  FieldSpec f2 = FieldSpec::Fp(2);
  Matrix a(2, 2, q), b(3, 2, q), c(2, 2, f2);
  CHECK_THROWS_AS(mul(a, b), Error);
  CHECK_THROWS_AS(mul(a, c), Error);
  CHECK_THROWS_AS(solve_affine(a, Matrix(3, 1, q)), Error);
}
