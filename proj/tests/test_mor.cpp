#include <doctest.h>

#include "fixtures.hpp"
#include "wha/mor.hpp"

using namespace wha;

TEST_CASE("compose identity laws") {
  auto rng = testing::fixed_rng(21);
  FieldSpec q = FieldSpec::Q();
  Mor f = testing::random_mor(3, 2, q, rng);
  CHECK(compose(Mor::identity(2, q), f) == f);
  CHECK(compose(f, Mor::identity(3, q)) == f);
  CHECK_THROWS_AS(compose(f, f), Error);
}

TEST_CASE("tensor identities and unit object strictness") {
  FieldSpec q = FieldSpec::Q();
  CHECK(tensor(Mor::identity(2, q), Mor::identity(3, q)) == Mor::identity(6, q));
  auto rng = testing::fixed_rng(22);
  Mor f = testing::random_mor(4, 3, q, rng);
  CHECK(tensor(Mor::identity(1, q), f) == f);
  CHECK(tensor(f, Mor::identity(1, q)) == f);
}

TEST_CASE("interchange law on random exact matrices") {
  auto rng = testing::fixed_rng(23);
  for (const FieldSpec& f : {FieldSpec::Q(), FieldSpec::Fp(3)}) {
    for (int trial = 0; trial < 12; ++trial) {
      Mor g1 = testing::random_mor(2, 2, f, rng), f1 = testing::random_mor(2, 2, f, rng);
      Mor g2 = testing::random_mor(2, 2, f, rng), f2 = testing::random_mor(2, 2, f, rng);
      CHECK(tensor(compose(f1, g1), compose(f2, g2)) ==
            compose(tensor(f1, f2), tensor(g1, g2)));
    }
  }
}

TEST_CASE("swap unit, involution and naturality") {
  FieldSpec q = FieldSpec::Q();
  for (int n = 0; n <= 6; ++n) {
    CHECK(swap(1, n, q) == Mor::identity(n, q));
    CHECK(swap(n, 1, q) == Mor::identity(n, q));
  }
  for (int m = 1; m <= 6; ++m)
    for (int n = 1; n <= 6; ++n)
      CHECK(compose(swap(n, m, q), swap(m, n, q)) == Mor::identity(m * n, q));

  auto rng = testing::fixed_rng(24);
  for (int trial = 0; trial < 10; ++trial) {
    Mor f = testing::random_mor(2, 3, q, rng); // m=2 -> m'=3
    Mor g = testing::random_mor(4, 2, q, rng); // n=4 -> n'=2
    CHECK(compose(tensor(g, f), swap(2, 4, q)) == compose(swap(3, 2, q), tensor(f, g)));
  }
}

TEST_CASE("associativity of compose and tensor") {
  auto rng = testing::fixed_rng(25);
  FieldSpec f3 = FieldSpec::Fp(3);
  Mor a = testing::random_mor(2, 3, f3, rng);
  Mor b = testing::random_mor(3, 4, f3, rng);
  Mor c = testing::random_mor(4, 2, f3, rng);
  CHECK(compose(compose(c, b), a) == compose(c, compose(b, a)));
  CHECK(tensor(tensor(a, b), c) == tensor(a, tensor(b, c)));
}

TEST_CASE("split composes back to identity") {
  // compose(p, i) for any split_idempotent output is the identity of rank
  // size; exercised through the Mor layer.
  FieldSpec f2 = FieldSpec::Fp(2);
  Matrix qm(2, 2, f2);
  qm.set(0, 0, f2.one());
  qm.set(0, 1, f2.one());
  auto [im, pm] = split_idempotent(qm);
  Mor i(im.cols(), 2, im), p(2, pm.rows(), pm);
  CHECK(compose(p, i) == Mor::identity(1, f2));
}
