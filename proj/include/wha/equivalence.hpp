#ifndef WHA_EQUIVALENCE_HPP
#define WHA_EQUIVALENCE_HPP

#include "wha/crossed_product.hpp"

namespace wha {

/// A gauge transformation: a normalized regular degree-1 cochain f together
/// with Gamma_f = ((mu_A . (A (x) f)) (x) H) . (A (x) delta) and the
/// companion built from f^-1. Gamma_f . Gamma_{f^-1} = nabla on both sides.
struct Gauge {
  Cochain f;
  Mor gamma;
  Mor gamma_inv;
};

/// Builds the gauge for f in Reg^+(H, A); asserts the nabla-inverse laws
/// and both round-trips of the correspondence f <-> Gamma_f.
Gauge gamma_of(const ModuleAlgebra& ctx, const Cochain& f);

/// True iff f links the crossed products of alpha and beta: the action
/// exchange law for f holds (automatic over commutative A) and
/// alpha ^ d_{1,1}(f) = d_{1,0}(f) ^ d_{1,2}(f) ^ beta.
bool gauge_links(const ModuleAlgebra& ctx, const Cochain& f, const Cochain& alpha,
                 const Cochain& beta);

/// Exhaustive search of Reg^+(H, A) for a linking gauge. Over a commutative
/// A the search is cross-checked against membership of alpha ^ beta^-1 in
/// Im(D^1+); the two methods must agree.
std::optional<Gauge> find_equivalence(const ModuleAlgebra& ctx, const Cochain& alpha,
                                      const Cochain& beta, std::uint64_t budget = 1000000);

/// The algebra isomorphism omega = p . Gamma_f . i : A x_alpha H -> A x_beta H
/// induced by a linking gauge; asserts it is unital, multiplicative,
/// invertible via f^-1, left A-linear and right H-colinear.
Mor build_isomorphism(const CrossedProductData& cp_alpha, const CrossedProductData& cp_beta,
                      const Gauge& g);

struct ClassificationReport {
  long cocycle_count = 0; // normalized regular 2-cocycles
  long class_count = 0;   // gauge-equivalence classes
  long h2_order = 0;
  bool bijection_ok = false;
  std::vector<Cochain> cocycles;          // sorted by serialization
  std::vector<std::vector<int>> classes;  // per-class member indices
};

/// Enumerates all normalized regular 2-cocycles, partitions them by gauge
/// equivalence, and compares the partition class-by-class with the
/// H^2 quotient. Needs cocommutative H, commutative A, strict level.
ClassificationReport classify(const ModuleAlgebra& ctx, std::uint64_t budget = 1000000);

} // namespace wha

#endif
