#ifndef WHA_COHOMOLOGY_HPP
#define WHA_COHOMOLOGY_HPP

#include <cstdint>
#include <vector>

#include "wha/cochain.hpp"

namespace wha {

/// Coface d_{k,i} : degree k -> degree k+1, 0 <= i <= k+1, where k is the
/// degree of `f`. Needs the strict module-algebra level. Degree 0 maps
/// H_L -> A; the faces are
///   d_{0,0}(g) = phi . (H (x) (g . p_L . Pi^R)) . delta,
///   d_{0,1}(g) = g . p_L,
/// and in higher degree
///   d_{k,0}(s)   = phi . (H (x) s),
///   d_{k,i}(s)   = s . (H^{i-1} (x) mu (x) H^{k-i})      for 1 <= i <= k,
///   d_{k,k+1}(s) = s . (H^{k-1} (x) (mu . (H (x) Pi^L))).
/// Relative inverses ride along (the faces are convolution-group maps).
Cochain coface(const ModuleAlgebra& ctx, int i, const Cochain& f);

/// Codegeneracy s_{k,i} : degree k -> degree k-1 for k >= 1,
/// 0 <= i <= k-1: s_{1,0}(h) = h . i_L, and for k >= 2
/// s_{k,i}(s) = s . (H^i (x) eta (x) H^{k-1-i}).
Cochain codegeneracy(const ModuleAlgebra& ctx, int i, const Cochain& f);

/// D^k(f) = d_{k,0}(f) ^ d_{k,1}(f^-1) ^ ... alternating up to index k+1.
/// Requires a regular f; the result's inverse is the alternation started
/// on f^-1 (verified, with a direct solve as fallback).
Cochain coboundary(const ModuleAlgebra& ctx, const Cochain& f);

/// Enumerates every map H^{(x)n} -> A over a prime field (budget checked
/// against p^(dimA * dimH^n)) and keeps the regular ones. Inverses are
/// attached; output is sorted by serialized matrix.
std::vector<Cochain> enumerate_reg(const ModuleAlgebra& ctx, int degree,
                                   std::uint64_t budget = 1000000);

/// The normalized subset Reg^+; same budget contract. Enumeration walks the
/// affine subspace cut out by the (linear) normalization constraints, which
/// produces exactly the brute-force filtered set.
std::vector<Cochain> enumerate_reg_plus(const ModuleAlgebra& ctx, int degree,
                                        std::uint64_t budget = 1000000);

struct H2Result {
  long order = 0;
  std::vector<Cochain> class_reps;     // lexicographically smallest per class
  long cocycle_count = 0;              // |Ker D^2 restricted to Reg^+|
  long coboundary_count = 0;           // |Im D^1 on Reg^+|
  /// Index of the class representative for each kernel element, aligned
  /// with `kernel`.
  std::vector<Cochain> kernel;
  std::vector<int> class_of;
};

/// Brute-force H^2 = Ker(D^2+) / Im(D^1+) over the normalized subcomplex.
/// Needs cocommutative H, commutative A, strict level, prime field.
H2Result cohomology_h2(const ModuleAlgebra& ctx, std::uint64_t budget = 1000000);

/// Same quotient in degree k (k = 1 or 2): Ker(D^k+) / Im(D^{k-1}+).
H2Result cohomology_group(const ModuleAlgebra& ctx, int k,
                          std::uint64_t budget = 1000000);

} // namespace wha

#endif
