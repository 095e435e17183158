#ifndef WHA_COCHAIN_HPP
#define WHA_COCHAIN_HPP

#include <optional>

#include "wha/module_algebra.hpp"

namespace wha {

/// A degree-tagged map into the coefficient algebra: H^{(x)n} -> A for
/// n >= 1, H_L -> A at degree 0. `inv` is the relative convolution inverse
/// when one exists; `normalized` flags membership in the normalized
/// subcomplex.
struct Cochain {
  int degree = 0;
  Mor map;
  std::optional<Mor> inv;
  bool normalized = false;

  bool regular() const { return inv.has_value(); }
  const Mor& inverse() const;
  /// The same cochain with map and inverse exchanged.
  Cochain inverted() const; // throws NotRegular
  std::string key() const { return map.key(); }
};

/// The neutral cochain u_n (its own relative inverse, normalized).
Cochain unit_cochain(const ModuleAlgebra& ctx, int degree);

/// f ^ g = mu_A . (f (x) g) . delta over the degree's coproduct. The result
/// carries an inverse when both inputs do (g^-1 ^ f^-1).
Cochain convolution(const ModuleAlgebra& ctx, const Cochain& f, const Cochain& g);

Mor convolve_maps(const ModuleAlgebra& ctx, int degree, const Mor& f, const Mor& g);

/// The relative convolution inverse: the unique x with f^x = x^f = u_n,
/// f^x^f = f and x^f^x = x, found by an exact linear solve. Returns nothing
/// when no inverse exists; never throws for mere absence.
std::optional<Mor> reg_inverse(const ModuleAlgebra& ctx, int degree, const Mor& f);

/// Wraps a raw map, attaching the inverse (when wanted and present) and the
/// normalized flag.
Cochain make_cochain(const ModuleAlgebra& ctx, int degree, Mor map,
                     bool want_inverse = true);

/// Membership test for the normalized subcomplex. Degree 0 tests
/// g . p_L . eta_H = eta_A; degree n >= 1 tests that every codegeneracy
/// collapses to the neutral cochain. For regular degree-1 and degree-2
/// cochains the equivalent unit/projection characterizations are
/// cross-checked.
bool is_normalized(const ModuleAlgebra& ctx, const Cochain& f);

} // namespace wha

#endif
