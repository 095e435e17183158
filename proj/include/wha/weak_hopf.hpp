#ifndef WHA_WEAK_HOPF_HPP
#define WHA_WEAK_HOPF_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wha/groupoid.hpp"
#include "wha/mor.hpp"

namespace wha {

struct AxiomCheck {
  std::string label;
  bool pass;
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;
  bool cocommutative = false;
  bool commutative = false;

  bool valid() const;
  bool passed(const std::string& label) const;
  std::string first_failure() const; // empty when valid
};

/// Raw structure maps of a would-be weak Hopf algebra.
struct HopfData {
  int dim;
  FieldSpec field;
  Mor eta;    // K -> H
  Mor mu;     // H (x) H -> H
  Mor eps;    // H -> K
  Mor delta;  // H -> H (x) H
  Mor lambda; // H -> H, the antipode
};

/// Validates the unit/counit, (co)associativity and the weak Hopf axioms
/// a1, a2 (both forms), a3 (both forms), a4-1..a4-3, one report entry each.
/// Throws DimensionMismatch on malformed structure maps.
AxiomReport validate_weak_hopf(const HopfData& d);

/// A validated weak Hopf algebra with the four projections and, when the
/// coproduct is cocommutative, the idempotent Omega on H (x) H, cached at
/// construction. Immutable; safe to share between threads.
class WeakHopf {
public:
  static WeakHopf from_data(const HopfData& d); // throws ValidationErr(label)
  static WeakHopf groupoid_algebra(const Groupoid& g, const FieldSpec& field);

  int dim() const { return d_.dim; }
  const FieldSpec& field() const { return d_.field; }
  const Mor& eta() const { return d_.eta; }
  const Mor& mu() const { return d_.mu; }
  const Mor& eps() const { return d_.eps; }
  const Mor& delta() const { return d_.delta; }
  const Mor& antipode() const { return d_.lambda; }

  const Mor& piL() const { return piL_; }
  const Mor& piR() const { return piR_; }
  const Mor& piLbar() const { return piLbar_; }
  const Mor& piRbar() const { return piRbar_; }

  const Mor& omega_left() const { return omega_left_; }
  const Mor& omega_right() const { return omega_right_; }
  /// The common value of the left/right Omega idempotents; requires a
  /// cocommutative coproduct.
  const Mor& omega2() const;

  bool cocommutative() const { return cocommutative_; }
  bool commutative() const { return commutative_; }

  Mor id(int tensor_power = 1) const;
  int dim_pow(int n) const;

  /// m^n : H^{(x)n} -> H, right-nested; n >= 2.
  Mor iterated_product(int n) const;
  /// Left-nested variant, equal to iterated_product by associativity.
  Mor iterated_product_left(int n) const;

  /// delta_{H^n} : H^{(x)n} -> H^{(x)n} (x) H^{(x)n}; n >= 0 (n = 0 is K).
  Mor iterated_coproduct(int n) const;
  /// The same coproduct built by splitting H^n as H^k (x) H^{n-k}.
  Mor iterated_coproduct_split(int n, int k) const;

  /// eps^{(x)n} : H^{(x)n} -> K.
  Mor counit_power(int n) const;

  /// Convolution of maps H -> H against (mu, delta).
  Mor conv_endo(const Mor& f, const Mor& g) const;

private:
  explicit WeakHopf(HopfData d);

  struct DeltaCache; // locked memo of iterated coproducts

  HopfData d_;
  Mor piL_, piR_, piLbar_, piRbar_;
  Mor omega_left_, omega_right_;
  std::optional<Mor> omega2_;
  bool cocommutative_ = false;
  bool commutative_ = false;
  std::shared_ptr<DeltaCache> cache_;
};

/// The four projection composites for arbitrary structure maps; used both by
/// the validator and the cached accessors.
Mor make_piL(const HopfData& d);
Mor make_piR(const HopfData& d);
Mor make_piLbar(const HopfData& d);
Mor make_piRbar(const HopfData& d);

/// Identity suite over a validated algebra: projection and antipode
/// identities (conv-idempotency, the composition lattice of the four
/// projections, the mu/delta exchange laws) plus, when cocommutative, the
/// involutive antipode and the Omega compatibility laws. Every entry must
/// pass for a genuinely weak Hopf algebra; the report form keeps failures
/// diagnosable.
AxiomReport structural_identity_report(const WeakHopf& h);

} // namespace wha

#endif
