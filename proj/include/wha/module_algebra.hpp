#ifndef WHA_MODULE_ALGEBRA_HPP
#define WHA_MODULE_ALGEBRA_HPP

#include <memory>
#include <optional>

#include "wha/hl.hpp"
#include "wha/weak_hopf.hpp"

namespace wha {

/// A unital associative algebra in the ambient category.
struct Algebra {
  int dim;
  FieldSpec field;
  Mor eta; // K -> A
  Mor mu;  // A (x) A -> A
  bool commutative = false;

  static AxiomReport validate(const Mor& eta, const Mor& mu);
  static Algebra make(const Mor& eta, const Mor& mu); // throws ValidationErr
};

enum class ActionLevel { weak, strict };

struct ModuleAlgebraReport {
  std::vector<AxiomCheck> checks; // b1, b2, b3, b4..b9, b3-1
  std::optional<ActionLevel> level;
  bool valid() const { return level.has_value(); }
  bool passed(const std::string& label) const;
  std::string first_failure() const;
};

/// Evaluates each of b1..b9 and b3-1 independently. The action is a weak
/// module algebra when b1-b3 and the b4-b9 block hold, and a (strict)
/// module algebra when b3-1 holds as well.
ModuleAlgebraReport validate_module_algebra(const WeakHopf& h, const Algebra& a,
                                            const Mor& phi);

/// A validated weak (or strict) left H-module algebra. Carries the H_L
/// split when H is cocommutative, the neutral maps u_n, and the iterated
/// actions. Immutable and shareable.
class ModuleAlgebra {
public:
  static ModuleAlgebra make(std::shared_ptr<const WeakHopf> h, Algebra a, Mor phi);

  const WeakHopf& H() const { return *h_; }
  std::shared_ptr<const WeakHopf> H_ptr() const { return h_; }
  const Algebra& A() const { return a_; }
  const Mor& phi() const { return phi_; }
  ActionLevel level() const { return level_; }
  bool strict() const { return level_ == ActionLevel::strict; }
  const FieldSpec& field() const { return a_.field; }

  /// Requires cocommutative H.
  const HLData& hl() const;

  /// u_n for n >= 0: u_1 = phi . (H (x) eta_A), u_n = phi . (m^n (x) eta_A)
  /// for n >= 2 (cross-checked against the iterated-action form), and
  /// u_0 = u_1 . i_L on H_L.
  Mor u(int n) const;

  /// phi^n : H^{(x)n} (x) A -> A; phi^1 = phi,
  /// phi^n = phi . (H (x) phi^{n-1}). At the strict level this equals
  /// phi . (m^n (x) A), which is asserted once per degree.
  Mor iterated_action(int n) const;

  /// Domain dimension of degree-n cochains: dim H_L at degree 0, dim H^n
  /// otherwise.
  int cochain_dom(int degree) const;
  /// Coproduct the degree-n convolution runs over: delta_{H_L} at degree 0,
  /// delta_{H^n} otherwise.
  Mor cochain_coproduct(int degree) const;

  /// Whether that coproduct sends every basis vector v to v (x) v (true for
  /// groupoid algebras in every degree); cached per degree.
  bool coproduct_is_group_like(int degree) const;

private:
  ModuleAlgebra(std::shared_ptr<const WeakHopf> h, Algebra a, Mor phi, ActionLevel level);

  struct Cache;

  std::shared_ptr<const WeakHopf> h_;
  Algebra a_;
  Mor phi_;
  ActionLevel level_;
  std::optional<HLData> hl_;
  std::shared_ptr<Cache> cache_;
};

} // namespace wha

#endif
