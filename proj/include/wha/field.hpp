#ifndef WHA_FIELD_HPP
#define WHA_FIELD_HPP

#include <gmpxx.h>

#include <optional>
#include <string>

#include "wha/error.hpp"

namespace wha {

/// Exact scalar. Rationals are kept canonical (lowest terms, positive
/// denominator); prime-field residues are stored in the numerator with
/// denominator 1 and lie in [0, p).
using Scalar = mpq_class;

/// The base field: Q or F_p for a prime p. All scalar arithmetic goes
/// through this class so results stay in canonical form.
class FieldSpec {
public:
  enum class Kind { rationals, prime_field };

  static FieldSpec Q();
  static FieldSpec Fp(long p); // throws validation if p is not prime

  Kind kind() const { return kind_; }
  long p() const { return p_; }
  bool is_prime_field() const { return kind_ == Kind::prime_field; }

  bool operator==(const FieldSpec& o) const {
    return kind_ == o.kind_ && p_ == o.p_;
  }
  bool operator!=(const FieldSpec& o) const { return !(*this == o); }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_long(long v) const;

  /// Canonicalize an arbitrary rational into this field. Over F_p the
  /// denominator must be invertible mod p.
  Scalar reduce(const Scalar& v) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  std::optional<Scalar> inv(const Scalar& a) const; // none for 0

  bool is_zero(const Scalar& a) const { return sgn(a) == 0; }

  /// Parse "3/2", "-7", or a residue; result reduced into the field.
  Scalar parse(const std::string& text) const;
  std::string to_string(const Scalar& a) const;

  std::string name() const; // "Q" or "F3"

private:
  FieldSpec(Kind k, long p) : kind_(k), p_(p) {}
  Kind kind_;
  long p_;
};

} // namespace wha

#endif
