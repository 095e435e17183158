#include "wha/field.hpp"

namespace wha {

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::dimension_mismatch: return "DimensionMismatch";
    case ErrorKind::field_mismatch: return "FieldMismatch";
    case ErrorKind::not_idempotent: return "NotIdempotent";
    case ErrorKind::invalid_groupoid: return "InvalidGroupoid";
    case ErrorKind::validation: return "ValidationErr";
    case ErrorKind::syntax: return "SyntaxError";
    case ErrorKind::unbound_name: return "UnboundName";
    case ErrorKind::type_mismatch: return "TypeMismatch";
    case ErrorKind::not_cocommutative: return "NotCocommutative";
    case ErrorKind::not_commutative: return "NotCommutative";
    case ErrorKind::not_strict_module_algebra: return "NotStrictModuleAlgebra";
    case ErrorKind::not_regular: return "NotRegular";
    case ErrorKind::not_normalized: return "NotNormalized";
    case ErrorKind::bad_degree: return "BadDegree";
    case ErrorKind::bad_index: return "BadIndex";
    case ErrorKind::degree_mismatch: return "DegreeMismatch";
    case ErrorKind::budget_exceeded: return "BudgetExceeded";
    case ErrorKind::condition_failed: return "ConditionFailed";
    case ErrorKind::io: return "IOErr";
    case ErrorKind::parse: return "ParseErr";
    case ErrorKind::internal: return "InternalError";
  }
  return "Error";
}

namespace {

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

} // namespace

FieldSpec FieldSpec::Q() { return FieldSpec(Kind::rationals, 0); }

FieldSpec FieldSpec::Fp(long p) {
  if (!is_prime(p))
    throw Error(ErrorKind::validation, "modulus " + std::to_string(p) + " is not prime");
  return FieldSpec(Kind::prime_field, p);
}

Scalar FieldSpec::zero() const { return Scalar(0); }
Scalar FieldSpec::one() const { return Scalar(1); }

Scalar FieldSpec::from_long(long v) const { return reduce(Scalar(v)); }

Scalar FieldSpec::reduce(const Scalar& v) const {
  Scalar r = v;
  r.canonicalize();
  if (kind_ == Kind::rationals) return r;
  mpz_class num = r.get_num(), den = r.get_den(), p(p_);
  mpz_class dinv;
  if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
    throw Error(ErrorKind::parse, "denominator not invertible mod " + std::to_string(p_));
  mpz_class res = (num * dinv) % p;
  if (res < 0) res += p;
  return Scalar(res);
}

Scalar FieldSpec::add(const Scalar& a, const Scalar& b) const { return reduce(a + b); }
Scalar FieldSpec::sub(const Scalar& a, const Scalar& b) const { return reduce(a - b); }
Scalar FieldSpec::mul(const Scalar& a, const Scalar& b) const { return reduce(a * b); }
Scalar FieldSpec::neg(const Scalar& a) const { return reduce(-a); }

std::optional<Scalar> FieldSpec::inv(const Scalar& a) const {
  if (sgn(a) == 0) return std::nullopt;
  if (kind_ == Kind::rationals) {
    Scalar r = 1 / a;
    r.canonicalize();
    return r;
  }
  mpz_class num = a.get_num(), p(p_), ninv;
  if (mpz_invert(ninv.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t()) == 0)
    return std::nullopt;
  return Scalar(ninv);
}

Scalar FieldSpec::parse(const std::string& text) const {
  Scalar v;
  if (mpq_set_str(v.get_mpq_t(), text.c_str(), 10) != 0)
    throw Error(ErrorKind::parse, "bad scalar literal '" + text + "'");
  if (sgn(Scalar(v.get_den())) == 0)
    throw Error(ErrorKind::parse, "zero denominator in '" + text + "'");
  return reduce(v);
}

std::string FieldSpec::to_string(const Scalar& a) const {
  if (kind_ == Kind::prime_field) return a.get_num().get_str();
  return a.get_str();
}

std::string FieldSpec::name() const {
  return kind_ == Kind::rationals ? "Q" : "F" + std::to_string(p_);
}

} // namespace wha
