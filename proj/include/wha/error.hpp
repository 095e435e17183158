#ifndef WHA_ERROR_HPP
#define WHA_ERROR_HPP

#include <stdexcept>
#include <string>

namespace wha {

enum class ErrorKind {
  dimension_mismatch,
  field_mismatch,
  not_idempotent,
  invalid_groupoid,
  validation,
  syntax,
  unbound_name,
  type_mismatch,
  not_cocommutative,
  not_commutative,
  not_strict_module_algebra,
  not_regular,
  not_normalized,
  bad_degree,
  bad_index,
  degree_mismatch,
  budget_exceeded,
  condition_failed,
  io,
  parse,
  internal,
};

const char* error_kind_name(ErrorKind k);

/// Library-wide exception. `label()` carries the failing axiom or condition
/// name ("a2", "b5", "twisted", ...) when one applies; `offset()` carries a
/// byte offset for syntax errors.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, std::string message, std::string label = {},
        long offset = -1)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
        kind_(kind), label_(std::move(label)), offset_(offset) {}

  ErrorKind kind() const { return kind_; }
  const std::string& label() const { return label_; }
  long offset() const { return offset_; }

private:
  ErrorKind kind_;
  std::string label_;
  long offset_;
};

} // namespace wha

#endif
