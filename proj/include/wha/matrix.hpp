#ifndef WHA_MATRIX_HPP
#define WHA_MATRIX_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wha/field.hpp"

namespace wha {

/// Dense row-major matrix over an exact field. Entries are always in
/// canonical form, so equality is plain entrywise comparison. Zero row or
/// column counts are legal; products through a 0-dimensional middle space
/// are zero matrices.
class Matrix {
public:
  Matrix(int rows, int cols, FieldSpec field); // zero-filled

  static Matrix identity(int n, const FieldSpec& field);
  static Matrix zero(int rows, int cols, const FieldSpec& field) {
    return Matrix(rows, cols, field);
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const FieldSpec& field() const { return field_; }

  const Scalar& at(int r, int c) const;
  void set(int r, int c, const Scalar& v); // reduces into the field

  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  bool is_zero() const;
  bool is_identity() const;

  Matrix transpose() const;

  /// Row-major entry list joined with ','; used as a deterministic sort and
  /// dedup key.
  std::string key() const;

  std::string to_string() const; // human-readable, row per line

  friend Matrix mul(const Matrix& a, const Matrix& b);
  friend Matrix add(const Matrix& a, const Matrix& b);
  friend Matrix sub(const Matrix& a, const Matrix& b);
  friend Matrix kronecker(const Matrix& a, const Matrix& b);

private:
  int rows_, cols_;
  FieldSpec field_;
  std::vector<Scalar> e_;
};

Matrix mul(const Matrix& a, const Matrix& b);      // DimensionMismatch/FieldMismatch
Matrix add(const Matrix& a, const Matrix& b);
Matrix sub(const Matrix& a, const Matrix& b);
Matrix kronecker(const Matrix& a, const Matrix& b);

struct SolutionSet {
  std::optional<Matrix> particular;  // one column, absent if inconsistent
  std::vector<Matrix> nullspace_basis;
  bool consistent() const { return particular.has_value(); }
};

/// Exact affine solve M x = b by Gauss-Jordan elimination with
/// first-nonzero-pivot selection, so the output is deterministic.
SolutionSet solve_affine(const Matrix& m, const Matrix& b);

long rank(const Matrix& m);

/// Rank factorization q = i * p with p * i = identity, for idempotent q.
/// i has rank(q) columns (pivot columns of q), p is the nonzero part of the
/// reduced row echelon form. Throws NotIdempotent when q*q != q.
std::pair<Matrix, Matrix> split_idempotent(const Matrix& q);

} // namespace wha

#endif
