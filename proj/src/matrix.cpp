#include "wha/matrix.hpp"

#include <sstream>

namespace wha {

namespace {

void require_same_field(const Matrix& a, const Matrix& b) {
  if (a.field() != b.field())
    throw Error(ErrorKind::field_mismatch,
                a.field().name() + " vs " + b.field().name());
}

} // namespace

Matrix::Matrix(int rows, int cols, FieldSpec field)
    : rows_(rows), cols_(cols), field_(field) {
  if (rows < 0 || cols < 0)
    throw Error(ErrorKind::dimension_mismatch, "negative matrix dimension");
  e_.assign(static_cast<size_t>(rows) * cols, field_.zero());
}

Matrix Matrix::identity(int n, const FieldSpec& field) {
  Matrix m(n, n, field);
  for (int i = 0; i < n; ++i) m.e_[static_cast<size_t>(i) * n + i] = field.one();
  return m;
}

const Scalar& Matrix::at(int r, int c) const {
  return e_[static_cast<size_t>(r) * cols_ + c];
}

void Matrix::set(int r, int c, const Scalar& v) {
  e_[static_cast<size_t>(r) * cols_ + c] = field_.reduce(v);
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && field_ == o.field_ && e_ == o.e_;
}

bool Matrix::is_zero() const {
  for (const auto& v : e_)
    if (sgn(v) != 0) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  return *this == identity(rows_, field_);
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_, field_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.e_[static_cast<size_t>(c) * rows_ + r] = at(r, c);
  return t;
}

std::string Matrix::key() const {
  std::string s;
  for (size_t i = 0; i < e_.size(); ++i) {
    if (i) s += ',';
    s += field_.to_string(e_[i]);
  }
  return s;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  for (int r = 0; r < rows_; ++r) {
    os << "[ ";
    for (int c = 0; c < cols_; ++c) os << field_.to_string(at(r, c)) << ' ';
    os << "]\n";
  }
  return os.str();
}

Matrix mul(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.cols_ != b.rows_)
    throw Error(ErrorKind::dimension_mismatch,
                "product of " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) +
                    " by " + std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
  Matrix c(a.rows_, b.cols_, a.field_);
  for (int i = 0; i < a.rows_; ++i) {
    for (int k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a.e_[static_cast<size_t>(i) * a.cols_ + k];
      if (sgn(aik) == 0) continue;
      for (int j = 0; j < b.cols_; ++j) {
        const Scalar& bkj = b.e_[static_cast<size_t>(k) * b.cols_ + j];
        if (sgn(bkj) == 0) continue;
        Scalar& cij = c.e_[static_cast<size_t>(i) * c.cols_ + j];
        cij = c.field_.add(cij, c.field_.mul(aik, bkj));
      }
    }
  }
  return c;
}

Matrix add(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw Error(ErrorKind::dimension_mismatch, "matrix sum shape mismatch");
  Matrix c(a.rows_, a.cols_, a.field_);
  for (size_t i = 0; i < a.e_.size(); ++i) c.e_[i] = a.field_.add(a.e_[i], b.e_[i]);
  return c;
}

Matrix sub(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw Error(ErrorKind::dimension_mismatch, "matrix difference shape mismatch");
  Matrix c(a.rows_, a.cols_, a.field_);
  for (size_t i = 0; i < a.e_.size(); ++i) c.e_[i] = a.field_.sub(a.e_[i], b.e_[i]);
  return c;
}

// Basis convention e_i (x) e_j -> index i * dim2 + j, so this is the plain
// Kronecker product.
Matrix kronecker(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  Matrix c(a.rows_ * b.rows_, a.cols_ * b.cols_, a.field_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a.e_[static_cast<size_t>(i) * a.cols_ + k];
      if (sgn(aik) == 0) continue;
      for (int j = 0; j < b.rows_; ++j)
        for (int l = 0; l < b.cols_; ++l) {
          const Scalar& bjl = b.e_[static_cast<size_t>(j) * b.cols_ + l];
          if (sgn(bjl) == 0) continue;
          c.e_[static_cast<size_t>(i * b.rows_ + j) * c.cols_ + (k * b.cols_ + l)] =
              c.field_.mul(aik, bjl);
        }
    }
  return c;
}

namespace {

struct Echelon {
  Matrix r;               // reduced row echelon form
  std::vector<int> pivots; // pivot column per pivot row
};

// Gauss-Jordan with first-nonzero-pivot selection: scanning columns left to
// right, the pivot is the first remaining row with a nonzero entry.
Echelon rref(Matrix m) {
  const FieldSpec& f = m.field();
  std::vector<int> pivots;
  int prow = 0;
  for (int col = 0; col < m.cols() && prow < m.rows(); ++col) {
    int sel = -1;
    for (int r = prow; r < m.rows(); ++r)
      if (sgn(m.at(r, col)) != 0) { sel = r; break; }
    if (sel < 0) continue;
    if (sel != prow)
      for (int c = 0; c < m.cols(); ++c) {
        Scalar tmp = m.at(prow, c);
        m.set(prow, c, m.at(sel, c));
        m.set(sel, c, tmp);
      }
    Scalar piv_inv = *f.inv(m.at(prow, col));
    for (int c = 0; c < m.cols(); ++c) m.set(prow, c, f.mul(m.at(prow, c), piv_inv));
    for (int r = 0; r < m.rows(); ++r) {
      if (r == prow) continue;
      Scalar factor = m.at(r, col);
      if (sgn(factor) == 0) continue;
      for (int c = 0; c < m.cols(); ++c)
        m.set(r, c, f.sub(m.at(r, c), f.mul(factor, m.at(prow, c))));
    }
    pivots.push_back(col);
    ++prow;
  }
  return {m, pivots};
}

} // namespace

SolutionSet solve_affine(const Matrix& m, const Matrix& b) {
  require_same_field(m, b);
  if (b.cols() != 1 || m.rows() != b.rows())
    throw Error(ErrorKind::dimension_mismatch, "solve_affine wants a matching column rhs");
  const FieldSpec& f = m.field();

  Matrix aug(m.rows(), m.cols() + 1, f);
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) aug.set(r, c, m.at(r, c));
    aug.set(r, m.cols(), b.at(r, 0));
  }
  Echelon e = rref(std::move(aug));

  SolutionSet out;
  // A pivot in the rhs column marks an inconsistent system.
  for (size_t i = 0; i < e.pivots.size(); ++i)
    if (e.pivots[i] == m.cols()) return out;

  std::vector<int> pivot_of_col(m.cols(), -1);
  for (size_t i = 0; i < e.pivots.size(); ++i) pivot_of_col[e.pivots[i]] = static_cast<int>(i);

  Matrix part(m.cols(), 1, f);
  for (int c = 0; c < m.cols(); ++c)
    if (pivot_of_col[c] >= 0) part.set(c, 0, e.r.at(pivot_of_col[c], m.cols()));
  out.particular = part;

  for (int free_col = 0; free_col < m.cols(); ++free_col) {
    if (pivot_of_col[free_col] >= 0) continue;
    Matrix v(m.cols(), 1, f);
    v.set(free_col, 0, f.one());
    for (int c = 0; c < m.cols(); ++c)
      if (pivot_of_col[c] >= 0)
        v.set(c, 0, f.neg(e.r.at(pivot_of_col[c], free_col)));
    out.nullspace_basis.push_back(std::move(v));
  }
  return out;
}

long rank(const Matrix& m) { return static_cast<long>(rref(m).pivots.size()); }

std::pair<Matrix, Matrix> split_idempotent(const Matrix& q) {
  if (q.rows() != q.cols())
    throw Error(ErrorKind::not_idempotent, "matrix is not square");
  if (mul(q, q) != q)
    throw Error(ErrorKind::not_idempotent, "q*q != q");

  Echelon e = rref(q);
  const int r = static_cast<int>(e.pivots.size());
  const FieldSpec& f = q.field();

  Matrix i(q.rows(), r, f);
  for (int k = 0; k < r; ++k)
    for (int row = 0; row < q.rows(); ++row) i.set(row, k, q.at(row, e.pivots[k]));
  Matrix p(r, q.cols(), f);
  for (int k = 0; k < r; ++k)
    for (int col = 0; col < q.cols(); ++col) p.set(k, col, e.r.at(k, col));

  if (mul(i, p) != q || !mul(p, i).is_identity())
    throw Error(ErrorKind::internal, "rank factorization failed on an idempotent");
  return {i, p};
}

} // namespace wha
