#include "wha/mor.hpp"

namespace wha {

Mor::Mor(int dom, int cod, Matrix mat) : dom_(dom), cod_(cod), mat_(std::move(mat)) {
  if (mat_.rows() != cod_ || mat_.cols() != dom_)
    throw Error(ErrorKind::dimension_mismatch,
                "morphism matrix is " + std::to_string(mat_.rows()) + "x" +
                    std::to_string(mat_.cols()) + " but dom=" + std::to_string(dom_) +
                    " cod=" + std::to_string(cod_));
}

Mor Mor::identity(int n, const FieldSpec& field) {
  return Mor(n, n, Matrix::identity(n, field));
}

Mor Mor::zero(int dom, int cod, const FieldSpec& field) {
  return Mor(dom, cod, Matrix::zero(cod, dom, field));
}

Mor compose(const Mor& g, const Mor& f) {
  if (f.field() != g.field())
    throw Error(ErrorKind::field_mismatch, f.field().name() + " vs " + g.field().name());
  if (f.cod() != g.dom())
    throw Error(ErrorKind::dimension_mismatch,
                "compose: inner dimensions " + std::to_string(g.dom()) + " vs " +
                    std::to_string(f.cod()));
  return Mor(f.dom(), g.cod(), mul(g.mat(), f.mat()));
}

Mor tensor(const Mor& f, const Mor& g) {
  if (f.field() != g.field())
    throw Error(ErrorKind::field_mismatch, f.field().name() + " vs " + g.field().name());
  return Mor(f.dom() * g.dom(), f.cod() * g.cod(), kronecker(f.mat(), g.mat()));
}

Mor swap(int m, int n, const FieldSpec& field) {
  if (m < 0 || n < 0)
    throw Error(ErrorKind::dimension_mismatch, "swap with negative dimension");
  Matrix mat(m * n, m * n, field);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) mat.set(j * m + i, i * n + j, field.one());
  return Mor(m * n, n * m, std::move(mat));
}

Mor mor_add(const Mor& f, const Mor& g) {
  if (f.dom() != g.dom() || f.cod() != g.cod())
    throw Error(ErrorKind::dimension_mismatch, "sum of maps with different shapes");
  return Mor(f.dom(), f.cod(), add(f.mat(), g.mat()));
}

Mor mor_sub(const Mor& f, const Mor& g) {
  if (f.dom() != g.dom() || f.cod() != g.cod())
    throw Error(ErrorKind::dimension_mismatch, "difference of maps with different shapes");
  return Mor(f.dom(), f.cod(), sub(f.mat(), g.mat()));
}

Mor convolve(const Mor& mu, const Mor& delta, const Mor& f, const Mor& g) {
  return compose(mu, tensor(f, g), delta);
}

} // namespace wha
