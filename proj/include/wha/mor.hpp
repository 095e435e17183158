#ifndef WHA_MOR_HPP
#define WHA_MOR_HPP

#include <initializer_list>

#include "wha/matrix.hpp"

namespace wha {

/// A linear map with explicit domain/codomain dimensions. Objects of the
/// strict symmetric category are bare dimensions; the unit object K is
/// dimension 1, which makes the tensor unit laws hold on the nose.
class Mor {
public:
  /// Empty map on the zero space; placeholder state for containers.
  Mor() : dom_(0), cod_(0), mat_(0, 0, FieldSpec::Q()) {}
  Mor(int dom, int cod, Matrix mat);

  static Mor identity(int n, const FieldSpec& field);
  static Mor zero(int dom, int cod, const FieldSpec& field);

  int dom() const { return dom_; }
  int cod() const { return cod_; }
  const Matrix& mat() const { return mat_; }
  const FieldSpec& field() const { return mat_.field(); }

  bool operator==(const Mor& o) const {
    return dom_ == o.dom_ && cod_ == o.cod_ && mat_ == o.mat_;
  }
  bool operator!=(const Mor& o) const { return !(*this == o); }

  std::string key() const { return mat_.key(); }

private:
  int dom_, cod_;
  Matrix mat_;
};

/// g after f. Throws DimensionMismatch when f.cod != g.dom.
Mor compose(const Mor& g, const Mor& f);

template <typename... Ms>
Mor compose(const Mor& g, const Mor& f, const Ms&... rest) {
  return compose(compose(g, f), rest...);
}

/// Tensor product; basis of X (x) Y is ordered left-major, e_i (x) e_j at
/// index i * dim(Y) + j.
Mor tensor(const Mor& f, const Mor& g);

template <typename... Ms>
Mor tensor(const Mor& f, const Mor& g, const Ms&... rest) {
  return tensor(tensor(f, g), rest...);
}

/// The symmetry c_{m,n}: e_i (x) e_j -> e_j (x) e_i.
Mor swap(int m, int n, const FieldSpec& field);

Mor mor_add(const Mor& f, const Mor& g);
Mor mor_sub(const Mor& f, const Mor& g);

/// Convolution f ^ g = mu . (f (x) g) . delta for maps from the coalgebra
/// carrying `delta` into the algebra carrying `mu`.
Mor convolve(const Mor& mu, const Mor& delta, const Mor& f, const Mor& g);

template <typename... Ms>
Mor convolve(const Mor& mu, const Mor& delta, const Mor& f, const Mor& g,
             const Ms&... rest) {
  return convolve(mu, delta, convolve(mu, delta, f, g), rest...);
}

} // namespace wha

#endif
