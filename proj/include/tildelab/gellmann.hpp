// gellmann.hpp
//
// Generalized Gell-Mann generator basis of su(d), plus the identity, with
// the normalization Tr(h_j h_k) = d delta_jk and a fixed single-index
// numbering. Also the SWAP-operator identities that make the basis useful:
// completeness, the trace identity (1/d) sum_k h_k A h_k = Tr(A) 1, and the
// transpose identity (1/d) sum_k h_k^T A h_k = A^T.

#pragma once

#include "tildelab/core.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>

namespace tildelab {

/// The d^2 generator matrices for one local dimension.
///
/// x(k,l) = sqrt(d/2) (|k><l| + |l><k|)
/// y(k,l) = sqrt(d/2) (-i |k><l| + i |l><k|)
/// z(l)   = sqrt(d/(l(l+1))) (-l |l><l| + sum_{j<l} |j><j|)
///
/// for 0 <= k < l < d, numbered h_0 = identity, h_{l^2+2k} = x(k,l),
/// h_{l^2+2k+1} = y(k,l), h_{l^2+2l} = z(l). For d = 2 this reproduces the
/// Pauli matrices at indices 1..3.
class GellMannBasis {
 public:
  explicit GellMannBasis(int d) : d_(d) {
    if (d < 2) throw BadDimension("GellMannBasis: dimension must be >= 2");
    if (d > 64) throw BadDimension("GellMannBasis: dimension capped at 64");
    h_.assign(static_cast<std::size_t>(d) * d, Matrix());
    h_[0] = Matrix::Identity(d, d);
    const double c = std::sqrt(d / 2.0);
    for (int l = 1; l < d; ++l) {
      for (int k = 0; k < l; ++k) {
        Matrix x = Matrix::Zero(d, d);
        x(k, l) = c;
        x(l, k) = c;
        h_[static_cast<std::size_t>(index_x(k, l))] = std::move(x);
        Matrix y = Matrix::Zero(d, d);
        y(k, l) = Complex(0.0, -c);
        y(l, k) = Complex(0.0, c);
        h_[static_cast<std::size_t>(index_y(k, l))] = std::move(y);
      }
      Matrix z = Matrix::Zero(d, d);
      const double cz = std::sqrt(static_cast<double>(d) / (l * (l + 1.0)));
      for (int j = 0; j < l; ++j) z(j, j) = cz;
      z(l, l) = -l * cz;
      h_[static_cast<std::size_t>(index_z(l))] = std::move(z);
    }
  }

  int d() const { return d_; }
  int size() const { return d_ * d_; }

  const Matrix& h(int j) const { return h_.at(static_cast<std::size_t>(j)); }
  const Matrix& x(int k, int l) const { return h(index_x(k, l)); }
  const Matrix& y(int k, int l) const { return h(index_y(k, l)); }
  const Matrix& z(int l) const { return h(index_z(l)); }

  static int index_x(int k, int l) { return l * l + 2 * k; }
  static int index_y(int k, int l) { return l * l + 2 * k + 1; }
  static int index_z(int l) { return l * l + 2 * l; }

  /// True for the antisymmetric generators, which flip sign on transpose.
  bool is_y_index(int j) const {
    if (j == 0) return false;
    int l = static_cast<int>(std::sqrt(static_cast<double>(j)));
    while ((l + 1) * (l + 1) <= j) ++l;
    while (l * l > j) --l;
    int rem = j - l * l;
    return rem < 2 * l && rem % 2 == 1;
  }

  /// Shared immutable basis per dimension; built once, cached.
  static const GellMannBasis& get(int d) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<GellMannBasis>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(d);
    if (it == cache.end())
      it = cache.emplace(d, std::make_unique<GellMannBasis>(d)).first;
    return *it->second;
  }

 private:
  int d_;
  std::vector<Matrix> h_;
};

/// SWAP = sum_{jk} |jk><kj| on C^d (x) C^d; equals the generator
/// completeness sum (1/d) sum_j h_j (x) h_j.
inline Matrix swap_operator(int d) {
  if (d < 2) throw BadDimension("swap_operator: dimension must be >= 2");
  Matrix s = Matrix::Zero(static_cast<long>(d) * d, static_cast<long>(d) * d);
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k) s(j * d + k, k * d + j) = 1.0;
  return s;
}

/// |Phi+> = (1/sqrt d) sum_j |jj>; d |Phi+><Phi+| is the partial transpose
/// of SWAP on the first factor.
inline PureState maximally_entangled(int d) {
  if (d < 2) throw BadDimension("maximally_entangled: dimension must be >= 2");
  Vector amp = Vector::Zero(static_cast<long>(d) * d);
  const double c = 1.0 / std::sqrt(static_cast<double>(d));
  for (int j = 0; j < d; ++j) amp(j * d + j) = c;
  return PureState(HilbertDims({d, d}), std::move(amp));
}

/// (1/d) sum_k h_k A h_k; equals Tr(A) * identity for every d x d A.
inline Matrix trace_identity(const Matrix& a, const GellMannBasis& basis) {
  const int d = basis.d();
  if (a.rows() != d || a.cols() != d)
    throw ShapeMismatch("trace_identity: matrix does not match basis dimension");
  Matrix out = Matrix::Zero(d, d);
  for (int j = 0; j < basis.size(); ++j) out += basis.h(j) * a * basis.h(j);
  return out / static_cast<double>(d);
}

/// (1/d) sum_k h_k^T A h_k; equals A^T for every d x d A.
inline Matrix transpose_identity(const Matrix& a, const GellMannBasis& basis) {
  const int d = basis.d();
  if (a.rows() != d || a.cols() != d)
    throw ShapeMismatch(
        "transpose_identity: matrix does not match basis dimension");
  Matrix out = Matrix::Zero(d, d);
  for (int j = 0; j < basis.size(); ++j)
    out += basis.h(j).transpose() * a * basis.h(j);
  return out / static_cast<double>(d);
}

/// Partial transpose on the first of two equal factors.
inline Matrix partial_transpose_first(const Matrix& m, int d) {
  Matrix out(m.rows(), m.cols());
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int c = 0; c < d; ++c)
        for (int e = 0; e < d; ++e)
          out(a * d + b, c * d + e) = m(c * d + b, a * d + e);
  return out;
}

}  // namespace tildelab
