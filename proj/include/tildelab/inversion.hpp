// inversion.hpp
//
// Universal state inversion rho -> rho~ for multipartite states, in four
// mutually redundant forms that are cross-validated in the test suite:
//
//   product:    apply Tr_X(.) (x) 1_X - 1 factor by factor,
//   subsets:    alternating sum over all reduced states,
//   generators: (2^N / d_tot) sum y_kl rho* y_kl over antisymmetric
//               Gell-Mann tensor products (the antilinear form),
//   bloch:      rescale Bloch components by (-1)^q (d-1)^(N-q)
//               (equal local dimensions only).
//
// The inverter is not trace preserving for local dimension > 2, so outputs
// carry normalized = false and are never rescaled: Tr rho~ = prod(d_k - 1)
// for unit-trace input.

#pragma once

#include "tildelab/core.hpp"
#include "tildelab/gellmann.hpp"

namespace tildelab {

namespace detail {

/// Partial trace on a raw matrix; empty keep mask yields the 1x1 full trace.
inline Matrix partial_trace_matrix(const HilbertDims& dims, const Matrix& m,
                                   SubsetMask keep) {
  SubsetIndexer kept(dims, keep);
  SubsetIndexer traced(dims, keep.complement(dims.parties()));
  Matrix out = Matrix::Zero(kept.sub_dim(), kept.sub_dim());
  for (long a = 0; a < kept.sub_dim(); ++a)
    for (long b = 0; b < kept.sub_dim(); ++b) {
      Complex s = 0.0;
      for (long t = 0; t < traced.sub_dim(); ++t)
        s += m(kept.offset(a) + traced.offset(t),
               kept.offset(b) + traced.offset(t));
      out(a, b) = s;
    }
  return out;
}

/// Odometer over one antisymmetric-generator pair (k < l) per party.
/// Calls f with the tensor product y_{k_1 l_1} (x) ... (x) y_{k_N l_N}.
template <typename F>
void for_each_y_tensor(const HilbertDims& dims, F&& f) {
  const int n = dims.parties();
  std::vector<std::vector<const Matrix*>> ys(static_cast<std::size_t>(n));
  for (int m = 0; m < n; ++m) {
    const auto& basis = GellMannBasis::get(dims.dim(m));
    for (int l = 1; l < dims.dim(m); ++l)
      for (int k = 0; k < l; ++k)
        ys[static_cast<std::size_t>(m)].push_back(&basis.y(k, l));
  }
  std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
  while (true) {
    Matrix y = *ys[0][idx[0]];
    for (int m = 1; m < n; ++m) y = kron(y, *ys[static_cast<std::size_t>(m)][idx[static_cast<std::size_t>(m)]]);
    f(y);
    int m = n - 1;
    while (m >= 0 && ++idx[static_cast<std::size_t>(m)] == ys[static_cast<std::size_t>(m)].size()) {
      idx[static_cast<std::size_t>(m)] = 0;
      --m;
    }
    if (m < 0) break;
  }
}

}  // namespace detail

/// Single-system inverter. Hermitian path: Tr(O) 1 - O. Non-Hermitian
/// (antilinear) path: Tr(O^dag) 1 - O^dag.
inline Matrix invert_single(const Matrix& op, bool hermitian) {
  if (op.rows() != op.cols())
    throw ShapeMismatch("invert_single: matrix is not square");
  if (hermitian)
    return op.trace() * Matrix::Identity(op.rows(), op.cols()) - op;
  Matrix dag = op.adjoint();
  return dag.trace() * Matrix::Identity(op.rows(), op.cols()) - dag;
}

/// Product form: compose the single-party maps Tr_X(.) (x) 1_X - 1 over all
/// parties.
inline DensityOperator invert_product(const DensityOperator& rho) {
  const HilbertDims& dims = rho.dims();
  const int n = dims.parties();
  Matrix cur = rho.mat();
  for (int x = 0; x < n; ++x) {
    SubsetMask others = SubsetMask(1u << x).complement(n);
    Matrix reduced = detail::partial_trace_matrix(dims, cur, others);
    cur = embed_on(dims, others, reduced) - cur;
  }
  return DensityOperator(dims, std::move(cur), /*normalized=*/false);
}

/// Subset form: sum over every subset A (empty through full) of
/// (-1)^|A| (Tr_Abar rho) (x) 1_Abar.
inline DensityOperator invert_subsets(const DensityOperator& rho) {
  const HilbertDims& dims = rho.dims();
  const int n = dims.parties();
  Matrix acc = Matrix::Zero(dims.total_dim(), dims.total_dim());
  for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
    SubsetMask a(bits);
    Matrix emb = embed_on(dims, a, detail::partial_trace_matrix(dims, rho.mat(), a));
    if (a.count() % 2 == 0)
      acc += emb;
    else
      acc -= emb;
  }
  return DensityOperator(dims, std::move(acc), /*normalized=*/false);
}

/// Antilinear generator form on an arbitrary operator:
/// (2^N / d_tot) sum_{k<l} y_kl O* y_kl. Terms are accumulated in a fixed
/// odometer order so results are bit-stable.
inline Matrix invert_general(const HilbertDims& dims, const Matrix& op) {
  if (op.rows() != dims.total_dim() || op.cols() != dims.total_dim())
    throw ShapeMismatch("invert_general: operator does not match dims");
  Matrix conj = op.conjugate();
  Matrix acc = Matrix::Zero(dims.total_dim(), dims.total_dim());
  detail::for_each_y_tensor(dims, [&](const Matrix& y) { acc += y * conj * y; });
  const double scale =
      std::pow(2.0, dims.parties()) / static_cast<double>(dims.total_dim());
  return scale * acc;
}

/// Generator form of the inverter on a (Hermitian) state.
inline DensityOperator invert_generators(const DensityOperator& rho) {
  return DensityOperator(rho.dims(), invert_general(rho.dims(), rho.mat()),
                         /*normalized=*/false);
}

// ---------------------------------------------------------------------------
// Bloch representation

/// Coefficients r_{j_1...j_N} = Tr(rho h_{j_1} (x) ... (x) h_{j_N}) of the
/// expansion rho = (1/d_tot) sum r_j h_{j_1} (x) ... (x) h_{j_N}, stored by
/// flat multi-index with party 0 most significant (digit sizes d_k^2).
/// Coefficients exist for any dimension profile; the grouping by number of
/// nontrivial generators requires equal local dimensions.
class BlochDecomposition {
 public:
  BlochDecomposition(HilbertDims dims, std::vector<Complex> coeffs)
      : dims_(std::move(dims)), coeffs_(std::move(coeffs)) {
    long expected = 1;
    for (int k = 0; k < dims_.parties(); ++k)
      expected *= static_cast<long>(dims_.dim(k)) * dims_.dim(k);
    if (static_cast<long>(coeffs_.size()) != expected)
      throw ShapeMismatch("BlochDecomposition: wrong coefficient count");
  }

  const HilbertDims& dims() const { return dims_; }
  const std::vector<Complex>& coefficients() const { return coeffs_; }

  Complex coefficient(const std::vector<int>& multi_index) const {
    return coeffs_[static_cast<std::size_t>(flat_index(multi_index))];
  }

  long flat_index(const std::vector<int>& multi_index) const {
    if (static_cast<int>(multi_index.size()) != dims_.parties())
      throw ShapeMismatch("BlochDecomposition: wrong multi-index length");
    long idx = 0;
    for (int k = 0; k < dims_.parties(); ++k) {
      const int span = dims_.dim(k) * dims_.dim(k);
      if (multi_index[static_cast<std::size_t>(k)] < 0 ||
          multi_index[static_cast<std::size_t>(k)] >= span)
        throw ShapeMismatch("BlochDecomposition: generator index out of range");
      idx = idx * span + multi_index[static_cast<std::size_t>(k)];
    }
    return idx;
  }

  /// Number of nontrivial (nonidentity) generators in the flat multi-index.
  int nontrivial_count(long flat) const {
    int q = 0;
    for (int k = dims_.parties() - 1; k >= 0; --k) {
      const int span = dims_.dim(k) * dims_.dim(k);
      if (flat % span != 0) ++q;
      flat /= span;
    }
    return q;
  }

  /// P_q: the sum of all expansion terms with exactly q nontrivial
  /// generators (without the global 1/d_tot). Equal local dimensions only.
  Matrix component(int q) const {
    if (!dims_.equal_dims())
      throw UnequalDims("BlochDecomposition: P_q grouping needs equal dims");
    std::vector<Complex> filtered(coeffs_.size(), Complex(0.0, 0.0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (nontrivial_count(static_cast<long>(i)) == q) filtered[i] = coeffs_[i];
    return reconstruct_raw(filtered);
  }

  /// rho = (1/d_tot) sum_j r_j G_j.
  Matrix reconstruct() const {
    return reconstruct_raw(coeffs_) / static_cast<double>(dims_.total_dim());
  }

  Matrix reconstruct_raw(const std::vector<Complex>& coeffs) const {
    // Build from the least significant party upward: scalars -> matrices on
    // the last party -> ... -> the full operator.
    std::vector<Matrix> cur(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      cur[i] = Matrix::Constant(1, 1, coeffs[i]);
    }
    for (int k = dims_.parties() - 1; k >= 0; --k) {
      const auto& basis = GellMannBasis::get(dims_.dim(k));
      const int span = dims_.dim(k) * dims_.dim(k);
      std::vector<Matrix> next(cur.size() / static_cast<std::size_t>(span));
      for (std::size_t g = 0; g < next.size(); ++g) {
        Matrix acc;
        for (int j = 0; j < span; ++j) {
          Matrix term = kron(basis.h(j), cur[g * static_cast<std::size_t>(span) +
                                              static_cast<std::size_t>(j)]);
          if (j == 0)
            acc = std::move(term);
          else
            acc += term;
        }
        next[g] = std::move(acc);
      }
      cur = std::move(next);
    }
    return cur[0];
  }

 private:
  HilbertDims dims_;
  std::vector<Complex> coeffs_;
};

/// Expand a state in the generator basis. Works for any dimension profile;
/// only the P_q grouping of the result is restricted to equal dimensions.
inline BlochDecomposition bloch_decompose(const DensityOperator& rho) {
  const HilbertDims& dims = rho.dims();
  const int n = dims.parties();
  // Contract party by party: level k holds one matrix on parties k..N-1 for
  // every generator prefix (j_0 .. j_{k-1}).
  std::vector<Matrix> cur = {rho.mat()};
  long rest = dims.total_dim();
  for (int k = 0; k < n; ++k) {
    const int d = dims.dim(k);
    const int span = d * d;
    rest /= d;
    const auto& basis = GellMannBasis::get(d);
    std::vector<Matrix> next;
    next.reserve(cur.size() * static_cast<std::size_t>(span));
    for (const Matrix& m : cur)
      for (int j = 0; j < span; ++j) {
        Matrix out = Matrix::Zero(rest, rest);
        for (int p = 0; p < d; ++p)
          for (int q = 0; q < d; ++q) {
            Complex w = basis.h(j)(q, p);
            if (w != Complex(0.0, 0.0))
              out += w * m.block(p * rest, q * rest, rest, rest);
          }
        next.push_back(std::move(out));
      }
    cur = std::move(next);
  }
  std::vector<Complex> coeffs(cur.size());
  for (std::size_t i = 0; i < cur.size(); ++i) coeffs[i] = cur[i](0, 0);
  return BlochDecomposition(dims, std::move(coeffs));
}

/// Bloch form of the inverter (equal local dimensions d): rescale each
/// coefficient with q nontrivial generators by (-1)^q (d-1)^(N-q).
inline DensityOperator invert_bloch(const BlochDecomposition& b) {
  const HilbertDims& dims = b.dims();
  if (!dims.equal_dims())
    throw UnequalDims("invert_bloch: equal local dimensions required");
  const int d = dims.dim(0);
  const int n = dims.parties();
  std::vector<double> weight(static_cast<std::size_t>(n) + 1);
  for (int q = 0; q <= n; ++q)
    weight[static_cast<std::size_t>(q)] =
        (q % 2 == 0 ? 1.0 : -1.0) * std::pow(d - 1.0, n - q);
  std::vector<Complex> scaled(b.coefficients().size());
  for (std::size_t i = 0; i < scaled.size(); ++i)
    scaled[i] = b.coefficients()[i] *
                weight[static_cast<std::size_t>(b.nontrivial_count(static_cast<long>(i)))];
  Matrix out = b.reconstruct_raw(scaled) / static_cast<double>(dims.total_dim());
  return DensityOperator(dims, std::move(out), /*normalized=*/false);
}

inline DensityOperator invert_bloch(const DensityOperator& rho) {
  return invert_bloch(bloch_decompose(rho));
}

// ---------------------------------------------------------------------------

/// Tr(rho rho~) >= 0; the raw trace must be real up to 1e-12 for Hermitian
/// input.
inline double tr_rho_rhotilde(const DensityOperator& rho) {
  DensityOperator tilde = invert_product(rho);
  Complex raw = (rho.mat() * tilde.mat()).trace();
  if (std::abs(raw.imag()) >= 1e-12)
    throw Error("tr_rho_rhotilde: trace has a nonreal part; input not Hermitian?");
  return raw.real();
}

}  // namespace tildelab
