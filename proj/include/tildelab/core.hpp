// core.hpp
//
// Foundations for multipartite quantum states in finite dimensions:
// dimension bookkeeping, pure states and density operators as dense
// complex Eigen types, subset (bipartition) masks, partial traces,
// linear entropies, and seeded random-state generation.
//
// Index convention: party 0 is the most-significant tensor digit, i.e.
// flat index = sum_k j_k * prod_{m>k} d_m. All functions here are pure;
// values are immutable after construction and safe to share across
// threads. RNG state is explicit per call.

#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <bit>
#include <complex>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace tildelab {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;

// ---------------------------------------------------------------------------
// Errors

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BadDimension : Error {
  using Error::Error;
};
struct ShapeMismatch : Error {
  using Error::Error;
};
struct EmptySubset : Error {
  using Error::Error;
};
struct TooManyParties : Error {
  using Error::Error;
};
struct UnequalDims : Error {
  using Error::Error;
};
struct PureStateRequired : Error {
  using Error::Error;
};
struct NonHermitian : Error {
  using Error::Error;
};

// ---------------------------------------------------------------------------
// Tolerances

inline constexpr long kMaxTotalDim = 4096;
inline constexpr int kMaxParties = 16;

/// Default absolute tolerance for equality checks: 1e-10 up to total
/// dimension 256, 1e-9 above (subset sums accumulate over up to 2^N terms).
inline double default_tol(long total_dim) {
  return total_dim <= 256 ? 1e-10 : 1e-9;
}

// ---------------------------------------------------------------------------
// HilbertDims

/// Ordered list of local dimensions d_0..d_{N-1}, each >= 2.
class HilbertDims {
 public:
  explicit HilbertDims(std::vector<int> dims) : dims_(std::move(dims)) {
    if (dims_.empty()) throw BadDimension("HilbertDims: need at least one party");
    total_ = 1;
    for (int d : dims_) {
      if (d < 2) throw BadDimension("HilbertDims: local dimension must be >= 2");
      total_ *= d;
      if (total_ > kMaxTotalDim)
        throw BadDimension("HilbertDims: total dimension exceeds cap of " +
                           std::to_string(kMaxTotalDim));
    }
  }
  HilbertDims(std::initializer_list<int> dims)
      : HilbertDims(std::vector<int>(dims)) {}

  int parties() const { return static_cast<int>(dims_.size()); }
  int dim(int k) const { return dims_.at(static_cast<std::size_t>(k)); }
  long total_dim() const { return total_; }
  const std::vector<int>& dims() const { return dims_; }

  bool equal_dims() const {
    return std::all_of(dims_.begin(), dims_.end(),
                       [&](int d) { return d == dims_.front(); });
  }

  /// Stride of party k: product of dimensions of all later parties.
  long stride(int k) const {
    long s = 1;
    for (int m = k + 1; m < parties(); ++m) s *= dims_[static_cast<std::size_t>(m)];
    return s;
  }

  bool operator==(const HilbertDims& o) const { return dims_ == o.dims_; }

 private:
  std::vector<int> dims_;
  long total_ = 1;
};

// ---------------------------------------------------------------------------
// SubsetMask

/// Bitmask naming a subset A of the parties; bit k set <=> party k in A.
struct SubsetMask {
  std::uint32_t bits = 0;

  SubsetMask() = default;
  explicit SubsetMask(std::uint32_t b) : bits(b) {}

  bool empty() const { return bits == 0; }
  bool contains(int party) const { return (bits >> party) & 1u; }
  int count() const { return std::popcount(bits); }
  SubsetMask complement(int n_parties) const {
    return SubsetMask(((1u << n_parties) - 1u) ^ bits);
  }
  bool is_full(int n_parties) const { return bits == (1u << n_parties) - 1u; }
  bool is_proper(int n_parties) const { return !empty() && !is_full(n_parties); }
  /// True when this mask is a subset of `other`.
  bool subset_of(SubsetMask other) const { return (bits & ~other.bits) == 0; }
  bool intersects(SubsetMask other) const { return (bits & other.bits) != 0; }

  bool operator==(const SubsetMask&) const = default;
};

/// All 2^N - 1 nonempty subset masks in increasing integer order.
inline std::vector<SubsetMask> subsets(int n_parties) {
  if (n_parties < 1 || n_parties > kMaxParties)
    throw TooManyParties("subsets: party count must lie in [1, " +
                         std::to_string(kMaxParties) + "]");
  std::vector<SubsetMask> out;
  out.reserve((1u << n_parties) - 1u);
  for (std::uint32_t m = 1; m < (1u << n_parties); ++m) out.emplace_back(m);
  return out;
}

// ---------------------------------------------------------------------------
// States

/// Pure state: complex amplitude vector over the product space.
class PureState {
 public:
  PureState(HilbertDims dims, Vector amp)
      : dims_(std::move(dims)), amp_(std::move(amp)) {
    if (amp_.size() != dims_.total_dim())
      throw ShapeMismatch("PureState: amplitude length " +
                          std::to_string(amp_.size()) + " != total dimension " +
                          std::to_string(dims_.total_dim()));
  }

  const HilbertDims& dims() const { return dims_; }
  const Vector& amp() const { return amp_; }
  long total_dim() const { return dims_.total_dim(); }

  /// Euclidean norm; branch states after a Kraus operator are subnormalized.
  double norm() const { return amp_.norm(); }
  bool is_normalized(double tol = 1e-8) const {
    return std::abs(norm() - 1.0) <= tol;
  }

  PureState normalized() const {
    double n = norm();
    if (n == 0.0) throw Error("PureState: cannot normalize the zero vector");
    return PureState(dims_, amp_ / n);
  }

  /// Tensor product; party order of `this` precedes `other`.
  PureState tensor(const PureState& other) const {
    std::vector<int> d = dims_.dims();
    d.insert(d.end(), other.dims_.dims().begin(), other.dims_.dims().end());
    Vector out(amp_.size() * other.amp_.size());
    for (long i = 0; i < amp_.size(); ++i)
      out.segment(i * other.amp_.size(), other.amp_.size()) =
          amp_(i) * other.amp_;
    return PureState(HilbertDims(std::move(d)), std::move(out));
  }

 private:
  HilbertDims dims_;
  Vector amp_;
};

/// Density operator: dense complex matrix over the product space. Operators
/// with `normalized() == false` (e.g. inverter outputs) skip the unit-trace
/// convention but keep the same shape contract.
class DensityOperator {
 public:
  DensityOperator(HilbertDims dims, Matrix mat, bool normalized = true)
      : dims_(std::move(dims)), mat_(std::move(mat)), normalized_(normalized) {
    if (mat_.rows() != mat_.cols())
      throw ShapeMismatch("DensityOperator: matrix is not square");
    if (mat_.rows() != dims_.total_dim())
      throw ShapeMismatch("DensityOperator: matrix size " +
                          std::to_string(mat_.rows()) + " != total dimension " +
                          std::to_string(dims_.total_dim()));
  }

  const HilbertDims& dims() const { return dims_; }
  const Matrix& mat() const { return mat_; }
  long total_dim() const { return dims_.total_dim(); }
  bool normalized() const { return normalized_; }

  double trace() const { return mat_.trace().real(); }

  bool is_hermitian(double tol = 1e-10) const {
    return (mat_ - mat_.adjoint()).cwiseAbs().maxCoeff() <= tol;
  }

  double min_eigenvalue() const {
    Eigen::SelfAdjointEigenSolver<Matrix> es(mat_, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
  }

  /// Full physical-state validation: Hermitian, PSD, unit trace (when the
  /// normalized flag is set). Costs an eigendecomposition; intended for
  /// input boundaries, not inner loops.
  void validate_physical(double tol = 1e-8) const {
    if (!is_hermitian(tol)) throw NonHermitian("density operator is not Hermitian");
    if (min_eigenvalue() < -tol)
      throw Error("density operator is not positive semidefinite");
    if (normalized_ && std::abs(trace() - 1.0) > tol)
      throw Error("density operator trace differs from 1");
  }

 private:
  HilbertDims dims_;
  Matrix mat_;
  bool normalized_;
};

/// Projector |psi><psi| (no normalization applied).
inline DensityOperator projector(const PureState& psi) {
  return DensityOperator(psi.dims(), psi.amp() * psi.amp().adjoint(),
                         psi.is_normalized(1e-6));
}

// ---------------------------------------------------------------------------
// Index machinery

/// Flat offsets of every multi-index restricted to the parties in `mask`.
/// offsets()[j] is the flat contribution of the j-th sub-index, so a full
/// flat index decomposes as offsets_A[a] + offsets_Abar[b].
class SubsetIndexer {
 public:
  SubsetIndexer(const HilbertDims& dims, SubsetMask mask) {
    sub_dim_ = 1;
    std::vector<int> parties;
    for (int k = 0; k < dims.parties(); ++k)
      if (mask.contains(k)) {
        parties.push_back(k);
        sub_dim_ *= dims.dim(k);
        sub_dims_.push_back(dims.dim(k));
      }
    offsets_.assign(static_cast<std::size_t>(sub_dim_), 0);
    for (long idx = 0; idx < sub_dim_; ++idx) {
      long rem = idx, off = 0;
      for (std::size_t p = 0; p < parties.size(); ++p) {
        long s = 1;
        for (std::size_t q = p + 1; q < parties.size(); ++q)
          s *= sub_dims_[q];
        long digit = (rem / s) % sub_dims_[p];
        rem %= s;
        off += digit * dims.stride(parties[p]);
      }
      offsets_[static_cast<std::size_t>(idx)] = off;
    }
  }

  long sub_dim() const { return sub_dim_; }
  const std::vector<int>& sub_dims() const { return sub_dims_; }
  long offset(long sub_index) const {
    return offsets_[static_cast<std::size_t>(sub_index)];
  }

 private:
  long sub_dim_ = 1;
  std::vector<int> sub_dims_;
  std::vector<long> offsets_;
};

// ---------------------------------------------------------------------------
// Tensor algebra

inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (long i = 0; i < a.rows(); ++i)
    for (long j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

/// Partial trace keeping the parties in `keep` (order preserved).
inline DensityOperator partial_trace(const DensityOperator& rho,
                                     SubsetMask keep) {
  const HilbertDims& dims = rho.dims();
  const int n = dims.parties();
  if (keep.empty()) throw EmptySubset("partial_trace: empty keep subset");
  if ((keep.bits >> n) != 0)
    throw ShapeMismatch("partial_trace: mask names parties beyond the state");
  if (keep.is_full(n)) return rho;  // exact, no arithmetic

  SubsetIndexer kept(dims, keep);
  SubsetIndexer traced(dims, keep.complement(n));
  Matrix out = Matrix::Zero(kept.sub_dim(), kept.sub_dim());
  const Matrix& m = rho.mat();
  for (long a = 0; a < kept.sub_dim(); ++a)
    for (long b = 0; b < kept.sub_dim(); ++b) {
      Complex s = 0.0;
      for (long t = 0; t < traced.sub_dim(); ++t)
        s += m(kept.offset(a) + traced.offset(t),
               kept.offset(b) + traced.offset(t));
      out(a, b) = s;
    }
  return DensityOperator(HilbertDims(kept.sub_dims()), std::move(out),
                         rho.normalized());
}

/// Embed an operator acting on the parties in `mask` (in their original
/// relative order) into the full space, identity on the complement.
inline Matrix embed_on(const HilbertDims& dims, SubsetMask mask,
                       const Matrix& op) {
  const int n = dims.parties();
  SubsetIndexer sub(dims, mask);
  SubsetIndexer rest(dims, mask.complement(n));
  if (op.rows() != sub.sub_dim() || op.cols() != sub.sub_dim())
    throw ShapeMismatch("embed_on: operator size does not match subset dims");
  Matrix out = Matrix::Zero(dims.total_dim(), dims.total_dim());
  for (long a = 0; a < sub.sub_dim(); ++a)
    for (long b = 0; b < sub.sub_dim(); ++b) {
      if (op(a, b) == Complex(0.0, 0.0)) continue;
      for (long r = 0; r < rest.sub_dim(); ++r)
        out(sub.offset(a) + rest.offset(r), sub.offset(b) + rest.offset(r)) =
            op(a, b);
    }
  return out;
}

// ---------------------------------------------------------------------------
// Scalar diagnostics

inline double purity(const DensityOperator& rho) {
  return (rho.mat() * rho.mat()).trace().real();
}

/// Linear entropy tau = 2 (1 - Tr rho^2).
inline double linear_entropy(const DensityOperator& rho) {
  return 2.0 * (1.0 - purity(rho));
}

/// Linear entropy of the marginal on `subset`.
inline double linear_entropy(const DensityOperator& rho, SubsetMask subset) {
  return linear_entropy(partial_trace(rho, subset));
}

// ---------------------------------------------------------------------------
// Random generation (explicit seeds; reproducible bit-for-bit)

using Rng = std::mt19937_64;

inline Matrix random_complex_matrix(long rows, long cols, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix m(rows, cols);
  for (long i = 0; i < rows; ++i)
    for (long j = 0; j < cols; ++j) {
      double re = gauss(rng), im = gauss(rng);
      m(i, j) = Complex(re, im);
    }
  return m;
}

inline Matrix random_hermitian(long dim, Rng& rng) {
  Matrix a = random_complex_matrix(dim, dim, rng);
  return (a + a.adjoint()) / 2.0;
}

/// Haar-distributed unitary via QR of a Gaussian matrix with the standard
/// phase fix on the diagonal of R.
inline Matrix random_unitary(long dim, Rng& rng) {
  Matrix a = random_complex_matrix(dim, dim, rng);
  Eigen::HouseholderQR<Matrix> qr(a);
  Matrix q = qr.householderQ();
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (long j = 0; j < dim; ++j) {
    Complex d = r(j, j);
    q.col(j) *= (d == Complex(0.0, 0.0)) ? 1.0 : d / std::abs(d);
  }
  return q;
}

/// Haar-random pure state: independent standard complex Gaussian
/// amplitudes, then normalized.
inline PureState random_pure(const HilbertDims& dims, std::uint64_t seed) {
  Rng rng(seed);
  Vector amp = random_complex_matrix(dims.total_dim(), 1, rng).col(0);
  amp /= amp.norm();
  return PureState(dims, std::move(amp));
}

/// Random mixed state of the given rank: partial trace of a Haar-random
/// purification, i.e. rho = M M^dag with M a normalized Gaussian
/// total_dim x rank matrix. PSD with unit trace by construction.
inline DensityOperator random_mixed(const HilbertDims& dims, int rank,
                                    std::uint64_t seed) {
  if (rank < 1) throw BadDimension("random_mixed: rank must be >= 1");
  Rng rng(seed);
  Matrix m = random_complex_matrix(dims.total_dim(), rank, rng);
  m /= m.norm();
  return DensityOperator(dims, m * m.adjoint());
}

// ---------------------------------------------------------------------------
// Simple deterministic parallel helper

/// Run f(i) for i in [0, count) across up to `workers` threads. Each index
/// is processed exactly once; callers write to disjoint slots so results do
/// not depend on the worker count.
inline void parallel_for(long count, int workers,
                         const std::function<void(long)>& f) {
  if (workers <= 1 || count <= 1) {
    for (long i = 0; i < count; ++i) f(i);
    return;
  }
  int nthreads = static_cast<int>(std::min<long>(workers, count));
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(nthreads));
  for (int w = 0; w < nthreads; ++w)
    pool.emplace_back([&, w]() {
      for (long i = w; i < count; i += nthreads) f(i);
    });
  for (auto& t : pool) t.join();
}

}  // namespace tildelab
