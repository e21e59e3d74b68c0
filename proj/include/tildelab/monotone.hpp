// monotone.hpp
//
// Machinery for testing whether the distributed concurrence (and its
// square) can increase under stochastic local operations: two-outcome
// diagonal Kraus channels on the first party, the Schmidt decomposition
// against the rest, the F tensor built from the antilinear inverter, the
// weight-matrix inequality margin, and a seeded randomized search for
// violating parameter sets. Includes the explicit (4,2,2,2) counterexample
// state with its projective channel.

#pragma once

#include "tildelab/core.hpp"
#include "tildelab/correlation.hpp"
#include "tildelab/inversion.hpp"

#include <cmath>
#include <limits>
#include <optional>

namespace tildelab {

/// Deficits below this count as genuine monotonicity violations; anything
/// closer to zero is indistinguishable from roundoff.
inline constexpr double kViolationThreshold = 1e-8;

/// Branch probabilities below this are treated as the zero-probability
/// limit (the branch contributes nothing).
inline constexpr double kBranchCutoff = 1e-14;

// ---------------------------------------------------------------------------
// Two-outcome channel

/// A two-outcome local channel on the first party, diagonal in a chosen
/// orthonormal basis {e_j}: A_1 = diag(sqrt(D_j)), A_2 = diag(sqrt(1-D_j)).
/// Completeness A_1^dag A_1 + A_2^dag A_2 = 1 holds exactly since the
/// diagonal weights are stored as D_j and 1 - D_j. When `basis` is absent
/// the channel acts in the Schmidt basis of party 1 of the state it is
/// applied to.
struct TwoOutcomeChannel {
  int d1 = 0;
  RealVector diag;               // D_j in [0, 1]
  std::optional<Matrix> basis;   // columns e_j; defaults to the Schmidt basis

  TwoOutcomeChannel(int d1_, RealVector d, std::optional<Matrix> e = std::nullopt)
      : d1(d1_), diag(std::move(d)), basis(std::move(e)) {
    if (diag.size() != d1)
      throw ShapeMismatch("TwoOutcomeChannel: diagonal length must equal d1");
    for (long j = 0; j < diag.size(); ++j)
      if (diag(j) < 0.0 || diag(j) > 1.0)
        throw Error("TwoOutcomeChannel: diagonal entries must lie in [0, 1]");
    if (basis && (basis->rows() != d1 || basis->cols() != d1))
      throw ShapeMismatch("TwoOutcomeChannel: basis must be d1 x d1");
  }

  /// Kraus weight of outcome 1/2 on the j-th basis vector.
  double weight(int outcome, int j) const {
    return outcome == 0 ? diag(j) : 1.0 - diag(j);
  }
};

// ---------------------------------------------------------------------------
// Schmidt decomposition against the first party

struct SchmidtDecomposition {
  RealVector lambdas;         // descending, padded with zeros to d1
  Matrix e_basis;             // d1 x d1 unitary; columns are |e_j>
  std::vector<Vector> fbar;   // orthonormal co-vectors on parties 2..N
  HilbertDims rest_dims;

  SchmidtDecomposition(RealVector l, Matrix e, std::vector<Vector> f,
                       HilbertDims rd)
      : lambdas(std::move(l)), e_basis(std::move(e)), fbar(std::move(f)),
        rest_dims(std::move(rd)) {}
};

/// The amplitude vector reshaped to a d1 x (rest) matrix (party 0 indexes
/// rows; the row layout follows the flat index convention).
inline Matrix first_party_matrix(const PureState& psi) {
  const long d1 = psi.dims().dim(0);
  const long rest = psi.total_dim() / d1;
  Matrix m(d1, rest);
  for (long j = 0; j < d1; ++j)
    m.row(j) = psi.amp().segment(j * rest, rest).transpose();
  return m;
}

/// Local dimensions of parties 2..N.
inline HilbertDims rest_dims(const HilbertDims& dims) {
  if (dims.parties() < 2)
    throw ShapeMismatch("rest_dims: need at least two parties");
  return HilbertDims(std::vector<int>(dims.dims().begin() + 1, dims.dims().end()));
}

/// psi = sum_j sqrt(lambda_j) |e_j> |fbar_j> with descending lambda.
inline SchmidtDecomposition schmidt_first_party(const PureState& psi) {
  const int d1 = psi.dims().dim(0);
  const long rest = psi.total_dim() / d1;
  Matrix m = first_party_matrix(psi);
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeThinV);
  RealVector lambdas = RealVector::Zero(d1);
  std::vector<Vector> fbar(static_cast<std::size_t>(d1), Vector::Zero(rest));
  const long rank_max = svd.singularValues().size();
  for (long j = 0; j < rank_max && j < d1; ++j) {
    double s = svd.singularValues()(j);
    lambdas(j) = s * s;
    fbar[static_cast<std::size_t>(j)] = svd.matrixV().col(j).conjugate();
  }
  return SchmidtDecomposition(std::move(lambdas), svd.matrixU(),
                              std::move(fbar), rest_dims(psi.dims()));
}

// ---------------------------------------------------------------------------
// F tensor

/// F_{klmj} = <f_k| tilde(|f_l><f_m|) |f_j> over subnormalized vectors on
/// the last N-1 parties, with tilde the antilinear generator-form inverter.
/// Satisfies F_{klmj} = F_{lkjm} = -F_{lkmj}; the diagonal slice F_{kjjk}
/// is real and nonnegative.
class FTensor {
 public:
  FTensor(int r, std::vector<Complex> vals) : r_(r), vals_(std::move(vals)) {
    if (static_cast<long>(vals_.size()) != static_cast<long>(r) * r * r * r)
      throw ShapeMismatch("FTensor: wrong value count");
  }

  int rank() const { return r_; }

  Complex operator()(int k, int l, int m, int j) const {
    return vals_[static_cast<std::size_t>(((k * r_ + l) * r_ + m) * r_ + j)];
  }

  /// Real diagonal slice F_{kjjk}.
  double diag(int k, int j) const { return (*this)(k, j, j, k).real(); }

  double sum_diag() const {
    double s = 0.0;
    for (int k = 0; k < r_; ++k)
      for (int j = 0; j < r_; ++j) s += diag(k, j);
    return s;
  }

  /// sum_{jk} F_{jkkj} a_j a_k for a weight vector a.
  double sum_weighted(const RealVector& a) const {
    double s = 0.0;
    for (int j = 0; j < r_; ++j)
      for (int k = 0; k < r_; ++k) s += diag(j, k) * a(j) * a(k);
    return s;
  }

 private:
  int r_;
  std::vector<Complex> vals_;
};

/// Build the F tensor from subnormalized vectors with sum_j <f_j|f_j> = 1.
inline FTensor f_tensor(const std::vector<Vector>& f,
                        const HilbertDims& rest_dims) {
  const int r = static_cast<int>(f.size());
  if (r == 0) throw EmptySubset("f_tensor: no vectors given");
  double norm_sum = 0.0;
  for (const Vector& v : f) {
    if (v.size() != rest_dims.total_dim())
      throw ShapeMismatch("f_tensor: vector does not match rest dims");
    norm_sum += v.squaredNorm();
  }
  if (std::abs(norm_sum - 1.0) > 1e-6)
    throw Error("f_tensor: squared norms must sum to 1");
  // Cache tilde(|f_l><f_m|) for every pair.
  std::vector<Matrix> tilde(static_cast<std::size_t>(r) * r);
  for (int l = 0; l < r; ++l)
    for (int m = 0; m < r; ++m)
      tilde[static_cast<std::size_t>(l * r + m)] = invert_general(
          rest_dims, f[static_cast<std::size_t>(l)] *
                         f[static_cast<std::size_t>(m)].adjoint());
  std::vector<Complex> vals(static_cast<std::size_t>(r) * r * r * r);
  for (int k = 0; k < r; ++k)
    for (int l = 0; l < r; ++l)
      for (int m = 0; m < r; ++m)
        for (int j = 0; j < r; ++j)
          vals[static_cast<std::size_t>(((k * r + l) * r + m) * r + j)] =
              (f[static_cast<std::size_t>(k)].adjoint() *
               tilde[static_cast<std::size_t>(l * r + m)] *
               f[static_cast<std::size_t>(j)])(0, 0);
  return FTensor(r, std::move(vals));
}

// ---------------------------------------------------------------------------
// Monotone deficits

struct MonotoneVerdict {
  double lhs = 0.0;
  double rhs = 0.0;
  double deficit = 0.0;  // lhs - rhs; negative = the quantity increased
  bool violated = false;
  double p[2] = {0.0, 0.0};
  double branch_cd[2] = {0.0, 0.0};  // C_D of each normalized branch
  double f_route_lhs = 0.0;          // same quantities via the F/D route
  double f_route_rhs = 0.0;
};

namespace detail {

struct ChannelSplit {
  std::vector<Vector> f;           // subnormalized, f_j = <e_j| psi
  std::vector<PureState> branch;   // A_1 psi, A_2 psi (subnormalized)
  double p[2] = {0.0, 0.0};
};

inline ChannelSplit split_by_channel(const PureState& psi,
                                     const TwoOutcomeChannel& ch) {
  if (ch.d1 != psi.dims().dim(0))
    throw ShapeMismatch("monotone: channel dimension does not match party 1");
  Matrix e = ch.basis ? *ch.basis : schmidt_first_party(psi).e_basis;
  Matrix g = e.adjoint() * first_party_matrix(psi);  // row j = f_j
  ChannelSplit out;
  out.f.reserve(static_cast<std::size_t>(ch.d1));
  for (int j = 0; j < ch.d1; ++j) out.f.push_back(g.row(j).transpose());
  const long rest = psi.total_dim() / ch.d1;
  for (int outcome = 0; outcome < 2; ++outcome) {
    Matrix scaled = g;
    for (int j = 0; j < ch.d1; ++j) {
      double w = ch.weight(outcome, j);
      out.p[outcome] += w * g.row(j).squaredNorm();
      scaled.row(j) *= std::sqrt(w);
    }
    Matrix back = e * scaled;
    Vector amp(psi.total_dim());
    for (int j = 0; j < ch.d1; ++j)
      amp.segment(j * rest, rest) = back.row(j).transpose();
    out.branch.emplace_back(psi.dims(), std::move(amp));
  }
  return out;
}

inline void check_route_consistency(const MonotoneVerdict& v) {
  if (std::abs(v.lhs - v.f_route_lhs) >= 1e-9 ||
      std::abs(v.rhs - v.f_route_rhs) >= 1e-9)
    throw Error("monotone: direct and F-tensor routes disagree");
}

}  // namespace detail

/// Deficit of C_D under the channel: C_D(psi) - C_D(A_1 psi) - C_D(A_2 psi),
/// using the homogeneity C_D(a psi) = |a|^2 C_D(psi) for the subnormalized
/// branches. For even party count the same quantities are also evaluated
/// through the F/D form
/// sqrt(2 sum F) >= sqrt(2 sum F D D) + sqrt(2 sum F (1-D)(1-D))
/// and the two routes must agree. For odd party count C_D vanishes
/// identically, the condition is trivial, and the F/D form does not apply
/// (the diagonal F_{kjjk} slice is no longer tied to C_D once the rest
/// space has an even party count), so the F-route fields stay zero.
inline MonotoneVerdict monotone_deficit_cd(const PureState& psi,
                                           const TwoOutcomeChannel& ch) {
  detail::ChannelSplit sp = detail::split_by_channel(psi, ch);
  MonotoneVerdict v;
  v.lhs = distributed_concurrence_raw(psi);
  for (int i = 0; i < 2; ++i) {
    v.p[i] = sp.p[i];
    double raw = distributed_concurrence_raw(sp.branch[i]);
    v.branch_cd[i] = v.p[i] < kBranchCutoff ? 0.0 : raw / v.p[i];
    v.rhs += v.p[i] * v.branch_cd[i];
  }
  if (psi.dims().parties() % 2 == 0) {
    FTensor f = f_tensor(sp.f, rest_dims(psi.dims()));
    RealVector keep = ch.diag, drop = RealVector::Ones(ch.d1) - ch.diag;
    v.f_route_lhs = std::sqrt(std::max(0.0, 2.0 * f.sum_diag()));
    v.f_route_rhs = std::sqrt(std::max(0.0, 2.0 * f.sum_weighted(keep))) +
                    std::sqrt(std::max(0.0, 2.0 * f.sum_weighted(drop)));
    detail::check_route_consistency(v);
  }
  v.deficit = v.lhs - v.rhs;
  v.violated = v.deficit < -kViolationThreshold;
  return v;
}

/// Deficit of C_D^2: C_D^2(psi) - C_D^2(A_1 psi)/p_1 - C_D^2(A_2 psi)/p_2,
/// zero-probability branches contributing nothing. Route handling as in
/// monotone_deficit_cd.
inline MonotoneVerdict monotone_deficit_cd2(const PureState& psi,
                                            const TwoOutcomeChannel& ch) {
  detail::ChannelSplit sp = detail::split_by_channel(psi, ch);
  MonotoneVerdict v;
  double cd = distributed_concurrence_raw(psi);
  v.lhs = cd * cd;
  for (int i = 0; i < 2; ++i) {
    v.p[i] = sp.p[i];
    double raw = distributed_concurrence_raw(sp.branch[i]);
    v.branch_cd[i] = v.p[i] < kBranchCutoff ? 0.0 : raw / v.p[i];
    v.rhs += v.p[i] * v.branch_cd[i] * v.branch_cd[i];
  }
  if (psi.dims().parties() % 2 == 0) {
    FTensor f = f_tensor(sp.f, rest_dims(psi.dims()));
    RealVector keep = ch.diag, drop = RealVector::Ones(ch.d1) - ch.diag;
    v.f_route_lhs = 2.0 * f.sum_diag();
    v.f_route_rhs = 0.0;
    if (v.p[0] >= kBranchCutoff) v.f_route_rhs += 2.0 * f.sum_weighted(keep) / v.p[0];
    if (v.p[1] >= kBranchCutoff) v.f_route_rhs += 2.0 * f.sum_weighted(drop) / v.p[1];
    detail::check_route_consistency(v);
  }
  v.deficit = v.lhs - v.rhs;
  v.violated = v.deficit < -kViolationThreshold;
  return v;
}

// ---------------------------------------------------------------------------
// Weight-matrix margin

/// Margin of (sum_jk w_jk D_j)^2 >= sum_jk w_jk D_j D_k for a symmetric
/// nonnegative weight matrix with zero diagonal and total weight 1.
/// Negative margin = violation.
inline double mon3_check(const RealMatrix& w, const RealVector& d) {
  const long r = w.rows();
  if (w.cols() != r) throw ShapeMismatch("mon3_check: weight matrix not square");
  if (d.size() != r) throw ShapeMismatch("mon3_check: D length mismatch");
  if ((w - w.transpose()).cwiseAbs().maxCoeff() > 1e-12)
    throw Error("mon3_check: weight matrix must be symmetric");
  if (w.minCoeff() < -1e-15 || w.diagonal().cwiseAbs().maxCoeff() > 1e-12)
    throw Error("mon3_check: weights must be nonnegative with zero diagonal");
  if (std::abs(w.sum() - 1.0) > 1e-8)
    throw Error("mon3_check: weights must sum to 1");
  double lin = 0.0, quad = 0.0;
  for (long j = 0; j < r; ++j)
    for (long k = 0; k < r; ++k) {
      lin += w(j, k) * d(j);
      quad += w(j, k) * d(j) * d(k);
    }
  return lin * lin - quad;
}

// ---------------------------------------------------------------------------
// Counterexample search

enum class MonotoneTarget { cd, cd2 };

inline const char* to_string(MonotoneTarget t) {
  return t == MonotoneTarget::cd ? "cd" : "cd2";
}

struct SearchResult {
  double margin = std::numeric_limits<double>::infinity();
  long trial = -1;  // index of the candidate that produced the margin
  std::uint64_t fbar_seed = 0;
  RealVector lambda;
  RealVector diag;
  RealMatrix fbar;  // F-bar_{kj} of the selected environment vectors
  int workers = 1;
  std::uint64_t seed = 0;
  MonotoneTarget target = MonotoneTarget::cd;
  int d1 = 0;
  bool found() const { return margin < -kViolationThreshold; }
};

namespace detail {

/// Environment for the search: three qubits, the smallest odd-party space
/// whose inverter spectrum supplies up to eight orthonormal vectors.
inline HilbertDims search_environment() { return HilbertDims({2, 2, 2}); }

struct FbarSet {
  RealMatrix fbar;            // r x r, F-bar_{kj}
  std::vector<Vector> vecs;   // the selected orthonormal environment vectors
};

/// Draw a random environment state, invert its projector, and keep the
/// kernel vector plus d1 - 1 eigenvectors spread from the smallest nonzero
/// to the largest eigenvalue. Extremal spectra make extremal F entries.
inline FbarSet make_fbar(int d1, std::uint64_t seed) {
  HilbertDims env = search_environment();
  const long dim = env.total_dim();
  PureState psi1 = random_pure(env, seed);
  DensityOperator tilde = invert_product(projector(psi1));
  Eigen::SelfAdjointEigenSolver<Matrix> es(tilde.mat());
  FbarSet out;
  out.vecs.reserve(static_cast<std::size_t>(d1));
  out.vecs.push_back(es.eigenvectors().col(0));  // eigenvalue ~ 0: psi1 itself
  for (int i = 1; i < d1; ++i) {
    long idx = 1 + static_cast<long>(std::llround(
                       static_cast<double>(dim - 2) * (i - 1) /
                       std::max(1, d1 - 2)));
    out.vecs.push_back(es.eigenvectors().col(idx));
  }
  Matrix y = kron(GellMannBasis::get(2).y(0, 1),
                  kron(GellMannBasis::get(2).y(0, 1), GellMannBasis::get(2).y(0, 1)));
  out.fbar.resize(d1, d1);
  for (int k = 0; k < d1; ++k)
    for (int j = 0; j < d1; ++j)
      out.fbar(k, j) = std::norm(
          (out.vecs[static_cast<std::size_t>(k)].adjoint() * y *
           out.vecs[static_cast<std::size_t>(j)].conjugate())(0, 0));
  return out;
}

inline double search_margin(const RealMatrix& fbar, const RealVector& lambda,
                            const RealVector& d, MonotoneTarget target) {
  const long r = fbar.rows();
  double s0 = 0.0, s1 = 0.0, s2 = 0.0, p1 = 0.0;
  for (long j = 0; j < r; ++j) {
    p1 += lambda(j) * d(j);
    for (long k = 0; k < r; ++k) {
      double f = lambda(j) * lambda(k) * fbar(j, k);
      s0 += f;
      s1 += f * d(j) * d(k);
      s2 += f * (1.0 - d(j)) * (1.0 - d(k));
    }
  }
  if (target == MonotoneTarget::cd)
    return std::sqrt(std::max(0.0, 2.0 * s0)) -
           std::sqrt(std::max(0.0, 2.0 * s1)) -
           std::sqrt(std::max(0.0, 2.0 * s2));
  double p2 = 1.0 - p1;
  double rhs = 0.0;
  if (p1 >= kBranchCutoff) rhs += 2.0 * s1 / p1;
  if (p2 >= kBranchCutoff) rhs += 2.0 * s2 / p2;
  return 2.0 * s0 - rhs;
}

inline RealVector random_simplex(long n, Rng& rng) {
  std::exponential_distribution<double> expo(1.0);
  RealVector v(n);
  double s = 0.0;
  for (long i = 0; i < n; ++i) {
    v(i) = expo(rng);
    s += v(i);
  }
  return v / s;
}

}  // namespace detail

/// Randomized search for parameter sets violating the monotone condition:
/// per fresh F-bar block, uniform draws of Schmidt weights (flat on the
/// simplex) and channel diagonals, followed by coordinate-perturbation
/// refinement with step halving around the best candidate. Deterministic
/// for fixed (seed, workers); workers split the trial budget into
/// independently seeded streams and the global best is reduced by
/// (margin, trial index).
inline SearchResult search_violation(int d1, MonotoneTarget target, long trials,
                                     std::uint64_t seed, int workers = 1) {
  if (d1 < 3) throw BadDimension("search_violation: d1 must be >= 3");
  if (d1 > detail::search_environment().total_dim())
    throw BadDimension("search_violation: d1 exceeds the environment dimension");
  if (workers < 1) workers = 1;

  constexpr long kRefresh = 2000;   // trials per F-bar draw
  constexpr double kExplore = 0.7;  // fraction spent on global random draws

  std::vector<SearchResult> best(static_cast<std::size_t>(workers));
  parallel_for(workers, workers, [&](long w) {
    SearchResult& b = best[static_cast<std::size_t>(w)];
    b.margin = std::numeric_limits<double>::infinity();
    Rng rng(seed * 0x9e3779b97f4a7c15ull + 0x2545f4914f6cdd1dull * (std::uint64_t)w);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    long budget = trials / workers + (w < trials % workers ? 1 : 0);
    long explore = static_cast<long>(std::floor(budget * kExplore));
    detail::FbarSet fb;
    std::uint64_t fb_seed = 0;
    for (long t = 0; t < explore; ++t) {
      if (t % kRefresh == 0) {
        fb_seed = seed + 1000003ull * (std::uint64_t)w + (std::uint64_t)(t / kRefresh);
        fb = detail::make_fbar(d1, fb_seed);
      }
      RealVector lambda = detail::random_simplex(d1, rng);
      RealVector d(d1);
      for (int i = 0; i < d1; ++i) d(i) = uni(rng);
      double m = detail::search_margin(fb.fbar, lambda, d, target);
      if (m < b.margin) {
        b.margin = m;
        b.trial = t;
        b.fbar_seed = fb_seed;
        b.lambda = lambda;
        b.diag = d;
        b.fbar = fb.fbar;
      }
    }
    if (b.trial < 0) return;
    // Local refinement of the best candidate: perturb one coordinate at a
    // time, halving the step every block of stalled proposals.
    detail::FbarSet fb_best = detail::make_fbar(d1, b.fbar_seed);
    double step = 0.25;
    long refine = budget - explore;
    for (long t = 0; t < refine; ++t) {
      RealVector lambda = b.lambda, d = b.diag;
      int coord = static_cast<int>(rng() % static_cast<std::uint64_t>(2 * d1));
      double delta = (2.0 * uni(rng) - 1.0) * step;
      if (coord < d1) {
        lambda(coord) = std::max(0.0, lambda(coord) + delta);
        double s = lambda.sum();
        if (s <= 0.0) continue;
        lambda /= s;
      } else {
        int i = coord - d1;
        d(i) = std::clamp(d(i) + delta, 0.0, 1.0);
      }
      double m = detail::search_margin(fb_best.fbar, lambda, d, target);
      if (m < b.margin) {
        b.margin = m;
        b.trial = explore + t;
        b.lambda = lambda;
        b.diag = d;
      }
      if (t > 0 && t % (refine / 8 + 1) == 0) step *= 0.5;
    }
  });

  SearchResult out;
  for (int w = 0; w < workers; ++w) {
    const SearchResult& b = best[static_cast<std::size_t>(w)];
    if (b.trial < 0) continue;
    if (b.margin < out.margin ||
        (b.margin == out.margin && b.trial < out.trial)) {
      out = b;
    }
  }
  out.workers = workers;
  out.seed = seed;
  out.target = target;
  out.d1 = d1;
  return out;
}

/// Materialize the state and channel of a search result:
/// psi = sum_j sqrt(lambda_j) |j> |fbar_j> on (d1, 2, 2, 2) with the channel
/// diagonal in the computational basis of party 1.
inline std::pair<PureState, TwoOutcomeChannel> realize_search_result(
    const SearchResult& r) {
  if (r.trial < 0) throw Error("realize_search_result: search found no candidate");
  detail::FbarSet fb = detail::make_fbar(r.d1, r.fbar_seed);
  HilbertDims env = detail::search_environment();
  std::vector<int> dims_vec = {r.d1};
  dims_vec.insert(dims_vec.end(), env.dims().begin(), env.dims().end());
  HilbertDims dims(dims_vec);
  Vector amp = Vector::Zero(dims.total_dim());
  for (int j = 0; j < r.d1; ++j)
    amp.segment(j * env.total_dim(), env.total_dim()) =
        std::sqrt(r.lambda(j)) * fb.vecs[static_cast<std::size_t>(j)];
  return {PureState(dims, std::move(amp)),
          TwoOutcomeChannel(r.d1, r.diag, Matrix::Identity(r.d1, r.d1))};
}

// ---------------------------------------------------------------------------
// The explicit counterexample

/// The four-party state on local dimensions (4, 2, 2, 2)
///   (|0000> + |0011> + |1100> + |1111>
///    + |2000> - |2011> - |3100> + |3111>) / sqrt(8)
/// together with the projective channel diag(1,1,0,0) / diag(0,0,1,1) on
/// party 1: both C_D and C_D^2 increase under it.
inline std::pair<PureState, TwoOutcomeChannel> builtin_counterexample() {
  HilbertDims dims({4, 2, 2, 2});
  Vector amp = Vector::Zero(dims.total_dim());
  const double c = 1.0 / std::sqrt(8.0);
  amp(0) = c;    // |0000>
  amp(3) = c;    // |0011>
  amp(12) = c;   // |1100>
  amp(15) = c;   // |1111>
  amp(16) = c;   // |2000>
  amp(19) = -c;  // |2011>
  amp(28) = -c;  // |3100>
  amp(31) = c;   // |3111>
  RealVector d(4);
  d << 1.0, 1.0, 0.0, 0.0;
  return {PureState(dims, std::move(amp)),
          TwoOutcomeChannel(4, std::move(d), Matrix::Identity(4, 4))};
}

}  // namespace tildelab
