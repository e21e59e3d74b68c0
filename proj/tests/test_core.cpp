#include "tildelab/core.hpp"

#include "oracles.hpp"
#include "test_states.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cstring>

using namespace tildelab;
using Catch::Approx;

TEST_CASE("HilbertDims validates its entries", "[core]") {
  CHECK(HilbertDims({2, 3, 2}).total_dim() == 12);
  CHECK(HilbertDims({2, 3, 2}).stride(0) == 6);
  CHECK(HilbertDims({2, 3, 2}).stride(2) == 1);
  CHECK_THROWS_AS(HilbertDims(std::vector<int>{}), BadDimension);
  CHECK_THROWS_AS(HilbertDims({2, 1}), BadDimension);
  CHECK_THROWS_AS(HilbertDims({64, 64, 64}), BadDimension);  // above the cap
}

TEST_CASE("subsets enumerates nonempty masks in order", "[core]") {
  CHECK(subsets(1).size() == 1);
  CHECK(subsets(1)[0].bits == 1u);
  auto two = subsets(2);
  REQUIRE(two.size() == 3);
  CHECK(two[0].bits == 1u);
  CHECK(two[1].bits == 2u);
  CHECK(two[2].bits == 3u);
  CHECK(subsets(4).size() == 15);
  CHECK_THROWS_AS(subsets(0), TooManyParties);
  CHECK_THROWS_AS(subsets(17), TooManyParties);
}

TEST_CASE("SubsetMask helpers", "[core]") {
  SubsetMask a(0b0101);
  CHECK(a.count() == 2);
  CHECK(a.contains(0));
  CHECK_FALSE(a.contains(1));
  CHECK(a.complement(4).bits == 0b1010);
  CHECK(a.is_proper(4));
  CHECK_FALSE(SubsetMask(0b11).is_proper(2));  // full set on two parties
  CHECK_FALSE(SubsetMask(0).is_proper(4));
  CHECK(SubsetMask(0b0001).subset_of(a));
  CHECK_FALSE(a.subset_of(SubsetMask(0b0001)));
  CHECK(a.intersects(SubsetMask(0b0100)));
  CHECK_FALSE(a.intersects(SubsetMask(0b1010)));
}

TEST_CASE("index convention round-trips through digit tuples", "[core]") {
  std::vector<int> dims = {2, 3, 2};
  for (long i = 0; i < 12; ++i)
    CHECK(oracle::from_digits(oracle::to_digits(i, dims), dims) == i);
  // party 0 is the most significant digit
  CHECK(oracle::to_digits(6, dims) == std::vector<int>{1, 0, 0});
  CHECK(oracle::to_digits(5, dims) == std::vector<int>{0, 2, 1});
  // reshaping amplitudes to an N-way array and back is the identity
  PureState psi = random_pure(HilbertDims(dims), 99);
  Vector rebuilt = Vector::Zero(psi.total_dim());
  for (long i = 0; i < psi.total_dim(); ++i) {
    auto d = oracle::to_digits(i, dims);
    rebuilt(oracle::from_digits(d, dims)) = psi.amp()(i);
  }
  CHECK((rebuilt - psi.amp()).norm() == 0.0);
}

TEST_CASE("partial trace on known states", "[core]") {
  SECTION("maximally entangled marginal is maximally mixed") {
    DensityOperator rho = projector(fixtures::bell());
    Matrix m = partial_trace(rho, SubsetMask(0b01)).mat();
    CHECK((m - Matrix::Identity(2, 2) / 2.0).cwiseAbs().maxCoeff() < 1e-15);
  }
  SECTION("product state marginal") {
    DensityOperator rho =
        projector(fixtures::basis_state(HilbertDims({2, 2}), 0));
    Matrix m = partial_trace(rho, SubsetMask(0b10)).mat();
    Matrix expect = Matrix::Zero(2, 2);
    expect(0, 0) = 1.0;
    CHECK((m - expect).cwiseAbs().maxCoeff() < 1e-15);
  }
  SECTION("GHZ4 two-party marginal against the index-sum oracle") {
    DensityOperator rho = projector(fixtures::ghz(4));
    Matrix m = partial_trace(rho, SubsetMask(0b0011)).mat();
    Matrix expect = Matrix::Zero(4, 4);
    expect(0, 0) = expect(3, 3) = 0.5;
    CHECK((m - expect).cwiseAbs().maxCoeff() < 1e-15);
    Matrix naive =
        oracle::partial_trace_naive(rho.mat(), {2, 2, 2, 2}, {0, 1});
    CHECK((m - naive).cwiseAbs().maxCoeff() < 1e-15);
  }
}

TEST_CASE("partial trace properties on random states", "[core]") {
  const std::vector<std::vector<int>> profiles = {{2, 2}, {2, 3}, {2, 3, 2},
                                                  {3, 2, 2, 2}};
  for (const auto& p : profiles) {
    HilbertDims dims(p);
    for (int rep = 0; rep < 5; ++rep) {
      DensityOperator rho = random_mixed(dims, 2, 100 + rep);
      for (SubsetMask a : subsets(dims.parties())) {
        DensityOperator reduced = partial_trace(rho, a);
        CHECK(reduced.trace() == Approx(rho.trace()).margin(1e-12));
        std::vector<int> keep;
        for (int k = 0; k < dims.parties(); ++k)
          if (a.contains(k)) keep.push_back(k);
        Matrix naive = oracle::partial_trace_naive(rho.mat(), p, keep);
        CHECK((reduced.mat() - naive).cwiseAbs().maxCoeff() < 1e-13);
      }
    }
  }
}

TEST_CASE("partial trace edge cases", "[core]") {
  DensityOperator rho = random_mixed(HilbertDims({2, 3}), 3, 7);
  SECTION("full mask returns the operator exactly") {
    Matrix m = partial_trace(rho, SubsetMask(0b11)).mat();
    CHECK((m - rho.mat()).cwiseAbs().maxCoeff() == 0.0);
  }
  SECTION("empty mask is rejected") {
    CHECK_THROWS_AS(partial_trace(rho, SubsetMask(0)), EmptySubset);
  }
  SECTION("mask beyond the party count is rejected") {
    CHECK_THROWS_AS(partial_trace(rho, SubsetMask(0b100)), ShapeMismatch);
  }
}

TEST_CASE("linear entropy values and bounds", "[core]") {
  SECTION("pure projector has zero entropy") {
    CHECK(linear_entropy(projector(fixtures::bell())) ==
          Approx(0.0).margin(1e-12));
  }
  SECTION("maximally mixed qubit") {
    DensityOperator rho(HilbertDims({2}), Matrix::Identity(2, 2) / 2.0);
    CHECK(linear_entropy(rho) == Approx(1.0).margin(1e-14));
  }
  SECTION("first marginal of the (4,2,2,2) fixture") {
    DensityOperator rho = projector(fixtures::psi_4222());
    CHECK(linear_entropy(rho, SubsetMask(0b0001)) ==
          Approx(1.5).margin(1e-12));
  }
  SECTION("bounds 0 <= tau <= 2(1 - 1/dim)") {
    for (int rep = 0; rep < 20; ++rep) {
      HilbertDims dims({2, 3});
      DensityOperator rho = random_mixed(dims, 1 + rep % 6, 300 + rep);
      double tau = linear_entropy(rho);
      CHECK(tau >= -1e-12);
      CHECK(tau <= 2.0 * (1.0 - 1.0 / dims.total_dim()) + 1e-12);
    }
  }
  SECTION("non-square matrix is rejected at construction") {
    CHECK_THROWS_AS(DensityOperator(HilbertDims({2}), Matrix::Zero(2, 3)),
                    ShapeMismatch);
  }
}

TEST_CASE("Schmidt symmetry of marginal entropies for pure states", "[core]") {
  const std::vector<std::vector<int>> profiles = {{2, 2}, {2, 3, 2}, {3, 3, 2}};
  for (const auto& p : profiles) {
    HilbertDims dims(p);
    DensityOperator rho = projector(random_pure(dims, 41));
    for (SubsetMask a : subsets(dims.parties())) {
      if (!a.is_proper(dims.parties())) continue;
      CHECK(linear_entropy(rho, a) ==
            Approx(linear_entropy(rho, a.complement(dims.parties())))
                .margin(1e-10));
    }
  }
}

TEST_CASE("random pure states", "[core]") {
  SECTION("unit norm") {
    PureState psi = random_pure(HilbertDims({2}), 1);
    CHECK(psi.norm() == Approx(1.0).margin(1e-14));
  }
  SECTION("same seed reproduces the amplitudes bit for bit") {
    PureState a = random_pure(HilbertDims({3, 3}), 77);
    PureState b = random_pure(HilbertDims({3, 3}), 77);
    CHECK(std::memcmp(a.amp().data(), b.amp().data(),
                      sizeof(Complex) * static_cast<std::size_t>(a.total_dim())) == 0);
    PureState c = random_pure(HilbertDims({3, 3}), 78);
    CHECK((a.amp() - c.amp()).norm() > 1e-3);
  }
  SECTION("single-party purity matches the Haar average (3,3)") {
    // <Tr rho_A^2> = (dA + dB) / (dA dB + 1) = 0.6 for two qutrits
    double sum = 0.0;
    const int samples = 10000;
    for (int i = 0; i < samples; ++i) {
      PureState psi = random_pure(HilbertDims({3, 3}), 5000 + i);
      sum += purity(partial_trace(projector(psi), SubsetMask(0b01)));
    }
    CHECK(sum / samples == Approx(0.6).margin(0.01));
  }
}

TEST_CASE("random mixed states", "[core]") {
  SECTION("rank 1 is a pure projector") {
    DensityOperator rho = random_mixed(HilbertDims({2, 2}), 1, 9);
    CHECK(purity(rho) == Approx(1.0).margin(1e-12));
  }
  SECTION("full rank mixes") {
    double mean = 0.0;
    for (int i = 0; i < 10; ++i)
      mean += purity(random_mixed(HilbertDims({2, 2}), 4, 600 + i));
    CHECK(mean / 10 < 0.9);
  }
  SECTION("Hermitian, PSD, trace one") {
    DensityOperator rho = random_mixed(HilbertDims({2}), 2, 123);
    CHECK(rho.is_hermitian(1e-12));
    CHECK(rho.min_eigenvalue() >= -1e-12);
    CHECK(rho.trace() == Approx(1.0).margin(1e-12));
    CHECK_NOTHROW(rho.validate_physical());
  }
  SECTION("rank below one is rejected") {
    CHECK_THROWS_AS(random_mixed(HilbertDims({2}), 0, 1), BadDimension);
  }
}

TEST_CASE("embed_on places operators with identity elsewhere", "[core]") {
  HilbertDims dims({2, 3, 2});
  Rng rng(5);
  Matrix op = random_complex_matrix(3, 3, rng);
  Matrix full = embed_on(dims, SubsetMask(0b010), op);
  Matrix expect = kron(Matrix::Identity(2, 2), kron(op, Matrix::Identity(2, 2)));
  CHECK((full - expect).cwiseAbs().maxCoeff() < 1e-15);
  CHECK_THROWS_AS(embed_on(dims, SubsetMask(0b001), op), ShapeMismatch);
}

TEST_CASE("parallel_for covers every index once", "[core]") {
  std::vector<int> hits(257, 0);
  parallel_for(257, 4, [&](long i) { hits[static_cast<std::size_t>(i)] += 1; });
  for (int h : hits) CHECK(h == 1);
}
