#include <doctest.h>

#include "gconv/oracle.hpp"
#include "support.hpp"

using namespace gconv;

TEST_CASE("densify matches the test-side block-circulant matrix") {
  testing::Rng rng(51);
  for (int t = 0; t < 20; ++t) {
    const GroupSpec spec = testing::random_group(rng, 32);
    const FilterMatrix a = testing::random_filter(rng, spec, rng.uniform(1, 3), rng.uniform(1, 3));
    const oracle::DenseOperator d = oracle::densify(a);
    CHECK(d.matrix == testing::block_circulant(a));
    CHECK(d.rows == a.rows());
  }
}

TEST_CASE("vectorize") {
  testing::Rng rng(52);
  const GroupSpec spec({3, 2});
  const VectorSignal x = testing::random_vector(rng, spec, 3);
  CHECK(oracle::vectorize(x) == testing::stack(x));
  CHECK(oracle::vectorize(x[0]).size() == 6);
}

TEST_CASE("size caps") {
  const GroupSpec big({200});
  CHECK_THROWS_AS(oracle::densify(FilterMatrix::zeros(big, 1, 3)), oracle::SizeCapExceeded);
  CHECK_NOTHROW(oracle::densify(FilterMatrix::zeros(GroupSpec({128}), 4, 4)));
}

TEST_CASE("dense singular values") {
  Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(3, 3);
  d(0, 0) = 1.0;
  d(1, 1) = 4.0;
  d(2, 2) = cplx(0, 2);
  const auto sv = oracle::dense_singular_values(d);
  CHECK(sv[0] == doctest::Approx(4.0));
  CHECK(sv[2] == doctest::Approx(1.0));
  const auto e = oracle::dense_svd_extremes(d);
  CHECK(e.sigma_max == doctest::Approx(4.0));
  CHECK(e.sigma_min == doctest::Approx(1.0));
  CHECK(oracle::dense_svd_extremes(Eigen::MatrixXcd::Ones(2, 3)).sigma_min == 0.0);
}

TEST_CASE("dense synthesis columns are translated generators") {
  const GroupSpec K({4}), G({2});
  const GeneratorSystem sys(K, G, {Element{{2}}}, {Signal(K, {1.0, 2.0, 3.0, 4.0})});
  const Eigen::MatrixXcd s = oracle::dense_synthesis(sys);
  REQUIRE(s.rows() == 4);
  REQUIRE(s.cols() == 2);
  // column 1 is phi(. - 2)
  CHECK(s(0, 1) == cplx(3.0));
  CHECK(s(2, 1) == cplx(1.0));
}
