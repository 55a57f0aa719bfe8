#include "gconv/oracle.hpp"

#include <Eigen/SVD>
#include <algorithm>

namespace gconv::oracle {

namespace {

void check_caps(Eigen::Index rows, Eigen::Index cols, const char* what) {
  if (static_cast<std::size_t>(rows) > kMaxDenseRows || static_cast<std::size_t>(cols) > kMaxDenseColumns) {
    throw SizeCapExceeded(std::string(what) + ": " + std::to_string(rows) + " x " + std::to_string(cols) +
                          " exceeds the dense cap of " + std::to_string(kMaxDenseRows) + " x " +
                          std::to_string(kMaxDenseColumns));
  }
}

}  // namespace

DenseOperator densify(const FilterMatrix& a) {
  const GroupSpec& spec = a.spec();
  const std::size_t order = spec.cardinality();
  if (order * std::max(a.rows(), a.cols()) > kMaxDenseColumns) {
    throw SizeCapExceeded("densify: |G| * max(M, N) = " + std::to_string(order * std::max(a.rows(), a.cols())) +
                          " exceeds " + std::to_string(kMaxDenseColumns));
  }
  Eigen::MatrixXcd d(order * a.rows(), order * a.cols());
  for (std::size_t m = 0; m < a.rows(); ++m) {
    for (std::size_t n = 0; n < a.cols(); ++n) {
      const Signal& e = a.entry(m, n);
      for (std::size_t h = 0; h < order; ++h) {
        for (std::size_t g = 0; g < order; ++g) d(m * order + h, n * order + g) = e[spec.sub_index(h, g)];
      }
    }
  }
  return {std::move(d), spec, a.rows(), a.cols()};
}

Eigen::VectorXcd vectorize(const VectorSignal& x) {
  const std::size_t order = x.spec().cardinality();
  Eigen::VectorXcd v(order * x.size());
  for (std::size_t n = 0; n < x.size(); ++n) {
    for (std::size_t g = 0; g < order; ++g) v(n * order + g) = x[n][g];
  }
  return v;
}

Eigen::VectorXcd vectorize(const Signal& x) {
  Eigen::VectorXcd v(x.size());
  for (std::size_t g = 0; g < x.size(); ++g) v(g) = x[g];
  return v;
}

std::vector<double> dense_singular_values(const Eigen::MatrixXcd& d) {
  check_caps(d.rows(), d.cols(), "dense_singular_values");
  if (d.size() == 0) return {};
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(d);
  const auto& s = svd.singularValues();
  std::vector<double> out(s.data(), s.data() + s.size());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

SvdExtremes dense_svd_extremes(const Eigen::MatrixXcd& d) {
  const auto sv = dense_singular_values(d);
  if (sv.empty()) return {};
  SvdExtremes e;
  e.sigma_max = sv.front();
  e.sigma_min = d.rows() < d.cols() ? 0.0 : sv.back();
  return e;
}

SvdExtremes dense_svd_extremes(const DenseOperator& d) { return dense_svd_extremes(d.matrix); }

Eigen::MatrixXcd dense_synthesis(const GeneratorSystem& sys) {
  const GroupSpec& K = sys.ambient();
  const GroupSpec& G = sys.acting();
  check_caps(static_cast<Eigen::Index>(K.cardinality()), static_cast<Eigen::Index>(sys.size() * G.cardinality()),
             "dense_synthesis");
  Eigen::MatrixXcd s(K.cardinality(), sys.size() * G.cardinality());
  for (std::size_t n = 0; n < sys.size(); ++n) {
    const Signal& phi = sys.generators()[n];
    for (std::size_t g = 0; g < G.cardinality(); ++g) {
      const std::size_t shift = sys.embed(g);
      for (std::size_t k = 0; k < K.cardinality(); ++k) s(K.add_index(k, shift), n * G.cardinality() + g) = phi[k];
    }
  }
  return s;
}

}  // namespace gconv::oracle
