#pragma once

// Dense ground truth for the frequency-domain formulas. Nothing in here
// touches the FFT or the per-dual-point symbol: operators are written out as
// block G-circulant matrices by direct summation and decomposed whole.

#include <stdexcept>

#include "gconv/convop.hpp"
#include "gconv/riesz.hpp"

namespace gconv::oracle {

inline constexpr std::size_t kMaxDenseColumns = 512;
inline constexpr std::size_t kMaxDenseRows = 1024;

class SizeCapExceeded : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// |G|M x |G|N matrix of A * (.). Row (m, h) is m |G| + h, column (n, g) is
/// n |G| + g, and entry ((m, h), (n, g)) = a_{m,n}(h - g).
struct DenseOperator {
  Eigen::MatrixXcd matrix;
  GroupSpec spec;
  std::size_t rows;
  std::size_t cols;
};

/// Throws SizeCapExceeded when |G| * max(M, N) > 512.
DenseOperator densify(const FilterMatrix& a);

/// Stacks the components: entry (n, g) at n |G| + g.
Eigen::VectorXcd vectorize(const VectorSignal& x);
Eigen::VectorXcd vectorize(const Signal& x);

struct SvdExtremes {
  double sigma_max = 0.0;
  /// sqrt(lambda_min(D^* D)); zero whenever D has more columns than rows.
  double sigma_min = 0.0;
};

/// Full SVD. Caps: at most 1024 rows and 512 columns.
SvdExtremes dense_svd_extremes(const Eigen::MatrixXcd& d);
SvdExtremes dense_svd_extremes(const DenseOperator& d);

/// All min(rows, cols) singular values, descending. Same caps.
std::vector<double> dense_singular_values(const Eigen::MatrixXcd& d);

/// |K| x N|G| matrix whose column (n, g) = n |G| + g is pi_g phi_n.
/// Caps: |K| <= 1024, N |G| <= 512.
Eigen::MatrixXcd dense_synthesis(const GeneratorSystem& sys);

}  // namespace gconv::oracle
