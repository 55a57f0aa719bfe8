#pragma once

#include <optional>
#include <span>
#include <stdexcept>

#include "gconv/convop.hpp"

namespace gconv {

/// An extreme value over the dual group and the first dual index attaining
/// it (ties resolve to the lowest index).
struct Extremum {
  double value = 0.0;
  std::size_t xi = 0;
};

/// Raised when an inverse is requested for an operator whose symbol is
/// (numerically) singular somewhere, or whose symbol is only grid-sampled.
class NotInvertible : public std::runtime_error {
 public:
  NotInvertible(const std::string& what, double min_det_abs, std::size_t argmin_xi)
      : std::runtime_error(what), min_det_abs_(min_det_abs), argmin_xi_(argmin_xi) {}
  double min_det_abs() const { return min_det_abs_; }
  std::size_t argmin_xi() const { return argmin_xi_; }

 private:
  double min_det_abs_;
  std::size_t argmin_xi_;
};

class NotHermitian : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// ||A|| = max_xi ||A^(xi)||_2. On a grid-sampled symbol this is a lower
/// bound for the supremum.
Extremum operator_norm(const SymbolMatrix& s);

/// ||B||_2 where B_{m,n} = max_xi |a^_{m,n}(xi)|. Never below operator_norm.
double benzi_bound(const SymbolMatrix& s);

struct Invertibility {
  double min_det_abs = 0.0;
  std::size_t argmin_xi = 0;
  bool invertible = false;
  double det_tolerance = 0.0;
  bool exact = true;
};

/// 1e-12 * (max_xi ||A^(xi)||_2)^N, the default threshold on min |det|.
double default_det_tolerance(const SymbolMatrix& s);

/// Minimum of |det A^(xi)| over the dual group. The operator is reported
/// invertible when that minimum exceeds the tolerance; grid-sampled
/// symbols are never certified.
Invertibility invertibility(const SymbolMatrix& s, std::optional<double> det_tolerance = std::nullopt);

/// Filter B with B^(xi) = A^(xi)^{-1}. Throws NotInvertible.
FilterMatrix inverse_filter(const FilterMatrix& a, std::optional<double> det_tolerance = std::nullopt);

/// ||A^{-1}|| = (min_xi lambda_min[A^(xi)^* A^(xi)])^{-1/2}; `xi` is where
/// the smallest singular value sits. Throws NotInvertible.
Extremum inverse_norm(const SymbolMatrix& s, std::optional<double> det_tolerance = std::nullopt);

struct HermitianExtremes {
  double min_eigenvalue = 0.0;
  std::size_t argmin_xi = 0;
  double max_eigenvalue = 0.0;
  std::size_t argmax_xi = 0;
  double hermitian_deviation = 0.0;  // max_xi ||H - H^*||_2 before symmetrization
};

/// Extreme eigenvalues over a family of Hermitian matrices. Each matrix is
/// symmetrized first; a deviation above tolerance * max(1, ||H||_2) throws
/// NotHermitian.
HermitianExtremes hermitian_extremal_eigs(std::span<const Eigen::MatrixXcd> family, double tolerance = 1e-10);

struct SpectralReport {
  std::vector<std::size_t> group;
  std::size_t rows = 0;
  std::size_t cols = 0;
  double operator_norm = 0.0;
  std::size_t argmax_xi = 0;
  double benzi_bound = 0.0;
  // The determinant fields are only meaningful for square symbols.
  std::optional<double> min_det_abs;
  std::optional<std::size_t> argmin_xi;
  double det_tolerance = 0.0;
  bool invertible = false;
  std::optional<double> inverse_norm;
  bool exact = true;
};

SpectralReport analyze(const SymbolMatrix& s, std::optional<double> det_tolerance = std::nullopt);

}  // namespace gconv
