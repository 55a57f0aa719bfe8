#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <span>
#include <vector>

#include "gconv/group.hpp"

namespace gconv {

enum class Domain { Group, Dual };

/// A complex function on G (Domain::Group) or on its dual (Domain::Dual),
/// stored densely in element-index order.
class Signal {
 public:
  Signal(GroupSpec spec, std::vector<cplx> values, Domain domain = Domain::Group);

  static Signal zeros(const GroupSpec& spec, Domain domain = Domain::Group);
  /// Dirac delta at the element with the given index.
  static Signal delta(const GroupSpec& spec, std::size_t at = 0);

  const GroupSpec& spec() const { return spec_; }
  Domain domain() const { return domain_; }
  std::size_t size() const { return values_.size(); }
  std::span<const cplx> values() const { return values_; }
  std::span<cplx> values() { return values_; }
  cplx operator[](std::size_t i) const { return values_[i]; }
  cplx& operator[](std::size_t i) { return values_[i]; }

  double norm_squared() const;

 private:
  GroupSpec spec_;
  std::vector<cplx> values_;
  Domain domain_;
};

/// Transfer matrix: one M x N complex matrix per dual point. `exact` is
/// false when the data are samples of a continuous symbol on a grid, in
/// which case extrema computed from it are only one-sided bounds.
class SymbolMatrix {
 public:
  SymbolMatrix(GroupSpec spec, std::size_t rows, std::size_t cols, std::vector<Eigen::MatrixXcd> data,
               bool exact = true);

  const GroupSpec& spec() const { return spec_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }
  bool exact() const { return exact_; }
  bool square() const { return rows_ == cols_; }
  const Eigen::MatrixXcd& at(std::size_t xi) const { return data_[xi]; }
  const std::vector<Eigen::MatrixXcd>& data() const { return data_; }

 private:
  GroupSpec spec_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Eigen::MatrixXcd> data_;
  bool exact_;
};

/// x^(xi) = sum_g x(g) conj(<g, xi>). No normalization on this side.
Signal forward(const Signal& x);
/// x(g) = |G|^{-1} sum_xi X(xi) <g, xi>, the inverse of `forward`.
Signal inverse(const Signal& X);

/// (x * y)(h) = sum_g x(g) y(h - g), computed through the transform.
Signal convolve(const Signal& x, const Signal& y);
/// Same sum evaluated term by term; O(|G|^2).
Signal convolve_direct(const Signal& x, const Signal& y);

/// (T_h x)(g) = x(g - h).
Signal translate(const Signal& x, std::size_t h);

/// A finitely supported M x N matrix filter on Z^d.
struct LatticeTap {
  std::vector<std::int64_t> offset;
  Eigen::MatrixXcd value;
};

struct LatticeFilter {
  std::size_t dim = 1;
  std::size_t rows = 1;
  std::size_t cols = 1;
  std::vector<LatticeTap> taps;
};

/// Samples the trigonometric-polynomial symbol sum_n A(n) z^{-n} on the
/// uniform K^d grid z_j = exp(2 pi i k_j / K). The result is indexed like
/// Z_K^d and carries exact = false.
SymbolMatrix grid_symbol(const LatticeFilter& filter, std::size_t grid);

}  // namespace gconv
