#pragma once

#include <variant>
#include <vector>

#include "gconv/fourier.hpp"

namespace gconv {

/// M x N matrix of signals on G: the kernel of the convolution operator
///   [A * x]_m = sum_n a_{m,n} * x_n   from l2_N(G) to l2_M(G).
/// The time-domain taps are the ground truth; symbols are derived from them.
class FilterMatrix {
 public:
  /// `entries` in row-major order (entry (m, n) at m * cols + n).
  FilterMatrix(GroupSpec spec, std::size_t rows, std::size_t cols, std::vector<Signal> entries);

  static FilterMatrix zeros(const GroupSpec& spec, std::size_t rows, std::size_t cols);
  /// delta * I_N, the identity operator.
  static FilterMatrix identity(const GroupSpec& spec, std::size_t n);

  const GroupSpec& spec() const { return spec_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Signal& entry(std::size_t m, std::size_t n) const { return entries_[m * cols_ + n]; }
  Signal& entry(std::size_t m, std::size_t n) { return entries_[m * cols_ + n]; }
  const std::vector<Signal>& entries() const { return entries_; }

 private:
  GroupSpec spec_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Signal> entries_;
};

/// An element of l2_N(G).
class VectorSignal {
 public:
  explicit VectorSignal(std::vector<Signal> components);
  VectorSignal(GroupSpec spec, std::vector<Signal> components);

  static VectorSignal zeros(const GroupSpec& spec, std::size_t n);
  /// delta e_n translated by g.
  static VectorSignal unit(const GroupSpec& spec, std::size_t n_total, std::size_t channel, std::size_t at = 0);

  const GroupSpec& spec() const { return spec_; }
  std::size_t size() const { return components_.size(); }
  const Signal& operator[](std::size_t n) const { return components_[n]; }
  Signal& operator[](std::size_t n) { return components_[n]; }
  const std::vector<Signal>& components() const { return components_; }

  double norm_squared() const;

 private:
  GroupSpec spec_;
  std::vector<Signal> components_;
};

VectorSignal translate(const VectorSignal& x, std::size_t h);

/// A * x, evaluated as the inverse transform of A^(xi) x^(xi).
VectorSignal apply(const FilterMatrix& a, const VectorSignal& x);

/// Entrywise forward transform regrouped per dual point.
SymbolMatrix symbol(const FilterMatrix& a);

/// Inverse of `symbol`. Only exact symbols (one matrix per element of a
/// finite dual group) have a filter.
FilterMatrix filter_from_symbol(const SymbolMatrix& s);

/// Filter of the composition B o A, i.e. the matrix convolution B * A.
/// Computed as pointwise symbol products.
FilterMatrix compose(const FilterMatrix& b, const FilterMatrix& a);
/// Same as `compose` through direct time-domain convolutions.
FilterMatrix compose_direct(const FilterMatrix& b, const FilterMatrix& a);

/// Filter of the Hilbert-space adjoint: [A*]_{n,m}(g) = conj(a_{m,n}(-g)).
///
/// This is the involution of the convolution algebra, which is a transpose
/// combined with a conjugated reflection of every tap. It is not the
/// conjugate transpose of the tap matrices A(g) taken elementwise in g.
FilterMatrix adjoint(const FilterMatrix& a);

FilterMatrix scale(const FilterMatrix& a, cplx c);

/// Evidence that a dense operator does not commute with translations.
struct TranslationVarianceReport {
  double max_deviation = 0.0;
  std::size_t shift = 0;           // g with op T_g (delta e_n) != T_g op (delta e_n)
  std::size_t input_channel = 0;   // n
  std::size_t output_channel = 0;  // m of the worst entry
  std::size_t output_index = 0;    // element index h of the worst entry
};

/// Recovers a_{m,n} = [op(delta e_n)]_m from a dense |G|M x |G|N matrix whose
/// row (m, h) sits at m |G| + h and column (n, g) at n |G| + g, then checks
/// that op is the dense realization of that filter. Returns the filter when
/// every entry agrees to tolerance * max(1, max |op|), otherwise the worst
/// deviation found.
std::variant<FilterMatrix, TranslationVarianceReport> extract_filter(const Eigen::MatrixXcd& op,
                                                                     const GroupSpec& spec, std::size_t rows,
                                                                     std::size_t cols, double tolerance = 1e-9);

}  // namespace gconv
