#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace gconv {

using cplx = std::complex<double>;

/// Raised when two objects that must live on the same group (or have
/// compatible shapes) do not.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A residue tuple (g_1, ..., g_d) with 0 <= g_j < s_j.
struct Element {
  std::vector<std::size_t> residues;
  bool operator==(const Element&) const = default;
};

/// A point of the dual group. For a finite product of cyclic groups the dual
/// is identified with the group itself, so the representation is the same.
struct DualPoint {
  std::vector<std::size_t> residues;
  bool operator==(const DualPoint&) const = default;
};

/// A finite abelian group Z_{s_1} x ... x Z_{s_d}. Factor order is kept as
/// given; elements are indexed row-major (last factor fastest).
class GroupSpec {
 public:
  explicit GroupSpec(std::vector<std::size_t> orders);

  const std::vector<std::size_t>& orders() const { return orders_; }
  std::size_t rank() const { return orders_.size(); }
  std::size_t cardinality() const { return cardinality_; }

  std::size_t index_of(const Element& g) const;
  std::size_t index_of(const DualPoint& xi) const;
  Element element_at(std::size_t index) const;
  DualPoint dual_at(std::size_t index) const;

  /// Index arithmetic, the hot path used by the transforms and the oracle.
  std::size_t add_index(std::size_t a, std::size_t b) const;
  std::size_t neg_index(std::size_t a) const;
  std::size_t sub_index(std::size_t a, std::size_t b) const {
    return add_index(a, neg_index(b));
  }

  /// Phase of <g, xi> as a fraction of a full turn, reduced to [0, 1).
  double pairing_turns(std::size_t g, std::size_t xi) const;

  std::string to_string() const;

  bool operator==(const GroupSpec&) const = default;

 private:
  void check_residues(const std::vector<std::size_t>& r) const;

  std::vector<std::size_t> orders_;
  std::vector<std::size_t> strides_;
  std::size_t cardinality_ = 1;
};

/// <g, xi> = exp(2 pi i sum_j g_j xi_j / s_j).
cplx character(const Element& g, const DualPoint& xi, const GroupSpec& spec);
cplx character(std::size_t g, std::size_t xi, const GroupSpec& spec);

std::vector<Element> enumerate(const GroupSpec& spec);

Element add(const Element& a, const Element& b, const GroupSpec& spec);
Element neg(const Element& a, const GroupSpec& spec);

/// Unit-modulus complex number exp(2 pi i turns), with exact values at the
/// quarter turns so that small-group symbols come out clean.
cplx unit_root(double turns);

}  // namespace gconv
