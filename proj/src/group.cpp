#include "gconv/group.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace gconv {

GroupSpec::GroupSpec(std::vector<std::size_t> orders) : orders_(std::move(orders)) {
  if (orders_.empty()) {
    throw ShapeError("GroupSpec: at least one cyclic factor is required (use [1] for the trivial group)");
  }
  for (std::size_t s : orders_) {
    if (s < 1) throw ShapeError("GroupSpec: cyclic factor sizes must be >= 1");
  }
  strides_.assign(orders_.size(), 1);
  for (std::size_t j = orders_.size(); j-- > 0;) {
    strides_[j] = cardinality_;
    cardinality_ *= orders_[j];
  }
}

void GroupSpec::check_residues(const std::vector<std::size_t>& r) const {
  if (r.size() != orders_.size()) {
    throw ShapeError("element has " + std::to_string(r.size()) + " residues, group " + to_string() +
                     " has rank " + std::to_string(orders_.size()));
  }
  for (std::size_t j = 0; j < r.size(); ++j) {
    if (r[j] >= orders_[j]) throw ShapeError("residue out of range for group " + to_string());
  }
}

std::size_t GroupSpec::index_of(const Element& g) const {
  check_residues(g.residues);
  std::size_t idx = 0;
  for (std::size_t j = 0; j < orders_.size(); ++j) idx += g.residues[j] * strides_[j];
  return idx;
}

std::size_t GroupSpec::index_of(const DualPoint& xi) const { return index_of(Element{xi.residues}); }

Element GroupSpec::element_at(std::size_t index) const {
  if (index >= cardinality_) throw ShapeError("element index out of range");
  Element g{std::vector<std::size_t>(orders_.size())};
  for (std::size_t j = 0; j < orders_.size(); ++j) {
    g.residues[j] = (index / strides_[j]) % orders_[j];
  }
  return g;
}

DualPoint GroupSpec::dual_at(std::size_t index) const { return DualPoint{element_at(index).residues}; }

std::size_t GroupSpec::add_index(std::size_t a, std::size_t b) const {
  std::size_t out = 0;
  for (std::size_t j = 0; j < orders_.size(); ++j) {
    const std::size_t s = orders_[j];
    const std::size_t r = ((a / strides_[j]) % s + (b / strides_[j]) % s) % s;
    out += r * strides_[j];
  }
  return out;
}

std::size_t GroupSpec::neg_index(std::size_t a) const {
  std::size_t out = 0;
  for (std::size_t j = 0; j < orders_.size(); ++j) {
    const std::size_t s = orders_[j];
    const std::size_t r = (a / strides_[j]) % s;
    out += ((s - r) % s) * strides_[j];
  }
  return out;
}

double GroupSpec::pairing_turns(std::size_t g, std::size_t xi) const {
  // Sum of reduced fractions (g_j xi_j mod s_j) / s_j keeps the phase exact
  // up to one rounding per factor.
  double turns = 0.0;
  for (std::size_t j = 0; j < orders_.size(); ++j) {
    const std::size_t s = orders_[j];
    const std::size_t prod = ((g / strides_[j]) % s) * ((xi / strides_[j]) % s) % s;
    turns += static_cast<double>(prod) / static_cast<double>(s);
  }
  return turns - std::floor(turns);
}

std::string GroupSpec::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t j = 0; j < orders_.size(); ++j) os << (j ? "," : "") << orders_[j];
  os << ']';
  return os.str();
}

cplx unit_root(double turns) {
  turns -= std::floor(turns);
  if (turns == 0.0) return {1.0, 0.0};
  if (turns == 0.25) return {0.0, 1.0};
  if (turns == 0.5) return {-1.0, 0.0};
  if (turns == 0.75) return {0.0, -1.0};
  const double theta = 2.0 * std::numbers::pi * turns;
  return {std::cos(theta), std::sin(theta)};
}

cplx character(std::size_t g, std::size_t xi, const GroupSpec& spec) {
  if (g >= spec.cardinality() || xi >= spec.cardinality()) throw ShapeError("character: index out of range");
  return unit_root(spec.pairing_turns(g, xi));
}

cplx character(const Element& g, const DualPoint& xi, const GroupSpec& spec) {
  return character(spec.index_of(g), spec.index_of(xi), spec);
}

std::vector<Element> enumerate(const GroupSpec& spec) {
  std::vector<Element> out;
  out.reserve(spec.cardinality());
  for (std::size_t i = 0; i < spec.cardinality(); ++i) out.push_back(spec.element_at(i));
  return out;
}

Element add(const Element& a, const Element& b, const GroupSpec& spec) {
  return spec.element_at(spec.add_index(spec.index_of(a), spec.index_of(b)));
}

Element neg(const Element& a, const GroupSpec& spec) {
  return spec.element_at(spec.neg_index(spec.index_of(a)));
}

}  // namespace gconv
