#include "gconv/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gconv/linalg.hpp"

namespace gconv {

namespace {

void require_square(const SymbolMatrix& s, const char* what) {
  if (!s.square()) {
    throw ShapeError(std::string(what) + ": symbol is " + std::to_string(s.rows()) + " x " +
                     std::to_string(s.cols()) + ", a square symbol is required");
  }
}

}  // namespace

Extremum operator_norm(const SymbolMatrix& s) {
  Extremum best{-1.0, 0};
  for (std::size_t xi = 0; xi < s.size(); ++xi) {
    const double v = linalg::spectral_norm(s.at(xi));
    if (v > best.value) best = {v, xi};
  }
  return best;
}

double benzi_bound(const SymbolMatrix& s) {
  Eigen::MatrixXcd sup = Eigen::MatrixXcd::Zero(s.rows(), s.cols());
  for (const auto& m : s.data()) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      for (Eigen::Index j = 0; j < m.cols(); ++j) {
        sup(i, j) = std::max(sup(i, j).real(), std::abs(m(i, j)));
      }
    }
  }
  return linalg::spectral_norm(sup);
}

double default_det_tolerance(const SymbolMatrix& s) {
  return 1e-12 * std::pow(operator_norm(s).value, static_cast<double>(s.cols()));
}

Invertibility invertibility(const SymbolMatrix& s, std::optional<double> det_tolerance) {
  require_square(s, "invertibility");
  if (det_tolerance && !(*det_tolerance > 0.0)) throw std::invalid_argument("invertibility: det tolerance must be > 0");
  Invertibility out;
  out.exact = s.exact();
  out.det_tolerance = det_tolerance.value_or(default_det_tolerance(s));
  out.min_det_abs = std::numeric_limits<double>::infinity();
  for (std::size_t xi = 0; xi < s.size(); ++xi) {
    const double d = std::abs(s.at(xi).partialPivLu().determinant());
    if (d < out.min_det_abs) {
      out.min_det_abs = d;
      out.argmin_xi = xi;
    }
  }
  // Samples of a continuous symbol cannot certify an infimum.
  out.invertible = s.exact() && out.min_det_abs > out.det_tolerance;
  return out;
}

namespace {

Invertibility require_invertible(const SymbolMatrix& s, std::optional<double> det_tolerance, const char* what) {
  const Invertibility inv = invertibility(s, det_tolerance);
  if (!inv.invertible) {
    std::string msg = std::string(what) + ": operator is not invertible";
    msg += s.exact() ? " (min |det| = " + std::to_string(inv.min_det_abs) + " at dual index " +
                           std::to_string(inv.argmin_xi) + ")"
                     : " (grid-sampled symbol cannot certify invertibility)";
    throw NotInvertible(msg, inv.min_det_abs, inv.argmin_xi);
  }
  return inv;
}

}  // namespace

FilterMatrix inverse_filter(const FilterMatrix& a, std::optional<double> det_tolerance) {
  const SymbolMatrix s = symbol(a);
  require_invertible(s, det_tolerance, "inverse_filter");
  std::vector<Eigen::MatrixXcd> inv;
  inv.reserve(s.size());
  for (const auto& m : s.data()) inv.push_back(m.partialPivLu().inverse());
  return filter_from_symbol(SymbolMatrix(s.spec(), s.rows(), s.cols(), std::move(inv), true));
}

Extremum inverse_norm(const SymbolMatrix& s, std::optional<double> det_tolerance) {
  require_invertible(s, det_tolerance, "inverse_norm");
  Extremum smallest{std::numeric_limits<double>::infinity(), 0};
  for (std::size_t xi = 0; xi < s.size(); ++xi) {
    const double v = linalg::singular_values(s.at(xi)).back();
    if (v < smallest.value) smallest = {v, xi};
  }
  return {1.0 / smallest.value, smallest.xi};
}

HermitianExtremes hermitian_extremal_eigs(std::span<const Eigen::MatrixXcd> family, double tolerance) {
  if (family.empty()) throw std::invalid_argument("hermitian_extremal_eigs: empty family");
  HermitianExtremes out;
  out.min_eigenvalue = std::numeric_limits<double>::infinity();
  out.max_eigenvalue = -std::numeric_limits<double>::infinity();
  for (std::size_t xi = 0; xi < family.size(); ++xi) {
    const auto& h = family[xi];
    if (h.rows() != h.cols() || h.rows() != family[0].rows()) {
      throw ShapeError("hermitian_extremal_eigs: matrices must be square and of equal size");
    }
    const double dev = linalg::hermitian_deviation(h);
    const double scale = std::max(1.0, linalg::spectral_norm(h));
    if (dev > tolerance * scale) {
      throw NotHermitian("hermitian_extremal_eigs: matrix at dual index " + std::to_string(xi) +
                         " deviates from Hermitian by " + std::to_string(dev));
    }
    out.hermitian_deviation = std::max(out.hermitian_deviation, dev);
    const auto ev = linalg::hermitian_eigenvalues(h);
    if (ev.front() < out.min_eigenvalue) {
      out.min_eigenvalue = ev.front();
      out.argmin_xi = xi;
    }
    if (ev.back() > out.max_eigenvalue) {
      out.max_eigenvalue = ev.back();
      out.argmax_xi = xi;
    }
  }
  return out;
}

SpectralReport analyze(const SymbolMatrix& s, std::optional<double> det_tolerance) {
  SpectralReport r;
  r.group = s.spec().orders();
  r.rows = s.rows();
  r.cols = s.cols();
  r.exact = s.exact();
  const Extremum norm = operator_norm(s);
  r.operator_norm = norm.value;
  r.argmax_xi = norm.xi;
  r.benzi_bound = benzi_bound(s);
  if (s.square()) {
    const Invertibility inv = invertibility(s, det_tolerance);
    r.min_det_abs = inv.min_det_abs;
    r.argmin_xi = inv.argmin_xi;
    r.det_tolerance = inv.det_tolerance;
    r.invertible = inv.invertible;
    if (inv.invertible) r.inverse_norm = inverse_norm(s, det_tolerance).value;
  }
  return r;
}

}  // namespace gconv
