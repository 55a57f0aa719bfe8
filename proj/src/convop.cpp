#include "gconv/convop.hpp"

#include <algorithm>
#include <cmath>

namespace gconv {

FilterMatrix::FilterMatrix(GroupSpec spec, std::size_t rows, std::size_t cols, std::vector<Signal> entries)
    : spec_(std::move(spec)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows_ < 1 || cols_ < 1) throw ShapeError("FilterMatrix: rows and cols must be >= 1");
  if (entries_.size() != rows_ * cols_) throw ShapeError("FilterMatrix: expected rows * cols entries");
  for (const auto& e : entries_) {
    if (e.spec() != spec_) throw ShapeError("FilterMatrix: entry lives on group " + e.spec().to_string());
    if (e.domain() != Domain::Group) throw ShapeError("FilterMatrix: entries must be group-domain signals");
  }
}

FilterMatrix FilterMatrix::zeros(const GroupSpec& spec, std::size_t rows, std::size_t cols) {
  return FilterMatrix(spec, rows, cols, std::vector<Signal>(rows * cols, Signal::zeros(spec)));
}

FilterMatrix FilterMatrix::identity(const GroupSpec& spec, std::size_t n) {
  FilterMatrix a = zeros(spec, n, n);
  for (std::size_t i = 0; i < n; ++i) a.entry(i, i)[0] = 1.0;
  return a;
}

VectorSignal::VectorSignal(std::vector<Signal> components)
    : spec_(components.empty() ? throw ShapeError("VectorSignal: at least one component is required")
                               : components.front().spec()),
      components_(std::move(components)) {
  for (const auto& c : components_) {
    if (c.spec() != spec_) throw ShapeError("VectorSignal: components live on different groups");
    if (c.domain() != Domain::Group) throw ShapeError("VectorSignal: components must be group-domain signals");
  }
}

VectorSignal::VectorSignal(GroupSpec spec, std::vector<Signal> components)
    : spec_(std::move(spec)), components_(std::move(components)) {
  if (components_.empty()) throw ShapeError("VectorSignal: at least one component is required");
  for (const auto& c : components_) {
    if (c.spec() != spec_) throw ShapeError("VectorSignal: component lives on group " + c.spec().to_string());
    if (c.domain() != Domain::Group) throw ShapeError("VectorSignal: components must be group-domain signals");
  }
}

VectorSignal VectorSignal::zeros(const GroupSpec& spec, std::size_t n) {
  return VectorSignal(spec, std::vector<Signal>(n, Signal::zeros(spec)));
}

VectorSignal VectorSignal::unit(const GroupSpec& spec, std::size_t n_total, std::size_t channel, std::size_t at) {
  if (channel >= n_total) throw ShapeError("VectorSignal::unit: channel out of range");
  VectorSignal v = zeros(spec, n_total);
  v[channel] = Signal::delta(spec, at);
  return v;
}

double VectorSignal::norm_squared() const {
  double acc = 0.0;
  for (const auto& c : components_) acc += c.norm_squared();
  return acc;
}

VectorSignal translate(const VectorSignal& x, std::size_t h) {
  std::vector<Signal> out;
  out.reserve(x.size());
  for (const auto& c : x.components()) out.push_back(translate(c, h));
  return VectorSignal(x.spec(), std::move(out));
}

SymbolMatrix symbol(const FilterMatrix& a) {
  const std::size_t order = a.spec().cardinality();
  std::vector<Eigen::MatrixXcd> data(order, Eigen::MatrixXcd(a.rows(), a.cols()));
  for (std::size_t m = 0; m < a.rows(); ++m) {
    for (std::size_t n = 0; n < a.cols(); ++n) {
      const Signal hat = forward(a.entry(m, n));
      for (std::size_t xi = 0; xi < order; ++xi) data[xi](m, n) = hat[xi];
    }
  }
  return SymbolMatrix(a.spec(), a.rows(), a.cols(), std::move(data), true);
}

FilterMatrix filter_from_symbol(const SymbolMatrix& s) {
  if (!s.exact()) throw std::invalid_argument("filter_from_symbol: a grid-sampled symbol has no exact filter");
  const std::size_t order = s.spec().cardinality();
  std::vector<Signal> entries;
  entries.reserve(s.rows() * s.cols());
  for (std::size_t m = 0; m < s.rows(); ++m) {
    for (std::size_t n = 0; n < s.cols(); ++n) {
      Signal hat = Signal::zeros(s.spec(), Domain::Dual);
      for (std::size_t xi = 0; xi < order; ++xi) hat[xi] = s.at(xi)(m, n);
      entries.push_back(inverse(hat));
    }
  }
  return FilterMatrix(s.spec(), s.rows(), s.cols(), std::move(entries));
}

VectorSignal apply(const FilterMatrix& a, const VectorSignal& x) {
  if (a.spec() != x.spec()) throw ShapeError("apply: filter and signal live on different groups");
  if (a.cols() != x.size()) {
    throw ShapeError("apply: filter has " + std::to_string(a.cols()) + " input channels, signal has " +
                     std::to_string(x.size()));
  }
  const SymbolMatrix s = symbol(a);
  std::vector<Signal> x_hat;
  x_hat.reserve(x.size());
  for (const auto& c : x.components()) x_hat.push_back(forward(c));

  std::vector<Signal> out;
  out.reserve(a.rows());
  for (std::size_t m = 0; m < a.rows(); ++m) {
    Signal y_hat = Signal::zeros(a.spec(), Domain::Dual);
    for (std::size_t xi = 0; xi < y_hat.size(); ++xi) {
      cplx acc{};
      for (std::size_t n = 0; n < a.cols(); ++n) acc += s.at(xi)(m, n) * x_hat[n][xi];
      y_hat[xi] = acc;
    }
    out.push_back(inverse(y_hat));
  }
  return VectorSignal(a.spec(), std::move(out));
}

namespace {

void check_composable(const FilterMatrix& b, const FilterMatrix& a) {
  if (a.spec() != b.spec()) throw ShapeError("compose: filters live on different groups");
  if (b.cols() != a.rows()) {
    throw ShapeError("compose: B has " + std::to_string(b.cols()) + " columns but A has " + std::to_string(a.rows()) +
                     " rows");
  }
}

}  // namespace

FilterMatrix compose(const FilterMatrix& b, const FilterMatrix& a) {
  check_composable(b, a);
  const SymbolMatrix sb = symbol(b);
  const SymbolMatrix sa = symbol(a);
  std::vector<Eigen::MatrixXcd> prod;
  prod.reserve(sa.size());
  for (std::size_t xi = 0; xi < sa.size(); ++xi) prod.push_back(sb.at(xi) * sa.at(xi));
  return filter_from_symbol(SymbolMatrix(a.spec(), b.rows(), a.cols(), std::move(prod), true));
}

FilterMatrix compose_direct(const FilterMatrix& b, const FilterMatrix& a) {
  check_composable(b, a);
  FilterMatrix out = FilterMatrix::zeros(a.spec(), b.rows(), a.cols());
  for (std::size_t m = 0; m < b.rows(); ++m) {
    for (std::size_t n = 0; n < a.cols(); ++n) {
      Signal& dst = out.entry(m, n);
      for (std::size_t k = 0; k < b.cols(); ++k) {
        const Signal c = convolve_direct(b.entry(m, k), a.entry(k, n));
        for (std::size_t g = 0; g < dst.size(); ++g) dst[g] += c[g];
      }
    }
  }
  return out;
}

FilterMatrix adjoint(const FilterMatrix& a) {
  const GroupSpec& spec = a.spec();
  FilterMatrix out = FilterMatrix::zeros(spec, a.cols(), a.rows());
  for (std::size_t m = 0; m < a.rows(); ++m) {
    for (std::size_t n = 0; n < a.cols(); ++n) {
      const Signal& src = a.entry(m, n);
      Signal& dst = out.entry(n, m);
      for (std::size_t g = 0; g < spec.cardinality(); ++g) dst[g] = std::conj(src[spec.neg_index(g)]);
    }
  }
  return out;
}

FilterMatrix scale(const FilterMatrix& a, cplx c) {
  FilterMatrix out = a;
  for (std::size_t m = 0; m < a.rows(); ++m) {
    for (std::size_t n = 0; n < a.cols(); ++n) {
      for (cplx& v : out.entry(m, n).values()) v *= c;
    }
  }
  return out;
}

std::variant<FilterMatrix, TranslationVarianceReport> extract_filter(const Eigen::MatrixXcd& op,
                                                                     const GroupSpec& spec, std::size_t rows,
                                                                     std::size_t cols, double tolerance) {
  const std::size_t order = spec.cardinality();
  if (rows < 1 || cols < 1) throw ShapeError("extract_filter: rows and cols must be >= 1");
  if (static_cast<std::size_t>(op.rows()) != order * rows || static_cast<std::size_t>(op.cols()) != order * cols) {
    throw ShapeError("extract_filter: expected a " + std::to_string(order * rows) + " x " +
                     std::to_string(order * cols) + " matrix, got " + std::to_string(op.rows()) + " x " +
                     std::to_string(op.cols()));
  }

  // Responses to delta e_n sit in the columns (n, 0).
  FilterMatrix a = FilterMatrix::zeros(spec, rows, cols);
  for (std::size_t m = 0; m < rows; ++m) {
    for (std::size_t n = 0; n < cols; ++n) {
      for (std::size_t h = 0; h < order; ++h) a.entry(m, n)[h] = op(m * order + h, n * order);
    }
  }

  // The operator is LTI iff column (n, g) equals T_g of column (n, 0), i.e.
  // op((m, h), (n, g)) = a_{m,n}(h - g) for every entry.
  TranslationVarianceReport worst;
  for (std::size_t n = 0; n < cols; ++n) {
    for (std::size_t g = 0; g < order; ++g) {
      for (std::size_t m = 0; m < rows; ++m) {
        for (std::size_t h = 0; h < order; ++h) {
          const double dev = std::abs(op(m * order + h, n * order + g) - a.entry(m, n)[spec.sub_index(h, g)]);
          if (dev > worst.max_deviation) worst = {dev, g, n, m, h};
        }
      }
    }
  }
  const double scale = std::max(1.0, op.cwiseAbs().maxCoeff());
  if (worst.max_deviation > tolerance * scale) return worst;
  return a;
}

}  // namespace gconv
