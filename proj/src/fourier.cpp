#include "gconv/fourier.hpp"

#include "fft.hpp"

namespace gconv {

Signal::Signal(GroupSpec spec, std::vector<cplx> values, Domain domain)
    : spec_(std::move(spec)), values_(std::move(values)), domain_(domain) {
  if (values_.size() != spec_.cardinality()) {
    throw ShapeError("Signal: " + std::to_string(values_.size()) + " values given for group " + spec_.to_string() +
                     " of order " + std::to_string(spec_.cardinality()));
  }
}

Signal Signal::zeros(const GroupSpec& spec, Domain domain) {
  return Signal(spec, std::vector<cplx>(spec.cardinality()), domain);
}

Signal Signal::delta(const GroupSpec& spec, std::size_t at) {
  if (at >= spec.cardinality()) throw ShapeError("Signal::delta: index out of range");
  Signal s = zeros(spec);
  s[at] = 1.0;
  return s;
}

double Signal::norm_squared() const {
  double acc = 0.0;
  for (const cplx& v : values_) acc += std::norm(v);
  return acc;
}

SymbolMatrix::SymbolMatrix(GroupSpec spec, std::size_t rows, std::size_t cols, std::vector<Eigen::MatrixXcd> data,
                           bool exact)
    : spec_(std::move(spec)), rows_(rows), cols_(cols), data_(std::move(data)), exact_(exact) {
  if (rows_ < 1 || cols_ < 1) throw ShapeError("SymbolMatrix: rows and cols must be >= 1");
  if (data_.size() != spec_.cardinality()) throw ShapeError("SymbolMatrix: one matrix per dual point is required");
  for (const auto& m : data_) {
    if (static_cast<std::size_t>(m.rows()) != rows_ || static_cast<std::size_t>(m.cols()) != cols_) {
      throw ShapeError("SymbolMatrix: matrix shape differs from declared rows x cols");
    }
  }
}

Signal forward(const Signal& x) {
  if (x.domain() != Domain::Group) throw std::invalid_argument("forward: signal must live on the group, not the dual");
  std::vector<cplx> v(x.values().begin(), x.values().end());
  detail::dft_axes(v, x.spec().orders(), -1);
  return Signal(x.spec(), std::move(v), Domain::Dual);
}

Signal inverse(const Signal& X) {
  if (X.domain() != Domain::Dual) throw std::invalid_argument("inverse: signal must live on the dual group");
  std::vector<cplx> v(X.values().begin(), X.values().end());
  detail::dft_axes(v, X.spec().orders(), +1);
  const double scale = 1.0 / static_cast<double>(X.size());
  for (cplx& c : v) c *= scale;
  return Signal(X.spec(), std::move(v), Domain::Group);
}

namespace {

void require_same_group(const Signal& x, const Signal& y, const char* what) {
  if (x.spec() != y.spec()) {
    throw ShapeError(std::string(what) + ": signals live on different groups " + x.spec().to_string() + " and " +
                     y.spec().to_string());
  }
  if (x.domain() != Domain::Group || y.domain() != Domain::Group) {
    throw std::invalid_argument(std::string(what) + ": both signals must live on the group");
  }
}

}  // namespace

Signal convolve(const Signal& x, const Signal& y) {
  require_same_group(x, y, "convolve");
  Signal X = forward(x);
  const Signal Y = forward(y);
  for (std::size_t i = 0; i < X.size(); ++i) X[i] *= Y[i];
  return inverse(X);
}

Signal convolve_direct(const Signal& x, const Signal& y) {
  require_same_group(x, y, "convolve_direct");
  const GroupSpec& spec = x.spec();
  Signal out = Signal::zeros(spec);
  for (std::size_t h = 0; h < spec.cardinality(); ++h) {
    cplx acc{};
    for (std::size_t g = 0; g < spec.cardinality(); ++g) acc += x[g] * y[spec.sub_index(h, g)];
    out[h] = acc;
  }
  return out;
}

Signal translate(const Signal& x, std::size_t h) {
  const GroupSpec& spec = x.spec();
  if (h >= spec.cardinality()) throw ShapeError("translate: shift out of range");
  Signal out = Signal::zeros(spec, x.domain());
  for (std::size_t g = 0; g < spec.cardinality(); ++g) out[spec.add_index(g, h)] = x[g];
  return out;
}

SymbolMatrix grid_symbol(const LatticeFilter& filter, std::size_t grid) {
  if (grid < 1) throw std::invalid_argument("grid_symbol: grid size K must be >= 1");
  if (filter.dim < 1) throw std::invalid_argument("grid_symbol: lattice dimension must be >= 1");
  if (filter.taps.empty()) throw std::invalid_argument("grid_symbol: filter has empty support");
  for (const auto& tap : filter.taps) {
    if (tap.offset.size() != filter.dim) throw ShapeError("grid_symbol: tap offset has wrong dimension");
    if (static_cast<std::size_t>(tap.value.rows()) != filter.rows ||
        static_cast<std::size_t>(tap.value.cols()) != filter.cols) {
      throw ShapeError("grid_symbol: tap value has wrong shape");
    }
  }

  GroupSpec spec(std::vector<std::size_t>(filter.dim, grid));
  const auto K = static_cast<std::int64_t>(grid);
  std::vector<Eigen::MatrixXcd> data;
  data.reserve(spec.cardinality());
  for (std::size_t idx = 0; idx < spec.cardinality(); ++idx) {
    const Element k = spec.element_at(idx);
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(filter.rows, filter.cols);
    for (const auto& tap : filter.taps) {
      // z^{-n} = exp(-2 pi i sum_j n_j k_j / K), reduced mod K per axis.
      std::int64_t num = 0;
      for (std::size_t j = 0; j < filter.dim; ++j) {
        const std::int64_t n = ((tap.offset[j] % K) + K) % K;
        num = (num + n * static_cast<std::int64_t>(k.residues[j])) % K;
      }
      acc += unit_root(-static_cast<double>(num) / static_cast<double>(K)) * tap.value;
    }
    data.push_back(std::move(acc));
  }
  return SymbolMatrix(std::move(spec), filter.rows, filter.cols, std::move(data), false);
}

}  // namespace gconv
