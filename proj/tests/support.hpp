#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "gconv/convop.hpp"
#include "gconv/fourier.hpp"
#include "gconv/group.hpp"
#include "gconv/riesz.hpp"

namespace testing {

using gconv::cplx;
using gconv::FilterMatrix;
using gconv::GroupSpec;
using gconv::Signal;
using gconv::VectorSignal;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::size_t uniform(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(engine_);
  }

  cplx gaussian(double sigma = 1.0) {
    std::normal_distribution<double> d(0.0, sigma / std::sqrt(2.0));
    const double re = d(engine_);
    return {re, d(engine_)};
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

/// Random product of cyclic factors with cardinality at most `max_order`.
inline GroupSpec random_group(Rng& rng, std::size_t max_order = 64) {
  const std::size_t rank = rng.uniform(1, 3);
  std::vector<std::size_t> orders;
  std::size_t remaining = max_order;
  for (std::size_t j = 0; j < rank && remaining >= 1; ++j) {
    const std::size_t s = rng.uniform(1, std::min<std::size_t>(remaining, j == 0 ? max_order : 8));
    orders.push_back(s);
    remaining /= s;
  }
  return GroupSpec(orders);
}

inline Signal random_signal(Rng& rng, const GroupSpec& spec, double sigma = 1.0) {
  std::vector<cplx> v(spec.cardinality());
  for (auto& z : v) z = rng.gaussian(sigma);
  return Signal(spec, std::move(v));
}

/// Taps have variance 1/|G| so that symbol entries are of unit variance.
inline FilterMatrix random_filter(Rng& rng, const GroupSpec& spec, std::size_t rows, std::size_t cols) {
  const double sigma = 1.0 / std::sqrt(static_cast<double>(spec.cardinality()));
  std::vector<Signal> entries;
  for (std::size_t k = 0; k < rows * cols; ++k) entries.push_back(random_signal(rng, spec, sigma));
  return FilterMatrix(spec, rows, cols, std::move(entries));
}

inline VectorSignal random_vector(Rng& rng, const GroupSpec& spec, std::size_t n) {
  std::vector<Signal> comps;
  for (std::size_t k = 0; k < n; ++k) comps.push_back(random_signal(rng, spec));
  return VectorSignal(spec, std::move(comps));
}

// Index arithmetic written out independently of GroupSpec.

inline std::vector<std::size_t> decode(std::size_t index, const std::vector<std::size_t>& orders) {
  std::vector<std::size_t> r(orders.size());
  for (std::size_t j = orders.size(); j-- > 0;) {
    r[j] = index % orders[j];
    index /= orders[j];
  }
  return r;
}

inline std::size_t encode(const std::vector<std::size_t>& r, const std::vector<std::size_t>& orders) {
  std::size_t index = 0;
  for (std::size_t j = 0; j < orders.size(); ++j) index = index * orders[j] + r[j];
  return index;
}

inline std::size_t difference(std::size_t a, std::size_t b, const std::vector<std::size_t>& orders) {
  auto ra = decode(a, orders);
  const auto rb = decode(b, orders);
  for (std::size_t j = 0; j < orders.size(); ++j) ra[j] = (ra[j] + orders[j] - rb[j]) % orders[j];
  return encode(ra, orders);
}

inline cplx kernel(std::size_t g, std::size_t xi, const std::vector<std::size_t>& orders) {
  const auto rg = decode(g, orders);
  const auto rx = decode(xi, orders);
  double phase = 0.0;
  for (std::size_t j = 0; j < orders.size(); ++j) {
    phase += static_cast<double>(rg[j] * rx[j] % orders[j]) / static_cast<double>(orders[j]);
  }
  return std::polar(1.0, 2.0 * std::numbers::pi * phase);
}

/// Naive O(|G|^2) forward transform.
inline std::vector<cplx> naive_dft(std::span<const cplx> x, const std::vector<std::size_t>& orders) {
  std::vector<cplx> out(x.size());
  for (std::size_t xi = 0; xi < x.size(); ++xi) {
    cplx acc = 0.0;
    for (std::size_t g = 0; g < x.size(); ++g) acc += x[g] * std::conj(kernel(g, xi, orders));
    out[xi] = acc;
  }
  return out;
}

/// Block matrix with entry ((m,h),(n,g)) = a_{m,n}(h - g).
inline Eigen::MatrixXcd block_circulant(const FilterMatrix& a) {
  const auto& orders = a.spec().orders();
  const std::size_t order = a.spec().cardinality();
  Eigen::MatrixXcd d(a.rows() * order, a.cols() * order);
  for (std::size_t m = 0; m < a.rows(); ++m) {
    for (std::size_t n = 0; n < a.cols(); ++n) {
      for (std::size_t h = 0; h < order; ++h) {
        for (std::size_t g = 0; g < order; ++g) d(m * order + h, n * order + g) = a.entry(m, n)[difference(h, g, orders)];
      }
    }
  }
  return d;
}

inline Eigen::VectorXcd stack(const VectorSignal& x) {
  const std::size_t order = x.spec().cardinality();
  Eigen::VectorXcd v(x.size() * order);
  for (std::size_t n = 0; n < x.size(); ++n) {
    for (std::size_t g = 0; g < order; ++g) v(n * order + g) = x[n][g];
  }
  return v;
}

inline cplx inner(std::span<const cplx> u, std::span<const cplx> v) {
  cplx acc = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) acc += u[i] * std::conj(v[i]);
  return acc;
}

inline cplx inner(const VectorSignal& x, const VectorSignal& y) {
  cplx acc = 0.0;
  for (std::size_t n = 0; n < x.size(); ++n) acc += inner(x[n].values(), y[n].values());
  return acc;
}

inline double max_abs_diff(std::span<const cplx> a, std::span<const cplx> b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

inline double max_abs_diff(const FilterMatrix& a, const FilterMatrix& b) {
  double m = 0.0;
  for (std::size_t k = 0; k < a.entries().size(); ++k) {
    m = std::max(m, max_abs_diff(a.entries()[k].values(), b.entries()[k].values()));
  }
  return m;
}

inline double rel_diff(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

/// System on K = Z_{n1} x ... with G = Z_{m1} x ..., m_j | n_j, iota(e_j) = (n_j/m_j) e_j.
/// Keeps N|G| <= |K|.
inline gconv::GeneratorSystem random_system(Rng& rng, std::size_t max_ambient = 64, std::size_t max_generators = 3) {
  for (;;) {
    const std::size_t rank = rng.uniform(1, 2);
    std::vector<std::size_t> ambient, acting;
    std::size_t k_card = 1;
    for (std::size_t j = 0; j < rank; ++j) {
      const std::size_t n = rng.uniform(1, rank == 1 ? max_ambient : 8);
      std::vector<std::size_t> divisors;
      for (std::size_t d = 1; d <= n; ++d) {
        if (n % d == 0) divisors.push_back(d);
      }
      ambient.push_back(n);
      acting.push_back(divisors[rng.uniform(0, divisors.size() - 1)]);
      k_card *= n;
    }
    if (k_card > max_ambient) continue;
    GroupSpec K(ambient), G(acting);
    const std::size_t max_n = std::min(max_generators, K.cardinality() / G.cardinality());
    const std::size_t count = rng.uniform(1, max_n);
    std::vector<gconv::Element> embedding;
    for (std::size_t j = 0; j < rank; ++j) {
      std::vector<std::size_t> r(rank, 0);
      r[j] = ambient[j] / acting[j];
      if (r[j] == ambient[j]) r[j] = 0;
      embedding.push_back({r});
    }
    std::vector<Signal> gens;
    for (std::size_t n = 0; n < count; ++n) gens.push_back(random_signal(rng, K));
    return gconv::GeneratorSystem(K, G, std::move(embedding), std::move(gens));
  }
}

}  // namespace testing
