#include "fft.hpp"

#include <algorithm>
#include <stdexcept>

#include "gconv/group.hpp"

namespace gconv::detail {

namespace {

constexpr std::size_t kMaxDirectPrime = 61;

std::vector<std::size_t> factorize(std::size_t n) {
  std::vector<std::size_t> f;
  // Radix 4 first, then 2, then odd primes.
  while (n % 4 == 0) {
    f.push_back(4);
    n /= 4;
  }
  while (n % 2 == 0) {
    f.push_back(2);
    n /= 2;
  }
  for (std::size_t p = 3; p * p <= n; p += 2) {
    while (n % p == 0) {
      f.push_back(p);
      n /= p;
    }
  }
  if (n > 1) f.push_back(n);
  return f;
}

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

}  // namespace

DftPlan::DftPlan(std::size_t n, int sign) : n_(n), sign_(sign) {
  if (n == 0) throw std::invalid_argument("DftPlan: length must be positive");
  if (sign != 1 && sign != -1) throw std::invalid_argument("DftPlan: sign must be +1 or -1");
  factors_ = factorize(n);
  use_bluestein_ = !factors_.empty() && *std::max_element(factors_.begin(), factors_.end()) > kMaxDirectPrime;

  if (!use_bluestein_) {
    roots_.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
      roots_[k] = unit_root(sign * static_cast<double>(k) / static_cast<double>(n));
    }
    return;
  }

  // Bluestein: w^{jk} = b_j b_k conj(b_{k-j}) with b_j = exp(sign pi i j^2 / n).
  conv_len_ = next_pow2(2 * n - 1);
  chirp_.resize(n);
  const std::size_t two_n = 2 * n;
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t q = (j * j) % two_n;
    chirp_[j] = unit_root(sign * static_cast<double>(q) / static_cast<double>(two_n));
  }
  conv_plans_.emplace_back(conv_len_, -1);
  conv_plans_.emplace_back(conv_len_, +1);
  kernel_hat_.assign(conv_len_, cplx{});
  kernel_hat_[0] = std::conj(chirp_[0]);
  for (std::size_t j = 1; j < n; ++j) {
    kernel_hat_[j] = std::conj(chirp_[j]);
    kernel_hat_[conv_len_ - j] = std::conj(chirp_[j]);
  }
  conv_plans_[0].execute(kernel_hat_);
}

void DftPlan::execute(std::span<cplx> data) const {
  if (data.size() != n_) throw std::invalid_argument("DftPlan: length mismatch");
  if (n_ == 1) return;
  if (use_bluestein_) {
    bluestein(data);
    return;
  }
  std::vector<cplx> out(n_);
  mixed_radix(data.data(), 1, out.data(), n_, 0);
  std::copy(out.begin(), out.end(), data.begin());
}

// Decimation in time: for n = p m,
//   X[k + q m] = sum_r W_n^{r (k + q m)} Y_r[k],  Y_r = DFT_m(x[r + p t]).
void DftPlan::mixed_radix(const cplx* in, std::size_t stride, cplx* out, std::size_t n,
                          std::size_t level) const {
  if (n == 1) {
    out[0] = in[0];
    return;
  }
  const std::size_t p = factors_[level];
  const std::size_t m = n / p;
  for (std::size_t r = 0; r < p; ++r) {
    mixed_radix(in + r * stride, stride * p, out + r * m, m, level + 1);
  }

  const std::size_t step = n_ / n;  // W_n^e = roots_[step * e]
  const std::size_t p_step = n_ / p;
  std::vector<cplx> t(p);
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t r = 0; r < p; ++r) {
      t[r] = out[r * m + k] * roots_[(step * ((r * k) % n)) % n_];
    }
    for (std::size_t q = 0; q < p; ++q) {
      cplx acc = t[0];
      for (std::size_t r = 1; r < p; ++r) acc += t[r] * roots_[p_step * ((r * q) % p)];
      out[q * m + k] = acc;
    }
  }
}

void DftPlan::bluestein(std::span<cplx> data) const {
  std::vector<cplx> a(conv_len_, cplx{});
  for (std::size_t j = 0; j < n_; ++j) a[j] = data[j] * chirp_[j];
  conv_plans_[0].execute(a);
  for (std::size_t k = 0; k < conv_len_; ++k) a[k] *= kernel_hat_[k];
  conv_plans_[1].execute(a);
  const double scale = 1.0 / static_cast<double>(conv_len_);
  for (std::size_t k = 0; k < n_; ++k) data[k] = chirp_[k] * a[k] * scale;
}

void dft_axes(std::span<cplx> data, const std::vector<std::size_t>& orders, int sign) {
  std::size_t total = 1;
  for (std::size_t s : orders) total *= s;
  if (total != data.size()) throw std::invalid_argument("dft_axes: data length does not match the group");

  std::size_t inner = total;  // product of axis sizes after the current axis
  for (std::size_t axis = 0; axis < orders.size(); ++axis) {
    const std::size_t s = orders[axis];
    inner /= s;
    if (s == 1) continue;
    const std::size_t outer = total / (s * inner);
    const DftPlan plan(s, sign);
    std::vector<cplx> line(s);
    for (std::size_t o = 0; o < outer; ++o) {
      for (std::size_t i = 0; i < inner; ++i) {
        cplx* base = data.data() + o * s * inner + i;
        for (std::size_t j = 0; j < s; ++j) line[j] = base[j * inner];
        plan.execute(line);
        for (std::size_t j = 0; j < s; ++j) base[j * inner] = line[j];
      }
    }
  }
}

}  // namespace gconv::detail
