#pragma once

// Internal: unnormalized multidimensional DFT over a product of cyclic axes.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace gconv::detail {

using cplx = std::complex<double>;

/// Plan for a one-dimensional DFT of length n,
///   out[k] = sum_j in[j] exp(sign * 2 pi i j k / n),  sign = +1 or -1.
/// Lengths whose prime factors are all small use recursive mixed-radix
/// Cooley-Tukey; anything with a large prime factor goes through Bluestein.
/// A plan is immutable once built; scratch space is allocated per call.
class DftPlan {
 public:
  DftPlan(std::size_t n, int sign);

  std::size_t size() const { return n_; }
  void execute(std::span<cplx> data) const;

 private:
  void mixed_radix(const cplx* in, std::size_t stride, cplx* out, std::size_t n, std::size_t level) const;
  void bluestein(std::span<cplx> data) const;

  std::size_t n_;
  int sign_;
  bool use_bluestein_ = false;
  std::vector<std::size_t> factors_;
  std::vector<cplx> roots_;  // exp(sign 2 pi i k / n), k < n

  // Bluestein state.
  std::size_t conv_len_ = 0;
  std::vector<cplx> chirp_;           // exp(sign pi i j^2 / n)
  std::vector<cplx> kernel_hat_;      // forward transform of conj(chirp) laid out cyclically
  std::vector<DftPlan> conv_plans_;   // [forward, backward] of length conv_len_
};

/// Transform `data` (row-major over `orders`, last axis fastest) along every
/// axis with the given sign. No normalization is applied.
void dft_axes(std::span<cplx> data, const std::vector<std::size_t>& orders, int sign);

}  // namespace gconv::detail
