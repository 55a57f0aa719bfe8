#include "gconv/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>

namespace gconv::linalg {

namespace {

using cplx = std::complex<double>;
constexpr int kMaxSweeps = 100;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// Rotation tangent for the 2x2 symmetric problem [[alpha, g], [g, beta]]:
// the root of t^2 + 2 zeta t - 1 = 0 with smaller magnitude.
double jacobi_tangent(double alpha, double beta, double g) {
  const double zeta = (beta - alpha) / (2.0 * g);
  const double sign = zeta >= 0.0 ? 1.0 : -1.0;
  return sign / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
}

}  // namespace

std::vector<double> singular_values(const Eigen::MatrixXcd& a) {
  if (a.size() == 0) return {};
  // Work on whichever orientation has fewer columns.
  Eigen::MatrixXcd w = a.cols() <= a.rows() ? Eigen::MatrixXcd(a) : Eigen::MatrixXcd(a.adjoint());
  const Eigen::Index n = w.cols();

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool rotated = false;
    for (Eigen::Index p = 0; p + 1 < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double alpha = w.col(p).squaredNorm();
        const double beta = w.col(q).squaredNorm();
        const cplx gamma = w.col(p).dot(w.col(q));  // a_p^* a_q
        const double g = std::abs(gamma);
        if (g == 0.0 || g <= kEps * std::sqrt(alpha * beta)) continue;
        rotated = true;
        const double t = jacobi_tangent(alpha, beta, g);
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        const cplx phase = gamma / g;
        // u = a_q e^{-i phi}; (a_p, u) <- (c a_p - s u, s a_p + c u)
        const Eigen::VectorXcd ap = w.col(p);
        const Eigen::VectorXcd u = w.col(q) * std::conj(phase);
        w.col(p) = c * ap - s * u;
        w.col(q) = s * ap + c * u;
      }
    }
    if (!rotated) break;
  }

  std::vector<double> sv(static_cast<std::size_t>(n));
  for (Eigen::Index j = 0; j < n; ++j) sv[static_cast<std::size_t>(j)] = w.col(j).norm();
  std::sort(sv.begin(), sv.end(), std::greater<>());
  return sv;
}

double spectral_norm(const Eigen::MatrixXcd& a) {
  const auto sv = singular_values(a);
  return sv.empty() ? 0.0 : sv.front();
}

std::vector<double> hermitian_eigenvalues(const Eigen::MatrixXcd& h) {
  if (h.rows() != h.cols()) throw std::invalid_argument("hermitian_eigenvalues: matrix must be square");
  const Eigen::Index n = h.rows();
  Eigen::MatrixXcd a = 0.5 * (h + h.adjoint());
  const double scale = a.norm();

  for (int sweep = 0; sweep < kMaxSweeps && scale > 0.0; ++sweep) {
    double off = 0.0;
    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) off += std::norm(a(p, q));
    }
    if (std::sqrt(off) <= kEps * scale) break;

    for (Eigen::Index p = 0; p + 1 < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double g = std::abs(a(p, q));
        if (g <= kEps * kEps * scale) continue;
        const cplx phase = a(p, q) / g;
        const double t = jacobi_tangent(a(p, p).real(), a(q, q).real(), g);
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        // A <- R^* A R with R(:,p) = c e_p - s conj(phase) e_q and
        // R(:,q) = s phase e_p + c e_q.
        for (Eigen::Index k = 0; k < n; ++k) {
          const cplx akp = a(k, p);
          const cplx akq = a(k, q);
          a(k, p) = c * akp - s * std::conj(phase) * akq;
          a(k, q) = s * phase * akp + c * akq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const cplx apk = a(p, k);
          const cplx aqk = a(q, k);
          a(p, k) = c * apk - s * phase * aqk;
          a(q, k) = s * std::conj(phase) * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
  }

  std::vector<double> ev(static_cast<std::size_t>(n));
  for (Eigen::Index j = 0; j < n; ++j) ev[static_cast<std::size_t>(j)] = a(j, j).real();
  std::sort(ev.begin(), ev.end());
  return ev;
}

double hermitian_deviation(const Eigen::MatrixXcd& h) {
  if (h.rows() != h.cols()) throw std::invalid_argument("hermitian_deviation: matrix must be square");
  return spectral_norm(h - h.adjoint());
}

}  // namespace gconv::linalg
