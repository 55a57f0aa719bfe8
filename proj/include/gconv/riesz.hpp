#pragma once

#include <optional>

#include "gconv/convop.hpp"
#include "gconv/spectral.hpp"

namespace gconv {

/// Generators phi_1..phi_N in l2(K) together with an action of G on l2(K)
/// by translations: pi_g f = f(. - iota(g)), where iota : G -> K is the
/// injective homomorphism determined by the images of the generators of
/// G's cyclic factors.
class GeneratorSystem {
 public:
  /// Throws std::invalid_argument when iota is not a homomorphism or not
  /// injective, ShapeError on inconsistent shapes.
  GeneratorSystem(GroupSpec ambient, GroupSpec acting, std::vector<Element> embedding, std::vector<Signal> generators);

  const GroupSpec& ambient() const { return ambient_; }
  const GroupSpec& acting() const { return acting_; }
  const std::vector<Element>& embedding() const { return embedding_; }
  const std::vector<Signal>& generators() const { return generators_; }
  std::size_t size() const { return generators_.size(); }

  /// iota(g) as an index into K.
  std::size_t embed(std::size_t g) const { return image_[g]; }

  /// pi_g f.
  Signal act(std::size_t g, const Signal& f) const;

 private:
  GroupSpec ambient_;
  GroupSpec acting_;
  std::vector<Element> embedding_;
  std::vector<Signal> generators_;
  std::vector<std::size_t> image_;
};

/// Correlations a_{m,n}(g) = <phi_n, pi_g phi_m> and the Gram symbol
/// G(xi) = A^(xi)^T. Can also be built from user-supplied correlations.
struct GramData {
  FilterMatrix correlations;
  SymbolMatrix gram_symbol;

  static GramData from_correlations(FilterMatrix correlations);
  /// Takes G(xi) directly; the correlations are recovered from its transpose.
  static GramData from_gram_symbol(SymbolMatrix gram_symbol);
};

GramData gram(const GeneratorSystem& sys);

/// f_x = sum_{n, g} x_n(g) pi_g phi_n.
Signal synthesis(const GeneratorSystem& sys, const VectorSignal& x);

struct RieszReport {
  std::vector<std::size_t> acting;
  std::size_t generators = 0;
  bool is_bessel = true;  // always true over a finite group
  double bessel_bound = 0.0;
  std::size_t argmax_xi = 0;
  double min_eigenvalue = 0.0;
  std::size_t argmin_xi = 0;
  bool is_riesz = false;
  std::optional<double> lower_bound;  // min_eigenvalue, present only when Riesz
  double min_det = 0.0;
  std::size_t argmin_det_xi = 0;
  double det_tolerance = 0.0;
  double hermitian_deviation = 0.0;
  bool exact = true;
};

RieszReport riesz_analysis(const GramData& data, std::optional<double> det_tolerance = std::nullopt);
RieszReport riesz_analysis(const GeneratorSystem& sys, std::optional<double> det_tolerance = std::nullopt);

struct PositivityReport {
  double hermitian_deviation = 0.0;  // max_xi ||G(xi) - G(xi)^*||_2
  double psd_deviation = 0.0;        // max_xi max(0, -lambda_min(G(xi)))
};

PositivityReport positivity_check(const GramData& data);

}  // namespace gconv
