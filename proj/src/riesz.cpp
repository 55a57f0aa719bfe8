#include "gconv/riesz.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "gconv/linalg.hpp"

namespace gconv {

GeneratorSystem::GeneratorSystem(GroupSpec ambient, GroupSpec acting, std::vector<Element> embedding,
                                 std::vector<Signal> generators)
    : ambient_(std::move(ambient)),
      acting_(std::move(acting)),
      embedding_(std::move(embedding)),
      generators_(std::move(generators)) {
  if (embedding_.size() != acting_.rank()) {
    throw ShapeError("GeneratorSystem: need one embedding image per cyclic factor of the acting group (" +
                     std::to_string(acting_.rank()) + "), got " + std::to_string(embedding_.size()));
  }
  if (generators_.empty()) throw ShapeError("GeneratorSystem: at least one generator is required");
  for (const auto& phi : generators_) {
    if (phi.spec() != ambient_) throw ShapeError("GeneratorSystem: generators must live on the ambient group");
    if (phi.domain() != Domain::Group) throw ShapeError("GeneratorSystem: generators must be group-domain signals");
  }

  std::vector<std::size_t> gen_index;
  for (std::size_t j = 0; j < embedding_.size(); ++j) {
    const std::size_t e = ambient_.index_of(embedding_[j]);  // validates against K
    std::size_t multiple = 0;
    for (std::size_t k = 0; k < acting_.orders()[j]; ++k) multiple = ambient_.add_index(multiple, e);
    if (multiple != 0) {
      throw std::invalid_argument("GeneratorSystem: embedding is not a homomorphism; the order of the image of "
                                  "generator " + std::to_string(j) + " does not divide " +
                                  std::to_string(acting_.orders()[j]));
    }
    gen_index.push_back(e);
  }

  image_.resize(acting_.cardinality());
  for (std::size_t g = 0; g < acting_.cardinality(); ++g) {
    const Element el = acting_.element_at(g);
    std::size_t img = 0;
    for (std::size_t j = 0; j < el.residues.size(); ++j) {
      for (std::size_t k = 0; k < el.residues[j]; ++k) img = ambient_.add_index(img, gen_index[j]);
    }
    image_[g] = img;
  }
  if (std::set<std::size_t>(image_.begin(), image_.end()).size() != image_.size()) {
    throw std::invalid_argument("GeneratorSystem: embedding is not injective");
  }
}

Signal GeneratorSystem::act(std::size_t g, const Signal& f) const {
  if (g >= acting_.cardinality()) throw ShapeError("GeneratorSystem::act: element index out of range");
  return translate(f, image_[g]);
}

GramData GramData::from_correlations(FilterMatrix correlations) {
  if (correlations.rows() != correlations.cols()) throw ShapeError("GramData: correlations must be square");
  const SymbolMatrix s = symbol(correlations);
  std::vector<Eigen::MatrixXcd> gt;
  gt.reserve(s.size());
  for (const auto& m : s.data()) gt.push_back(m.transpose());
  SymbolMatrix g(s.spec(), s.rows(), s.cols(), std::move(gt), true);
  return GramData{std::move(correlations), std::move(g)};
}

GramData GramData::from_gram_symbol(SymbolMatrix gram_symbol) {
  if (!gram_symbol.square()) throw ShapeError("GramData: Gram symbol must be square");
  std::vector<Eigen::MatrixXcd> at;
  at.reserve(gram_symbol.size());
  for (const auto& m : gram_symbol.data()) at.push_back(m.transpose());
  FilterMatrix a = filter_from_symbol(
      SymbolMatrix(gram_symbol.spec(), gram_symbol.rows(), gram_symbol.cols(), std::move(at), gram_symbol.exact()));
  return GramData{std::move(a), std::move(gram_symbol)};
}

GramData gram(const GeneratorSystem& sys) {
  const GroupSpec& G = sys.acting();
  const GroupSpec& K = sys.ambient();
  const std::size_t n_gen = sys.size();
  FilterMatrix a = FilterMatrix::zeros(G, n_gen, n_gen);
  for (std::size_t m = 0; m < n_gen; ++m) {
    const Signal& phi_m = sys.generators()[m];
    for (std::size_t n = 0; n < n_gen; ++n) {
      const Signal& phi_n = sys.generators()[n];
      for (std::size_t g = 0; g < G.cardinality(); ++g) {
        // <phi_n, pi_g phi_m> = sum_k phi_n(k) conj(phi_m(k - iota(g)))
        const std::size_t shift = sys.embed(g);
        cplx acc{};
        for (std::size_t k = 0; k < K.cardinality(); ++k) acc += phi_n[k] * std::conj(phi_m[K.sub_index(k, shift)]);
        a.entry(m, n)[g] = acc;
      }
    }
  }
  return GramData::from_correlations(std::move(a));
}

Signal synthesis(const GeneratorSystem& sys, const VectorSignal& x) {
  if (x.spec() != sys.acting()) throw ShapeError("synthesis: coefficients must live on the acting group");
  if (x.size() != sys.size()) {
    throw ShapeError("synthesis: " + std::to_string(x.size()) + " coefficient channels for " +
                     std::to_string(sys.size()) + " generators");
  }
  const GroupSpec& K = sys.ambient();
  Signal f = Signal::zeros(K);
  for (std::size_t n = 0; n < sys.size(); ++n) {
    const Signal& phi = sys.generators()[n];
    for (std::size_t g = 0; g < sys.acting().cardinality(); ++g) {
      const cplx c = x[n][g];
      if (c == cplx{}) continue;
      const std::size_t shift = sys.embed(g);
      for (std::size_t k = 0; k < K.cardinality(); ++k) f[K.add_index(k, shift)] += c * phi[k];
    }
  }
  return f;
}

RieszReport riesz_analysis(const GramData& data, std::optional<double> det_tolerance) {
  if (det_tolerance && !(*det_tolerance > 0.0)) throw std::invalid_argument("riesz_analysis: det tolerance must be > 0");
  const SymbolMatrix& g = data.gram_symbol;
  const HermitianExtremes ext = hermitian_extremal_eigs(g.data());

  RieszReport r;
  r.acting = g.spec().orders();
  r.generators = g.rows();
  r.exact = g.exact();
  r.bessel_bound = ext.max_eigenvalue;
  r.argmax_xi = ext.argmax_xi;
  r.min_eigenvalue = ext.min_eigenvalue;
  r.argmin_xi = ext.argmin_xi;
  r.hermitian_deviation = ext.hermitian_deviation;

  // det of the symmetrized matrix is the product of its (real) eigenvalues.
  r.min_det = std::numeric_limits<double>::infinity();
  for (std::size_t xi = 0; xi < g.size(); ++xi) {
    double det = 1.0;
    for (double ev : linalg::hermitian_eigenvalues(g.at(xi))) det *= ev;
    if (det < r.min_det) {
      r.min_det = det;
      r.argmin_det_xi = xi;
    }
  }
  r.det_tolerance =
      det_tolerance.value_or(1e-12 * std::pow(std::max(0.0, r.bessel_bound), static_cast<double>(g.rows())));
  r.is_riesz = g.exact() && r.min_det > r.det_tolerance;
  if (r.is_riesz) r.lower_bound = r.min_eigenvalue;
  return r;
}

RieszReport riesz_analysis(const GeneratorSystem& sys, std::optional<double> det_tolerance) {
  return riesz_analysis(gram(sys), det_tolerance);
}

PositivityReport positivity_check(const GramData& data) {
  PositivityReport r;
  for (const auto& m : data.gram_symbol.data()) {
    r.hermitian_deviation = std::max(r.hermitian_deviation, linalg::hermitian_deviation(m));
    const double lmin = linalg::hermitian_eigenvalues(m).front();
    r.psd_deviation = std::max(r.psd_deviation, -lmin);
  }
  return r;
}

}  // namespace gconv
