// Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <unistd.h>

#include "gconv/cli.hpp"
#include "gconv/io.hpp"
#include "gconv/linalg.hpp"
#include "gconv/oracle.hpp"
#include "gconv/spectral.hpp"
#include "support.hpp"

using namespace gconv;
using namespace testing;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

std::size_t random_channels(Rng& rng) { return rng.uniform(1, 4); }

double max_abs(const Eigen::MatrixXcd& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

Outcome norm_formula() {
  Outcome out;
  Rng rng(101);
  const auto start = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const GroupSpec spec = random_group(rng);
    const FilterMatrix a = random_filter(rng, spec, random_channels(rng), random_channels(rng));
    const double fast = operator_norm(symbol(a)).value;
    const double dense = oracle::dense_svd_extremes(oracle::densify(a)).sigma_max;
    worst = std::max(worst, rel_diff(fast, dense));
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out.require(worst <= 1e-9, "relative deviation " + fmt(worst));
  out.require(secs < 10.0, "runtime " + fmt(secs) + " s");
  out.detail = out.pass ? "max rel dev " + fmt(worst) + ", " + fmt(secs) + " s" : out.detail;
  return out;
}

/// Random square symbol with one frequency forced singular, pulled back to taps.
FilterMatrix singular_at(Rng& rng, const GroupSpec& spec, std::size_t n, std::size_t xi0) {
  std::vector<Eigen::MatrixXcd> data(spec.cardinality(), Eigen::MatrixXcd(n, n));
  for (auto& m : data) {
    for (Eigen::Index i = 0; i < m.size(); ++i) m(i) = rng.gaussian();
  }
  Eigen::MatrixXcd& z = data[xi0];
  if (n == 1) {
    z(0, 0) = 0.0;
  } else {
    z.col(n - 1) = z.leftCols(n - 1) * Eigen::VectorXcd::Ones(n - 1);
  }
  return filter_from_symbol(SymbolMatrix(spec, n, n, std::move(data)));
}

Outcome inverse_formula() {
  Outcome out;
  Rng rng(202);
  double worst_norm = 0.0, worst_tap = 0.0;
  int accepted = 0;
  while (accepted < 100) {
    const GroupSpec spec = random_group(rng);
    const std::size_t n = random_channels(rng);
    const FilterMatrix a = random_filter(rng, spec, n, n);
    const SymbolMatrix s = symbol(a);
    if (invertibility(s).min_det_abs < 0.1) continue;
    ++accepted;
    const double fast = inverse_norm(s).value;
    const double dense = 1.0 / oracle::dense_svd_extremes(oracle::densify(a)).sigma_min;
    worst_norm = std::max(worst_norm, rel_diff(fast, dense));
    worst_tap = std::max(worst_tap, max_abs_diff(compose(a, inverse_filter(a)), FilterMatrix::identity(spec, n)));
  }
  out.require(worst_norm <= 1e-9, "inverse norm relative deviation " + fmt(worst_norm));
  out.require(worst_tap < 1e-9, "A o A^-1 tap deviation " + fmt(worst_tap));

  double worst_det = 0.0;
  bool all_rejected = true;
  for (int trial = 0; trial < 20; ++trial) {
    const GroupSpec spec = random_group(rng);
    const std::size_t n = random_channels(rng);
    const FilterMatrix a = singular_at(rng, spec, n, rng.uniform(0, spec.cardinality() - 1));
    const Invertibility inv = invertibility(symbol(a));
    all_rejected = all_rejected && !inv.invertible;
    worst_det = std::max(worst_det, inv.min_det_abs);
  }
  out.require(all_rejected, "a filter with a symbol zero was reported invertible");
  out.require(worst_det < 1e-12, "forced-zero min_det_abs " + fmt(worst_det));
  if (out.pass) {
    out.detail = "norm dev " + fmt(worst_norm) + ", tap dev " + fmt(worst_tap) + ", singular min|det| " + fmt(worst_det);
  }
  return out;
}

Outcome cstar_isomorphism() {
  Outcome out;
  Rng rng(303);
  double worst_compose = 0.0, worst_adjoint = 0.0, worst_cstar = 0.0, worst_direct = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const GroupSpec spec = random_group(rng);
    const std::size_t p = random_channels(rng), q = random_channels(rng), r = random_channels(rng);
    const FilterMatrix a = random_filter(rng, spec, q, p);
    const FilterMatrix b = random_filter(rng, spec, r, q);
    const SymbolMatrix sa = symbol(a), sb = symbol(b);
    const FilterMatrix ba = compose(b, a);
    const SymbolMatrix sba = symbol(ba);
    const SymbolMatrix sadj = symbol(adjoint(a));
    for (std::size_t xi = 0; xi < spec.cardinality(); ++xi) {
      worst_compose = std::max(worst_compose, max_abs(sba.at(xi) - sb.at(xi) * sa.at(xi)));
      worst_adjoint = std::max(worst_adjoint, max_abs(sadj.at(xi) - sa.at(xi).adjoint()));
    }
    worst_direct = std::max(worst_direct, max_abs_diff(ba, compose_direct(b, a)));
    const double norm = operator_norm(sa).value;
    worst_cstar = std::max(worst_cstar, rel_diff(operator_norm(symbol(compose(adjoint(a), a))).value, norm * norm));
  }
  out.require(worst_compose <= 1e-10, "symbol(compose) deviation " + fmt(worst_compose));
  out.require(worst_direct <= 1e-10, "compose vs direct convolution " + fmt(worst_direct));
  out.require(worst_adjoint <= 1e-10, "symbol(adjoint) deviation " + fmt(worst_adjoint));
  out.require(worst_cstar <= 1e-9, "C* identity relative deviation " + fmt(worst_cstar));
  if (out.pass) {
    out.detail = "compose " + fmt(worst_compose) + ", adjoint " + fmt(worst_adjoint) + ", C* " + fmt(worst_cstar);
  }
  return out;
}

Outcome multiplier_equivalence() {
  Outcome out;
  Rng rng(404);
  double worst_mult = 0.0, worst_shift = 0.0;
  bool recovered = true;
  for (int trial = 0; trial < 100; ++trial) {
    const GroupSpec spec = random_group(rng);
    const std::size_t m = random_channels(rng), n = random_channels(rng);
    const FilterMatrix a = random_filter(rng, spec, m, n);
    const VectorSignal x = random_vector(rng, spec, n);
    const VectorSignal y = apply(a, x);
    const SymbolMatrix s = symbol(a);
    std::vector<Signal> xh, yh;
    for (std::size_t k = 0; k < n; ++k) xh.push_back(forward(x[k]));
    for (std::size_t k = 0; k < m; ++k) yh.push_back(forward(y[k]));
    for (std::size_t xi = 0; xi < spec.cardinality(); ++xi) {
      Eigen::VectorXcd xv(n);
      for (std::size_t k = 0; k < n; ++k) xv(k) = xh[k][xi];
      const Eigen::VectorXcd expect = s.at(xi) * xv;
      for (std::size_t k = 0; k < m; ++k) worst_mult = std::max(worst_mult, std::abs(yh[k][xi] - expect(k)));
    }
    for (std::size_t h = 0; h < spec.cardinality(); ++h) {
      const VectorSignal lhs = apply(a, translate(x, h));
      const VectorSignal rhs = translate(y, h);
      for (std::size_t k = 0; k < m; ++k) worst_shift = std::max(worst_shift, max_abs_diff(lhs[k].values(), rhs[k].values()));
    }
    if (spec.cardinality() * std::max(m, n) <= oracle::kMaxDenseColumns) {
      const auto got = extract_filter(oracle::densify(a).matrix, spec, m, n);
      const auto* f = std::get_if<FilterMatrix>(&got);
      recovered = recovered && f != nullptr && max_abs_diff(*f, a) == 0.0;
    }
  }
  out.require(worst_mult <= 1e-10, "forward(apply) vs symbol product " + fmt(worst_mult));
  out.require(worst_shift <= 1e-10, "translation commutation " + fmt(worst_shift));
  out.require(recovered, "extract_filter did not recover A exactly");

  bool all_rejected = true;
  for (int trial = 0; trial < 20; ++trial) {
    GroupSpec spec = random_group(rng, 32);
    while (spec.cardinality() < 2) spec = random_group(rng, 32);
    const std::size_t m = random_channels(rng), n = random_channels(rng);
    Eigen::MatrixXcd d = oracle::densify(random_filter(rng, spec, m, n)).matrix;
    const auto i = static_cast<Eigen::Index>(rng.uniform(0, d.rows() - 1));
    const auto j = static_cast<Eigen::Index>(rng.uniform(0, d.cols() - 1));
    d(i, j) += rng.gaussian() + cplx(0.5, 0.0);
    all_rejected = all_rejected && std::holds_alternative<TranslationVarianceReport>(extract_filter(d, spec, m, n));
  }
  out.require(all_rejected, "a perturbed non-LTI matrix was accepted");
  if (out.pass) out.detail = "multiplier " + fmt(worst_mult) + ", shift " + fmt(worst_shift);
  return out;
}

Outcome riesz_bounds() {
  Outcome out;
  Rng rng(505);
  double worst_upper = 0.0, worst_lower = 0.0, worst_identity = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const GeneratorSystem sys = random_system(rng);
    const RieszReport rep = riesz_analysis(sys);
    const auto sv = oracle::dense_singular_values(oracle::dense_synthesis(sys));
    worst_upper = std::max(worst_upper, rel_diff(rep.bessel_bound, sv.front() * sv.front()));
    worst_lower = std::max(worst_lower, rel_diff(rep.min_eigenvalue, sv.back() * sv.back()));

    const GramData g = gram(sys);
    const GroupSpec& G = sys.acting();
    const VectorSignal x = random_vector(rng, G, sys.size());
    const VectorSignal y = random_vector(rng, G, sys.size());
    const Signal fx = synthesis(sys, x), fy = synthesis(sys, y);
    const cplx lhs = inner(apply(g.correlations, x), y);
    const cplx rhs = inner(fx.values(), fy.values());
    const double scale = std::max(1.0, std::sqrt(fx.norm_squared() * fy.norm_squared()));
    worst_identity = std::max(worst_identity, std::abs(lhs - rhs) / scale);
  }
  out.require(worst_upper <= 1e-9, "Bessel bound relative deviation " + fmt(worst_upper));
  out.require(worst_lower <= 1e-9, "lower bound relative deviation " + fmt(worst_lower));
  out.require(worst_identity <= 1e-10, "inner-product identity " + fmt(worst_identity));

  const GroupSpec K({4}), G({2});
  const GeneratorSystem degenerate(K, G, {Element{{2}}}, {Signal(K, {1.0, 0.0, 1.0, 0.0})});
  const RieszReport rep = riesz_analysis(degenerate);
  out.require(!rep.is_riesz, "degenerate system reported Riesz");
  out.require(rep.min_det <= 1e-12, "degenerate min_det " + fmt(rep.min_det));
  if (out.pass) {
    out.detail = "upper " + fmt(worst_upper) + ", lower " + fmt(worst_lower) + ", identity " + fmt(worst_identity) +
                 ", degenerate min_det " + fmt(rep.min_det);
  }
  return out;
}

Outcome benzi() {
  // Same instances as the norm-formula criterion.
  Outcome out;
  Rng rng(101);
  double worst_gap = 0.0, worst_scalar = 0.0;
  int scalars = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const GroupSpec spec = random_group(rng);
    const FilterMatrix a = random_filter(rng, spec, random_channels(rng), random_channels(rng));
    const SymbolMatrix s = symbol(a);
    const double norm = operator_norm(s).value;
    const double bound = benzi_bound(s);
    worst_gap = std::max(worst_gap, (norm - bound) / norm);
    if (a.rows() == 1 && a.cols() == 1) {
      ++scalars;
      worst_scalar = std::max(worst_scalar, rel_diff(bound, norm));
    }
  }
  out.require(worst_gap <= 0.0, "bound below the norm by " + fmt(worst_gap) + " relative");
  out.require(worst_scalar <= 1e-12, "1x1 equality deviation " + fmt(worst_scalar));
  out.require(scalars > 0, "no 1x1 instances drawn");
  if (out.pass) out.detail = std::to_string(scalars) + " scalar instances, equality dev " + fmt(worst_scalar);
  return out;
}

Outcome fourier_layer() {
  Outcome out;
  Rng rng(707);
  const std::vector<std::vector<std::size_t>> fixed = {{1}, {2}, {7}, {4, 2}, {3, 3, 2}};
  double worst_planch = 0.0, worst_round = 0.0, worst_direct = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const GroupSpec spec = trial < 100 ? GroupSpec(fixed[trial % fixed.size()]) : random_group(rng);
    const Signal x = random_signal(rng, spec);
    const Signal xh = forward(x);
    const double energy = x.norm_squared();
    worst_planch = std::max(worst_planch, rel_diff(xh.norm_squared(), static_cast<double>(spec.cardinality()) * energy));
    const Signal back = inverse(xh);
    worst_round = std::max(worst_round, max_abs_diff(back.values(), x.values()) / std::sqrt(energy));
    const auto naive = naive_dft(x.values(), spec.orders());
    worst_direct = std::max(worst_direct, max_abs_diff(xh.values(), naive) / std::sqrt(xh.norm_squared()));
  }
  out.require(worst_planch <= 1e-10, "Plancherel " + fmt(worst_planch));
  out.require(worst_round <= 1e-10, "round trip " + fmt(worst_round));
  out.require(worst_direct <= 1e-10, "fast vs direct " + fmt(worst_direct));
  if (out.pass) {
    out.detail = "Plancherel " + fmt(worst_planch) + ", round trip " + fmt(worst_round) + ", direct " + fmt(worst_direct);
  }
  return out;
}

Outcome spectral_multiset() {
  Outcome out;
  Rng rng(808);
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const GroupSpec spec = random_group(rng);
    const std::size_t n = random_channels(rng);
    const FilterMatrix a = random_filter(rng, spec, n, n);
    const SymbolMatrix s = symbol(a);
    std::vector<double> fast;
    for (const auto& m : s.data()) {
      const auto sv = linalg::singular_values(m);
      fast.insert(fast.end(), sv.begin(), sv.end());
    }
    auto dense = oracle::dense_singular_values(oracle::densify(a).matrix);
    std::sort(fast.begin(), fast.end());
    std::sort(dense.begin(), dense.end());
    if (fast.size() != dense.size()) {
      out.require(false, "multiset sizes differ");
      continue;
    }
    for (std::size_t i = 0; i < fast.size(); ++i) worst = std::max(worst, std::abs(fast[i] - dense[i]));
  }
  out.require(worst <= 1e-9, "max deviation " + fmt(worst));
  if (out.pass) out.detail = "max deviation " + fmt(worst);
  return out;
}

namespace fs = std::filesystem;

std::string write_temp(const fs::path& dir, const std::string& name, const io::json& j) {
  const fs::path p = dir / name;
  std::ofstream(p) << j.dump();
  return p.string();
}

int run_cli(const std::string& command, std::vector<std::string> inputs, io::json& report) {
  cli::Request req;
  req.command = command;
  req.inputs = std::move(inputs);
  std::ostringstream out, err;
  const int rc = cli::run(req, out, err);
  report = out.str().empty() ? io::json() : io::json::parse(out.str());
  return rc;
}

template <class T, class Parse>
bool round_trips(const T& value, Parse parse) {
  const std::string first = io::to_json(value).dump();
  const std::string second = io::to_json(parse(io::parse_text(first))).dump();
  return first == second;
}

Outcome cli_contract() {
  Outcome out;
  Rng rng(909);
  bool bit_exact = true;
  for (int trial = 0; trial < 20; ++trial) {
    const GroupSpec spec = random_group(rng);
    const FilterMatrix a = random_filter(rng, spec, random_channels(rng), random_channels(rng));
    const FilterMatrix back = io::filter_from_json(io::parse_text(io::to_json(a).dump()));
    for (std::size_t k = 0; k < a.entries().size(); ++k) {
      for (std::size_t g = 0; g < spec.cardinality(); ++g) {
        bit_exact = bit_exact && a.entries()[k][g] == back.entries()[k][g];
      }
    }
    bit_exact = bit_exact && round_trips(a, io::filter_from_json);
    bit_exact = bit_exact && round_trips(random_vector(rng, spec, 2), io::vector_signal_from_json);
    bit_exact = bit_exact && round_trips(symbol(a), io::symbol_from_json);
    bit_exact = bit_exact && round_trips(random_system(rng), io::generator_system_from_json);
  }
  out.require(bit_exact, "serialization round trip is not bit-exact");

  const fs::path dir = fs::temp_directory_path() / ("gconv_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  io::json rep;

  const GroupSpec z2({2});
  const auto identity = write_temp(dir, "identity.json", io::to_json(FilterMatrix::identity(GroupSpec({3, 2}), 2)));
  int rc = run_cli("norm", {identity}, rep);
  out.require(rc == cli::kOk && std::abs(rep.value("operator_norm", 0.0) - 1.0) <= 1e-12 && rep.value("exact", false),
              "norm on delta*I: exit " + std::to_string(rc));

  const auto flat = write_temp(dir, "flat.json", io::to_json(FilterMatrix(z2, 1, 1, {Signal(z2, {1.0, 1.0})})));
  rc = run_cli("invert", {flat}, rep);
  out.require(rc == cli::kNotInvertible && rep.value("min_det_abs", -1.0) == 0.0 && rep.value("argmin_xi", 0) == 1,
              "invert on a=[1,1]: exit " + std::to_string(rc));

  const auto good = write_temp(dir, "good.json", io::to_json(FilterMatrix(z2, 1, 1, {Signal(z2, {2.0, 1.0})})));
  rc = run_cli("invert", {good}, rep);
  bool taps_ok = false;
  if (rc == cli::kOk && rep.contains("inverse_filter")) {
    const FilterMatrix inv = io::filter_from_json(rep.at("inverse_filter"));
    taps_ok = std::abs(inv.entry(0, 0)[0] - cplx(2.0 / 3.0)) <= 1e-12 &&
              std::abs(inv.entry(0, 0)[1] - cplx(-1.0 / 3.0)) <= 1e-12;
  }
  out.require(taps_ok, "invert on a=[2,1]: exit " + std::to_string(rc));

  const auto random = write_temp(dir, "random.json", io::to_json(random_filter(rng, GroupSpec({4, 3}), 2, 2)));
  rc = run_cli("verify", {random}, rep);
  out.require(rc == cli::kOk, "verify on a random filter: exit " + std::to_string(rc));

  std::ofstream(dir / "broken.json") << "{\"group\": [2], \"rows\": 1,\n  \"cols\": }";
  rc = run_cli("norm", {(dir / "broken.json").string()}, rep);
  out.require(rc == cli::kInputError, "malformed JSON: exit " + std::to_string(rc));

  fs::remove_all(dir);
  if (out.pass) out.detail = "round trip bit-exact, exit codes 0/2/0/0/1 as expected";
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"1 norm formula", norm_formula},
      {"2 inverse formula", inverse_formula},
      {"3 C*-isomorphism", cstar_isomorphism},
      {"4 multiplier equivalence", multiplier_equivalence},
      {"5 Riesz bounds", riesz_bounds},
      {"6 Benzi bound", benzi},
      {"7 Fourier layer", fourier_layer},
      {"8 spectral multiset", spectral_multiset},
      {"9 CLI contract", cli_contract},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failures += o.pass ? 0 : 1;
    std::printf("%s criterion %s: %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
  }
  return failures == 0 ? 0 : 1;
}
