#include "gconv/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <random>

#include "gconv/io.hpp"
#include "gconv/linalg.hpp"
#include "gconv/oracle.hpp"

namespace gconv::cli {

namespace {

using io::json;

constexpr double kVerifyTolerance = 1e-9;

struct Outcome {
  json document;
  int code = kOk;
};

double rel_dev(double a, double b) {
  const double denom = std::max({std::abs(a), std::abs(b), std::numeric_limits<double>::min()});
  return std::abs(a - b) / denom;
}

void expect_inputs(const Request& req, std::size_t n, const char* usage) {
  if (req.inputs.size() != n) {
    throw io::InputError(req.command + ": expected " + std::to_string(n) + " input file(s): " + usage);
  }
}

void reject_grid(const Request& req) {
  if (req.grid) throw io::InputError(req.command + ": --grid only applies to norm and invert");
}

SymbolMatrix load_symbol(const Request& req, std::optional<FilterMatrix>& filter) {
  const json j = io::read_file(req.inputs[0]);
  if (req.grid) return grid_symbol(io::lattice_filter_from_json(j), *req.grid);
  filter = io::filter_from_json(j);
  return symbol(*filter);
}

Outcome cmd_norm(const Request& req) {
  expect_inputs(req, 1, "norm <filter.json>");
  std::optional<FilterMatrix> filter;
  const SymbolMatrix s = load_symbol(req, filter);
  return {io::to_json(analyze(s, req.det_tolerance)), kOk};
}

Outcome cmd_invert(const Request& req) {
  expect_inputs(req, 1, "invert <filter.json>");
  std::optional<FilterMatrix> filter;
  const SymbolMatrix s = load_symbol(req, filter);
  if (!s.square()) throw io::InputError("invert: filter must be square (rows == cols)");
  json doc = io::to_json(analyze(s, req.det_tolerance));
  if (!doc["invertible"].get<bool>()) return {std::move(doc), kNotInvertible};
  doc["inverse_filter"] = io::to_json(inverse_filter(*filter, req.det_tolerance));
  return {std::move(doc), kOk};
}

Outcome cmd_compose(const Request& req) {
  expect_inputs(req, 2, "compose <B.json> <A.json>");
  reject_grid(req);
  const FilterMatrix b = io::filter_from_json(io::read_file(req.inputs[0]));
  const FilterMatrix a = io::filter_from_json(io::read_file(req.inputs[1]));
  json doc = io::to_json(compose(b, a));
  doc["exact"] = true;
  return {std::move(doc), kOk};
}

Outcome cmd_adjoint(const Request& req) {
  expect_inputs(req, 1, "adjoint <A.json>");
  reject_grid(req);
  json doc = io::to_json(adjoint(io::filter_from_json(io::read_file(req.inputs[0]))));
  doc["exact"] = true;
  return {std::move(doc), kOk};
}

Outcome cmd_apply(const Request& req) {
  expect_inputs(req, 2, "apply <A.json> <x.json>");
  reject_grid(req);
  const FilterMatrix a = io::filter_from_json(io::read_file(req.inputs[0]));
  const VectorSignal x = io::vector_signal_from_json(io::read_file(req.inputs[1]));
  json doc = io::to_json(apply(a, x));
  doc["exact"] = true;
  return {std::move(doc), kOk};
}

Outcome cmd_riesz(const Request& req) {
  expect_inputs(req, 1, "riesz <system.json>");
  reject_grid(req);
  const GeneratorSystem sys = io::generator_system_from_json(io::read_file(req.inputs[0]));
  const GramData data = gram(sys);
  json doc = io::to_json(riesz_analysis(data, req.det_tolerance));
  doc["positivity"] = io::to_json(positivity_check(data));
  return {std::move(doc), kOk};
}

Outcome cmd_extract(const Request& req) {
  expect_inputs(req, 1, "extract <dense.json>");
  reject_grid(req);
  const io::DenseInput d = io::dense_from_json(io::read_file(req.inputs[0]));
  auto result = extract_filter(d.matrix, d.spec, d.rows, d.cols);
  if (auto* report = std::get_if<TranslationVarianceReport>(&result)) {
    json doc{{"schema", io::kSchemaVersion}, {"lti", false}, {"exact", true}};
    doc["translation_variance"] = io::to_json(*report);
    return {std::move(doc), kVerificationMismatch};
  }
  json doc = io::to_json(std::get<FilterMatrix>(result));
  doc["lti"] = true;
  doc["exact"] = true;
  return {std::move(doc), kOk};
}

// Fixed seed so that verification reports are reproducible byte for byte.
VectorSignal probe(const GroupSpec& spec, std::size_t channels, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  VectorSignal x = VectorSignal::zeros(spec, channels);
  for (std::size_t n = 0; n < channels; ++n) {
    for (cplx& v : x[n].values()) v = {u(rng), u(rng)};
  }
  return x;
}

json verify_filter(const FilterMatrix& a, std::optional<double> det_tol) {
  const oracle::DenseOperator dense = oracle::densify(a);
  const Eigen::MatrixXcd& d = dense.matrix;
  const SymbolMatrix s = symbol(a);
  const std::vector<double> sv_dense = oracle::dense_singular_values(d);
  const double sigma_max = sv_dense.front();
  const double unit = std::max(1.0, sigma_max);

  json checks = json::object();
  checks["operator_norm"] = rel_dev(operator_norm(s).value, sigma_max);

  if (a.rows() == a.cols() && invertibility(s, det_tol).invertible) {
    checks["inverse_norm"] = rel_dev(inverse_norm(s, det_tol).value, 1.0 / sv_dense.back());
  }

  std::vector<double> sv_union;
  for (const auto& m : s.data()) {
    const auto sv = linalg::singular_values(m);
    sv_union.insert(sv_union.end(), sv.begin(), sv.end());
  }
  std::sort(sv_union.begin(), sv_union.end(), std::greater<>());
  double multiset = 0.0;
  for (std::size_t i = 0; i < sv_union.size(); ++i) {
    multiset = std::max(multiset, std::abs(sv_union[i] - sv_dense[i]) / unit);
  }
  checks["spectral_multiset"] = multiset;

  const Eigen::MatrixXcd d_adj = oracle::densify(adjoint(a)).matrix;
  checks["adjoint"] = (d_adj - d.adjoint()).cwiseAbs().maxCoeff() / unit;
  const Eigen::MatrixXcd d_gram = oracle::densify(compose(adjoint(a), a)).matrix;
  checks["compose"] = (d_gram - d.adjoint() * d).cwiseAbs().maxCoeff() / (unit * unit);

  const VectorSignal x = probe(a.spec(), a.cols(), 0x5eedULL);
  const Eigen::VectorXcd expect = d * oracle::vectorize(x);
  const Eigen::VectorXcd got = oracle::vectorize(apply(a, x));
  checks["apply"] = (expect - got).cwiseAbs().maxCoeff() / std::max(1.0, expect.cwiseAbs().maxCoeff());

  return checks;
}

json verify_system(const GeneratorSystem& sys, std::optional<double> det_tol) {
  const Eigen::MatrixXcd s = oracle::dense_synthesis(sys);
  const oracle::SvdExtremes ext = oracle::dense_svd_extremes(s);
  const GramData data = gram(sys);
  const RieszReport r = riesz_analysis(data, det_tol);
  const double beta = ext.sigma_max * ext.sigma_max;

  json checks = json::object();
  checks["bessel_bound"] = rel_dev(r.bessel_bound, beta);
  checks["lower_eigenvalue"] = std::abs(r.min_eigenvalue - ext.sigma_min * ext.sigma_min) / std::max(beta, 1e-300);

  const VectorSignal x = probe(sys.acting(), sys.size(), 0x5eedULL);
  const VectorSignal y = probe(sys.acting(), sys.size(), 0xfaceULL);
  const VectorSignal ax = apply(data.correlations, x);
  cplx lhs{};
  for (std::size_t n = 0; n < y.size(); ++n) {
    for (std::size_t g = 0; g < y[n].size(); ++g) lhs += ax[n][g] * std::conj(y[n][g]);
  }
  const Signal fx = synthesis(sys, x);
  const Signal fy = synthesis(sys, y);
  cplx rhs{};
  for (std::size_t k = 0; k < fx.size(); ++k) rhs += fx[k] * std::conj(fy[k]);
  checks["inner_product_identity"] =
      std::abs(lhs - rhs) / std::max(1e-300, std::sqrt(fx.norm_squared() * fy.norm_squared()));
  const PositivityReport pos = positivity_check(data);
  checks["gram_hermitian"] = pos.hermitian_deviation / std::max(1.0, beta);
  checks["gram_psd"] = pos.psd_deviation / std::max(1.0, beta);
  return checks;
}

Outcome cmd_verify(const Request& req) {
  expect_inputs(req, 1, "verify <filter.json | system.json>");
  reject_grid(req);
  const json j = io::read_file(req.inputs[0]);
  json checks;
  std::string subject;
  if (j.is_object() && j.contains("ambient")) {
    checks = verify_system(io::generator_system_from_json(j), req.det_tolerance);
    subject = "generator_system";
  } else {
    checks = verify_filter(io::filter_from_json(j), req.det_tolerance);
    subject = "filter";
  }
  double worst = 0.0;
  for (const auto& [name, v] : checks.items()) worst = std::max(worst, v.get<double>());
  const bool passed = worst <= kVerifyTolerance;
  json doc{{"schema", io::kSchemaVersion},
           {"subject", subject},
           {"checks", checks},
           {"max_deviation", worst},
           {"tolerance", kVerifyTolerance},
           {"passed", passed},
           {"exact", true}};
  return {std::move(doc), passed ? kOk : kVerificationMismatch};
}

Outcome dispatch(const Request& req) {
  if (req.det_tolerance && !(*req.det_tolerance > 0.0)) throw io::InputError("--det-tol must be > 0");
  if (req.grid && *req.grid < 1) throw io::InputError("--grid must be >= 1");
  if (req.command == "norm") return cmd_norm(req);
  if (req.command == "invert") return cmd_invert(req);
  if (req.command == "compose") return cmd_compose(req);
  if (req.command == "adjoint") return cmd_adjoint(req);
  if (req.command == "apply") return cmd_apply(req);
  if (req.command == "riesz") return cmd_riesz(req);
  if (req.command == "verify") return cmd_verify(req);
  if (req.command == "extract") return cmd_extract(req);
  throw io::InputError("unknown command '" + req.command + "'");
}

}  // namespace

std::optional<double> det_tolerance_from_env() {
  const char* raw = std::getenv("GCONV_DET_TOL");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  char* end = nullptr;
  const double v = std::strtod(raw, &end);
  if (end == raw || *end != '\0' || !(v > 0.0) || !std::isfinite(v)) {
    throw io::InputError(std::string("GCONV_DET_TOL: expected a positive number, got '") + raw + "'");
  }
  return v;
}

int run(const Request& request, std::ostream& out, std::ostream& err) {
  Outcome result;
  try {
    Request req = request;
    if (!req.det_tolerance) req.det_tolerance = det_tolerance_from_env();
    result = dispatch(req);
  } catch (const io::InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const oracle::SizeCapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const json::exception& e) {
    err << "error: malformed input: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  result.document["command"] = request.command;
  result.document["version"] = io::kToolVersion;
  const std::string text = result.document.dump(2) + "\n";
  if (request.out_path) {
    std::ofstream f(*request.out_path, std::ios::binary);
    if (!f) {
      err << "error: cannot write " << *request.out_path << '\n';
      return kInputError;
    }
    f << text;
  }
  if (!request.quiet && !request.out_path) out << text;
  return result.code;
}

}  // namespace gconv::cli
