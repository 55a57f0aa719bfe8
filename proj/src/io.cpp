#include "gconv/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace gconv::io {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& msg) { throw InputError(path + ": " + msg); }

void check_document(const json& j, const std::string& what) {
  if (!j.is_object()) fail(what, "expected a JSON object");
  if (j.contains("schema")) {
    const json& s = j.at("schema");
    if (!s.is_number_integer() || s.get<int>() != kSchemaVersion) {
      fail("schema", "unsupported schema version " + s.dump() + " (expected " + std::to_string(kSchemaVersion) + ")");
    }
  }
}

const json& field(const json& j, const char* key) {
  if (!j.contains(key)) fail(key, "missing required field");
  return j.at(key);
}

std::size_t size_from_json(const json& j, const std::string& path, std::size_t min_value = 0) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < static_cast<std::int64_t>(min_value)) {
    fail(path, "expected an integer >= " + std::to_string(min_value) + ", got " + j.dump());
  }
  return j.get<std::size_t>();
}

double real_from_json(const json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number, got " + j.dump());
  const double v = j.get<double>();
  if (!std::isfinite(v)) fail(path, "non-finite number");
  return v;
}

const json& array_of(const json& j, const std::string& path, std::size_t expected) {
  if (!j.is_array()) fail(path, "expected an array");
  if (j.size() != expected) {
    fail(path, "expected " + std::to_string(expected) + " items, got " + std::to_string(j.size()));
  }
  return j;
}

json matrix_to_json(const Eigen::MatrixXcd& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Eigen::MatrixXcd matrix_from_json(const json& j, std::size_t rows, std::size_t cols, const std::string& path) {
  array_of(j, path, rows);
  Eigen::MatrixXcd m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const std::string rp = path + "[" + std::to_string(i) + "]";
    array_of(j[i], rp, cols);
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = complex_from_json(j[i][k], rp + "[" + std::to_string(k) + "]");
  }
  return m;
}

Element element_from_json(const json& j, const GroupSpec& spec, const std::string& path) {
  Element e;
  if (j.is_number_integer() && spec.rank() == 1) {
    e.residues = {size_from_json(j, path)};
  } else {
    array_of(j, path, spec.rank());
    for (std::size_t k = 0; k < spec.rank(); ++k) {
      e.residues.push_back(size_from_json(j[k], path + "[" + std::to_string(k) + "]"));
    }
  }
  for (std::size_t k = 0; k < spec.rank(); ++k) {
    if (e.residues[k] >= spec.orders()[k]) fail(path, "residue out of range for group " + spec.to_string());
  }
  return e;
}

json header() { return json{{"schema", kSchemaVersion}}; }

}  // namespace

json parse_text(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1;
    std::size_t col = 1;
    const std::size_t upto = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < upto; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw InputError(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": malformed JSON (" +
                     e.what() + ")");
  }
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_text(ss.str(), path);
}

json to_json(const GroupSpec& spec) { return json(spec.orders()); }

GroupSpec group_from_json(const json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) fail(path, "expected a non-empty array of cyclic factor sizes");
  std::vector<std::size_t> orders;
  for (std::size_t k = 0; k < j.size(); ++k) orders.push_back(size_from_json(j[k], path + "[" + std::to_string(k) + "]", 1));
  return GroupSpec(std::move(orders));
}

json to_json(cplx c) { return json::array({c.real(), c.imag()}); }

cplx complex_from_json(const json& j, const std::string& path) {
  if (j.is_number()) return {real_from_json(j, path), 0.0};
  if (!j.is_array() || j.size() != 2) fail(path, "expected a [re, im] pair, got " + j.dump());
  return {real_from_json(j[0], path + "[0]"), real_from_json(j[1], path + "[1]")};
}

json to_json(const Signal& s) {
  json arr = json::array();
  for (const cplx& v : s.values()) arr.push_back(to_json(v));
  return arr;
}

Signal signal_from_json(const json& j, const GroupSpec& spec, const std::string& path) {
  array_of(j, path, spec.cardinality());
  std::vector<cplx> values;
  values.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) values.push_back(complex_from_json(j[i], path + "[" + std::to_string(i) + "]"));
  return Signal(spec, std::move(values));
}

json to_json(const FilterMatrix& a) {
  json j = header();
  j["group"] = to_json(a.spec());
  j["rows"] = a.rows();
  j["cols"] = a.cols();
  json entries = json::array();
  for (std::size_t m = 0; m < a.rows(); ++m) {
    json row = json::array();
    for (std::size_t n = 0; n < a.cols(); ++n) row.push_back(to_json(a.entry(m, n)));
    entries.push_back(std::move(row));
  }
  j["entries"] = std::move(entries);
  return j;
}

FilterMatrix filter_from_json(const json& j) {
  check_document(j, "filter");
  GroupSpec spec = group_from_json(field(j, "group"));
  const std::size_t rows = size_from_json(field(j, "rows"), "rows", 1);
  const std::size_t cols = size_from_json(field(j, "cols"), "cols", 1);
  const json& e = array_of(field(j, "entries"), "entries", rows);
  std::vector<Signal> entries;
  for (std::size_t m = 0; m < rows; ++m) {
    const std::string rp = "entries[" + std::to_string(m) + "]";
    array_of(e[m], rp, cols);
    for (std::size_t n = 0; n < cols; ++n) {
      entries.push_back(signal_from_json(e[m][n], spec, rp + "[" + std::to_string(n) + "]"));
    }
  }
  return FilterMatrix(std::move(spec), rows, cols, std::move(entries));
}

json to_json(const VectorSignal& x) {
  json j = header();
  j["group"] = to_json(x.spec());
  json comps = json::array();
  for (const auto& c : x.components()) comps.push_back(to_json(c));
  j["components"] = std::move(comps);
  return j;
}

VectorSignal vector_signal_from_json(const json& j) {
  check_document(j, "vector signal");
  GroupSpec spec = group_from_json(field(j, "group"));
  const json& c = field(j, "components");
  if (!c.is_array() || c.empty()) fail("components", "expected a non-empty array of signals");
  std::vector<Signal> comps;
  for (std::size_t n = 0; n < c.size(); ++n) {
    comps.push_back(signal_from_json(c[n], spec, "components[" + std::to_string(n) + "]"));
  }
  return VectorSignal(std::move(spec), std::move(comps));
}

json to_json(const SymbolMatrix& s) {
  json j = header();
  j["group"] = to_json(s.spec());
  j["rows"] = s.rows();
  j["cols"] = s.cols();
  j["exact"] = s.exact();
  json data = json::array();
  for (const auto& m : s.data()) data.push_back(matrix_to_json(m));
  j["data"] = std::move(data);
  return j;
}

SymbolMatrix symbol_from_json(const json& j) {
  check_document(j, "symbol");
  GroupSpec spec = group_from_json(field(j, "group"));
  const std::size_t rows = size_from_json(field(j, "rows"), "rows", 1);
  const std::size_t cols = size_from_json(field(j, "cols"), "cols", 1);
  const bool exact = j.contains("exact") ? j.at("exact").get<bool>() : true;
  const json& d = array_of(field(j, "data"), "data", spec.cardinality());
  std::vector<Eigen::MatrixXcd> data;
  for (std::size_t xi = 0; xi < d.size(); ++xi) {
    data.push_back(matrix_from_json(d[xi], rows, cols, "data[" + std::to_string(xi) + "]"));
  }
  return SymbolMatrix(std::move(spec), rows, cols, std::move(data), exact);
}

json to_json(const GeneratorSystem& sys) {
  json j = header();
  j["ambient"] = to_json(sys.ambient());
  j["acting"] = to_json(sys.acting());
  json emb = json::array();
  for (const auto& e : sys.embedding()) emb.push_back(e.residues);
  j["embedding"] = std::move(emb);
  json gens = json::array();
  for (const auto& g : sys.generators()) gens.push_back(to_json(g));
  j["generators"] = std::move(gens);
  return j;
}

GeneratorSystem generator_system_from_json(const json& j) {
  check_document(j, "generator system");
  GroupSpec ambient = group_from_json(field(j, "ambient"), "ambient");
  GroupSpec acting = group_from_json(field(j, "acting"), "acting");
  const json& emb = array_of(field(j, "embedding"), "embedding", acting.rank());
  std::vector<Element> images;
  for (std::size_t k = 0; k < emb.size(); ++k) {
    images.push_back(element_from_json(emb[k], ambient, "embedding[" + std::to_string(k) + "]"));
  }
  const json& g = field(j, "generators");
  if (!g.is_array() || g.empty()) fail("generators", "expected a non-empty array of signals");
  std::vector<Signal> gens;
  for (std::size_t n = 0; n < g.size(); ++n) {
    gens.push_back(signal_from_json(g[n], ambient, "generators[" + std::to_string(n) + "]"));
  }
  try {
    return GeneratorSystem(std::move(ambient), std::move(acting), std::move(images), std::move(gens));
  } catch (const std::invalid_argument& e) {
    fail("embedding", e.what());
  }
}

json to_json(const LatticeFilter& f) {
  json j = header();
  j["dim"] = f.dim;
  j["rows"] = f.rows;
  j["cols"] = f.cols;
  json taps = json::array();
  for (const auto& t : f.taps) taps.push_back(json{{"offset", t.offset}, {"value", matrix_to_json(t.value)}});
  j["taps"] = std::move(taps);
  return j;
}

LatticeFilter lattice_filter_from_json(const json& j) {
  check_document(j, "lattice filter");
  LatticeFilter f;
  f.dim = size_from_json(field(j, "dim"), "dim", 1);
  f.rows = j.contains("rows") ? size_from_json(j.at("rows"), "rows", 1) : 1;
  f.cols = j.contains("cols") ? size_from_json(j.at("cols"), "cols", 1) : 1;
  const json& taps = field(j, "taps");
  if (!taps.is_array() || taps.empty()) fail("taps", "expected a non-empty array (empty support)");
  for (std::size_t i = 0; i < taps.size(); ++i) {
    const std::string tp = "taps[" + std::to_string(i) + "]";
    const json& t = taps[i];
    if (!t.is_object()) fail(tp, "expected an object with offset and value");
    LatticeTap tap;
    if (!t.contains("offset")) fail(tp + ".offset", "missing");
    const json& off = t.at("offset");
    array_of(off, tp + ".offset", f.dim);
    for (std::size_t k = 0; k < f.dim; ++k) {
      if (!off[k].is_number_integer()) fail(tp + ".offset[" + std::to_string(k) + "]", "expected an integer");
      tap.offset.push_back(off[k].get<std::int64_t>());
    }
    if (!t.contains("value")) fail(tp + ".value", "missing");
    const json& v = t.at("value");
    if (f.rows == 1 && f.cols == 1 && (v.is_number() || (v.is_array() && v.size() == 2 && v[0].is_number()))) {
      tap.value = Eigen::MatrixXcd::Constant(1, 1, complex_from_json(v, tp + ".value"));
    } else {
      tap.value = matrix_from_json(v, f.rows, f.cols, tp + ".value");
    }
    f.taps.push_back(std::move(tap));
  }
  return f;
}

json dense_to_json(const Eigen::MatrixXcd& m, const GroupSpec& spec, std::size_t rows, std::size_t cols) {
  json j = header();
  j["group"] = to_json(spec);
  j["rows"] = rows;
  j["cols"] = cols;
  j["matrix"] = matrix_to_json(m);
  return j;
}

DenseInput dense_from_json(const json& j) {
  check_document(j, "dense operator");
  GroupSpec spec = group_from_json(field(j, "group"));
  const std::size_t rows = size_from_json(field(j, "rows"), "rows", 1);
  const std::size_t cols = size_from_json(field(j, "cols"), "cols", 1);
  Eigen::MatrixXcd m =
      matrix_from_json(field(j, "matrix"), rows * spec.cardinality(), cols * spec.cardinality(), "matrix");
  return {std::move(m), std::move(spec), rows, cols};
}

namespace {

template <class T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

}  // namespace

json to_json(const SpectralReport& r) {
  json j = header();
  j["group"] = r.group;
  j["rows"] = r.rows;
  j["cols"] = r.cols;
  j["operator_norm"] = r.operator_norm;
  j["argmax_xi"] = r.argmax_xi;
  j["benzi_bound"] = r.benzi_bound;
  j["min_det_abs"] = optional_json(r.min_det_abs);
  j["argmin_xi"] = optional_json(r.argmin_xi);
  j["det_tolerance"] = r.det_tolerance;
  j["invertible"] = r.invertible;
  j["inverse_norm"] = optional_json(r.inverse_norm);
  j["exact"] = r.exact;
  return j;
}

json to_json(const RieszReport& r) {
  json j = header();
  j["acting"] = r.acting;
  j["generators"] = r.generators;
  j["is_bessel"] = r.is_bessel;
  j["bessel_bound"] = r.bessel_bound;
  j["argmax_xi"] = r.argmax_xi;
  j["min_eigenvalue"] = r.min_eigenvalue;
  j["argmin_xi"] = r.argmin_xi;
  j["is_riesz"] = r.is_riesz;
  j["lower_bound"] = optional_json(r.lower_bound);
  j["min_det"] = r.min_det;
  j["argmin_det_xi"] = r.argmin_det_xi;
  j["det_tolerance"] = r.det_tolerance;
  j["hermitian_deviation"] = r.hermitian_deviation;
  j["exact"] = r.exact;
  return j;
}

json to_json(const PositivityReport& r) {
  return json{{"hermitian_deviation", r.hermitian_deviation}, {"psd_deviation", r.psd_deviation}};
}

json to_json(const TranslationVarianceReport& r) {
  return json{{"max_deviation", r.max_deviation},
              {"shift", r.shift},
              {"input_channel", r.input_channel},
              {"output_channel", r.output_channel},
              {"output_index", r.output_index}};
}

}  // namespace gconv::io
