#pragma once

// JSON forms of the domain objects. Every document carries "schema": 1;
// complex numbers are [re, im] pairs and doubles are written in shortest
// round-trip form, so parse(serialize(x)) reproduces x bit for bit.

#include <json.hpp>
#include <stdexcept>
#include <string>

#include "gconv/convop.hpp"
#include "gconv/riesz.hpp"
#include "gconv/spectral.hpp"

namespace gconv::io {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

/// Malformed or schema-violating input. The message names the offending
/// field path (e.g. "entries[1][0][3]") or the line and column of a syntax
/// error.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json parse_text(const std::string& text, const std::string& source = "<input>");
json read_file(const std::string& path);

json to_json(const GroupSpec& spec);
GroupSpec group_from_json(const json& j, const std::string& path = "group");

json to_json(cplx c);
cplx complex_from_json(const json& j, const std::string& path);

/// Bare array of [re, im] pairs.
json to_json(const Signal& s);
Signal signal_from_json(const json& j, const GroupSpec& spec, const std::string& path);

json to_json(const FilterMatrix& a);
FilterMatrix filter_from_json(const json& j);

json to_json(const VectorSignal& x);
VectorSignal vector_signal_from_json(const json& j);

json to_json(const SymbolMatrix& s);
SymbolMatrix symbol_from_json(const json& j);

json to_json(const GeneratorSystem& sys);
GeneratorSystem generator_system_from_json(const json& j);

json to_json(const LatticeFilter& f);
LatticeFilter lattice_filter_from_json(const json& j);

/// {"group", "rows", "cols", "matrix": rows of [re, im] pairs}.
json dense_to_json(const Eigen::MatrixXcd& m, const GroupSpec& spec, std::size_t rows, std::size_t cols);
struct DenseInput {
  Eigen::MatrixXcd matrix;
  GroupSpec spec;
  std::size_t rows;
  std::size_t cols;
};
DenseInput dense_from_json(const json& j);

json to_json(const SpectralReport& r);
json to_json(const RieszReport& r);
json to_json(const PositivityReport& r);
json to_json(const TranslationVarianceReport& r);

}  // namespace gconv::io
