// gconv: command-line front end for the translation-invariant operator
// analyses. Every subcommand reads JSON and writes a JSON report.

#include <CLI11.hpp>
#include <iostream>

#include "gconv/cli.hpp"
#include "gconv/io.hpp"

namespace {

struct Subcommand {
  const char* name;
  const char* help;
  const char* inputs;
  std::size_t arity;
};

constexpr Subcommand kSubcommands[] = {
    {"norm", "Operator norm as the maximum over frequencies of the transfer-matrix spectral norm, plus the entrywise "
             "sup-magnitude upper bound and (square filters) the invertibility summary",
     "filter.json (or lattice taps with --grid)", 1},
    {"invert", "Invertibility from the minimum of |det| of the transfer matrix; on success the inverse filter and "
               "the inverse norm. Exit 2 when not invertible",
     "filter.json (or lattice taps with --grid)", 1},
    {"compose", "Filter of the composition B o A (matrix convolution B * A)", "B.json A.json", 2},
    {"adjoint", "Filter of the Hilbert adjoint: transpose with conj(a(-g)) taps", "A.json", 1},
    {"apply", "Apply a filter to a vector signal", "A.json x.json", 2},
    {"riesz", "Optimal Bessel and Riesz bounds of a translation-generated system from the extreme eigenvalues of "
              "its Gram symbol",
     "system.json", 1},
    {"verify", "Cross-check the frequency-domain results against dense matrices. Exit 3 on mismatch",
     "filter.json or system.json", 1},
    {"extract", "Recover the filter of a dense operator, or report how it fails to commute with translations "
                "(exit 3)",
     "dense.json", 1},
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Translation-invariant operators on finite abelian groups"};
  app.require_subcommand(1);
  app.set_version_flag("--version", gconv::io::kToolVersion);

  gconv::cli::Request req;
  for (const auto& sc : kSubcommands) {
    CLI::App* sub = app.add_subcommand(sc.name, sc.help);
    sub->add_option("inputs", req.inputs, sc.inputs)->required()->expected(static_cast<int>(sc.arity));
    sub->add_option("--det-tol", req.det_tolerance, "Threshold on min |det| (default: 1e-12 * ||A||^N, or $GCONV_DET_TOL)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--grid", req.grid, "Sample Z^d lattice taps on a K^d frequency grid")->check(CLI::PositiveNumber);
    sub->add_option("--out", req.out_path, "Write the report to this file instead of stdout");
    sub->add_flag("--quiet", req.quiet, "Do not print the report");
    sub->callback([&req, sub] { req.command = sub->get_name(); });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : gconv::cli::kInputError;
  }
  return gconv::cli::run(req, std::cout, std::cerr);
}
