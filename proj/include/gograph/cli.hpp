// cli.hpp -- command-line front end for the analysis pipeline.
//
// Part of gograph, a toolkit for exact geodesic-orbit analysis on reductive
// homogeneous spaces.  SPDX-License-Identifier: MIT

#ifndef GOGRAPH_CLI_HPP
#define GOGRAPH_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace gograph {

/// Runs the command-line interface on `args` (program name excluded),
/// writing reports to `out` and diagnostics to `err`.
///
/// Subcommands: `catalog list`, `catalog show`, `check
/// jacobi|invariance|reductive|nr`, `invariant-vectors`, `center`, `extend`,
/// `system`, `graph` (optionally `--via t2|pnr`), `verify`, and
/// `admissibility`.  Spaces are selected with `--space` as a catalog id or a
/// definition-file path; `--param name=value` binds ring parameters to
/// rationals (the default leaves them symbolic); `--v` gives one-form
/// coefficients or `auto` for the stored invariant direction; `--output
/// json|text` picks the report format.
///
/// Returns 0 on success and affirmative verdicts, 2 on negative verdicts
/// (not geodesic-orbit, failed checks), and 1 on input or usage errors.
/// Identical arguments produce byte-identical output.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace gograph

#endif  // GOGRAPH_CLI_HPP
