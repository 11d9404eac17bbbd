#pragma once

#include <iosfwd>
#include <string>

#include "ssg/config.hpp"
#include "ssg/sweep.hpp"

namespace ssg {

// Evaluates the top lattice node over the configured grid and writes one CSV
// row per point: `x,t,singular` followed by re/im columns for every surviving
// fermionic monomial of phi, psibar, psi. Singular rows keep the flag set and
// leave the value cells blank. `out_path` empty or "-" means stdout.
// Returns a process exit status (0 ok, throws on bad config or path).
int cmd_generate(const RunConfig& config, const std::string& out_path,
                 int min_solitons = 0, ExecPolicy policy = ExecPolicy::Parallel);

// Runs a verification suite, prints the text report to `log`, and optionally
// writes the JSON report to `report_path` (empty = skip). Returns 0 when all
// checks pass, 1 otherwise.
int cmd_verify(const RunConfig& config, const std::string& suite,
               const std::string& report_path, std::ostream& log,
               ExecPolicy policy = ExecPolicy::Parallel);

}  // namespace ssg
