// SPDX-License-Identifier: Apache-2.0
//
// nearfield-bounds - near-field boundary distances for antenna-array links
//
// Command-line front end. Subcommands: compute, sweep, validate, dominance, landscape, stats,
// table. Angles cross this boundary in degrees and are converted to radians immediately; a JSON
// config file can mirror any flag (explicit flags win). Exit status: 0 = success, 1 = usage or
// domain error, 2 = validation tolerance exceeded.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nearfield {

int run_cli(std::vector<std::string> args, std::ostream &out, std::ostream &err);

} // namespace nearfield
