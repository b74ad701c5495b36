#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace blf {

// Entry point behind the `blf` binary. Commands: classify, complete,
// invariants, certify, search, hurwitz-canon, nilcheck. Writes one JSON
// report to `out` and diagnostics to `err`.
//
// Exit codes: 0 computed and certified / completable / true; 2 computed
// with a negative verdict; 1 input or resource error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace blf
