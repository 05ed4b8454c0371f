#pragma once
// cli.hpp - the wcat command-line surface.
//
// Subcommands: seq (weighted Catalan sequences by any of the three routes),
// verify (2-adic valuation sweeps against s(n+1)-1), orbits (orbit census
// and the decomposition identity), blocks (zero blocks of C mod p).
// Exit codes: 0 all checks matched, 1 a verification row failed or the
// weight was rejected, 2 usage or domain errors.

#include <iosfwd>
#include <string>
#include <vector>

namespace wcat::cli {

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wcat::cli
