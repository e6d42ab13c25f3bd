#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hgc/poly.hpp"

namespace hgc {

// Exit codes: 0 success, 1 verification failure or evaluation error, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// "re", "re+imj", "imj"; throws InvalidArgument
cd parse_complex(const std::string& s);
// comma-separated coefficients, lowest degree first
PolyC parse_poly(const std::string& s);

} // namespace hgc
