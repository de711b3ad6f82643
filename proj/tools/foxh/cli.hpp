#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "foxh/params.hpp"

namespace foxh::cli {

/// Exit codes: 0 success, 1 library or domain error, 2 usage or input error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// "re", "re+imj", "imj" or "[re,im]"; throws Error{ParseError}.
cplx parse_complex(std::string_view text);

/// Splits on ';', whitespace and commas outside brackets.
std::vector<cplx> parse_z_list(std::string_view text);

}  // namespace foxh::cli
