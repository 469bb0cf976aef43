#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mixc1::cli {

/// Exit codes: 0 ok, 1 verification failure or internal error, 2 parse error, 3 validation error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace mixc1::cli
