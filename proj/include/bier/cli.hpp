#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bier::cli {

/// Exit codes: 0 success, 1 usage or input error, 2 verify found a
/// violation, 3 verify was inconclusive (oracle budget or envelope).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace bier::cli
