#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lftlab::cli {

// Exit codes: 0 success, 1 usage or parse error, 2 rejected input
// (nonconvex samples, sizes that are not powers of two, dimension cap).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lftlab::cli
