#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace aoi::cli {

// Exit status: 0 success, 1 usage or I/O failure, 2 invalid input,
// 3 capacity exceeded. Failures write {"error": kind, "message": ...} to err.
// `args` excludes the program name. A file argument of "-" reads `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace aoi::cli
