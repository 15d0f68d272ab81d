#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace edmf::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInternal = 1;
inline constexpr int kParse = 2;
inline constexpr int kValidation = 3;
inline constexpr int kPrecondition = 4;

// Runs the tool on `args` (without the program name).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace edmf::cli
