#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fermat {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitInvalidArguments = 2;

/// Entry point of the `fermat` tool. args excludes the program name.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Inventory of the degree-2 complexes in the notation of sign tuples.
std::string demo_d2_text();

} // namespace fermat
