#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dk::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

inline constexpr const char* kConfigEnv = "DIRAC_KEPLER_CONFIG";

/// Full command line handling. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dk::cli
