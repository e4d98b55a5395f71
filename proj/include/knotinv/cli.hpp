#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace knotinv::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitDomain = 2;

// args excludes the program name. Results go to `out`; failures print one
// JSON line {"error": {"kind", "message"}} to `out` as well.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Human-readable form of a subcommand payload. The text output of every
// subcommand is exactly render_text of its JSON output.
std::string render_text(const nlohmann::json& payload);

}  // namespace knotinv::cli
