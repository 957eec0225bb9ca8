#pragma once

// Key-value config files and structured report output.
//
// Config format (version 1): one `key = value` per line, `#` starts a
// comment, every key optional. Unknown keys are an error.

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "jamsec/attacker_opt.hpp"
#include "jamsec/params.hpp"
#include "jamsec/sim.hpp"

namespace jamsec {

inline constexpr int kConfigVersion = 1;

struct RunConfig {
  SystemConfig system;
  AttackerPolicy policy;
};

// Applies one key to `config`; throws ConfigError on unknown keys or bad values.
void apply_setting(RunConfig& config, std::string_view key, std::string_view value);

RunConfig parse_config(std::string_view text, const std::string& source = "<string>");

// Throws ConfigError naming the path when the file cannot be read.
RunConfig load_config(const std::filesystem::path& path);

std::string format_config(const RunConfig& config);

nlohmann::ordered_json to_json(const SimReport& report);
nlohmann::ordered_json to_json(const RunConfig& config);
nlohmann::ordered_json to_json(const GridResult& result);

const char* to_string(StarvedSecrecy mode);
StarvedSecrecy parse_starved_secrecy(std::string_view s);

}  // namespace jamsec
