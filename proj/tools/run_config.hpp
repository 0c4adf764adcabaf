#pragma once

#include <optional>
#include <string>

#include "quartic/checked.hpp"
#include "quartic/local.hpp"

namespace quartic::cli {

enum class OutputFormat { Csv, Json };

struct RunConfig {
  Int scan_limit = local::kDefaultScanLimit;
  unsigned workers = 0;  // 0 = auto
  OutputFormat format = OutputFormat::Csv;
  std::optional<std::string> output_path;
};

/// Fields that a config file or the command line may set.
struct ConfigOverrides {
  std::optional<Int> scan_limit;
  std::optional<unsigned> workers;
  std::optional<OutputFormat> format;
  std::optional<std::string> output_path;
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error(ErrorKind::InvalidArgument, what) {}
};

/// Parses `key = value` lines; `#` starts a comment. Keys: scan_limit,
/// workers (integer or "auto"), format (csv|json), out.
ConfigOverrides parse_config_text(const std::string& text);
ConfigOverrides load_config_file(const std::string& path);

OutputFormat parse_format(const std::string& text);
unsigned parse_workers(const std::string& text);

/// Command line beats config file beats defaults.
RunConfig resolve_config(const ConfigOverrides& file, const ConfigOverrides& command_line);

}  // namespace quartic::cli
