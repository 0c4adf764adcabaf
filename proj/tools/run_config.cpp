#include "run_config.hpp"

#include <fstream>
#include <sstream>

namespace quartic::cli {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

Int parse_positive(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != value.size() || v < 1) throw ConfigError(key + ": expected a positive integer, got '" + value + "'");
  return static_cast<Int>(v);
}

}  // namespace

OutputFormat parse_format(const std::string& text) {
  if (text == "csv") return OutputFormat::Csv;
  if (text == "json") return OutputFormat::Json;
  throw ConfigError("format: expected csv or json, got '" + text + "'");
}

unsigned parse_workers(const std::string& text) {
  if (text == "auto") return 0;
  return static_cast<unsigned>(parse_positive("workers", text));
}

ConfigOverrides parse_config_text(const std::string& text) {
  ConfigOverrides out;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config line " + std::to_string(line_no) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "scan_limit")
      out.scan_limit = parse_positive(key, value);
    else if (key == "workers")
      out.workers = parse_workers(value);
    else if (key == "format")
      out.format = parse_format(value);
    else if (key == "out")
      out.output_path = value;
    else
      throw ConfigError("config line " + std::to_string(line_no) + ": unknown key '" + key + "'");
  }
  return out;
}

ConfigOverrides load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

RunConfig resolve_config(const ConfigOverrides& file, const ConfigOverrides& command_line) {
  RunConfig cfg;
  auto apply = [&cfg](const ConfigOverrides& o) {
    if (o.scan_limit) cfg.scan_limit = *o.scan_limit;
    if (o.workers) cfg.workers = *o.workers;
    if (o.format) cfg.format = *o.format;
    if (o.output_path) cfg.output_path = *o.output_path;
  };
  apply(file);
  apply(command_line);
  return cfg;
}

}  // namespace quartic::cli
