#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>

namespace kgbound::cli {

/// Malformed config file, unknown key, or unparsable value (exit code 2).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Keys accepted by a command, in config files and as --flags.
const std::set<std::string>& allowed_keys(const std::string& command);
const std::set<std::string>& command_names();

/// Flat key = value text; '#' starts a comment; [command] opens a section.
/// Top-level keys apply to every command. Returns the merged values for
/// `command`, section entries overriding top-level ones.
std::map<std::string, std::string> parse_config_text(const std::string& text,
                                                     const std::string& command,
                                                     const std::string& source = "<config>");
std::map<std::string, std::string> load_config_file(const std::string& path,
                                                    const std::string& command);

/// Typed view over merged settings with key-aware diagnostics.
class Settings {
 public:
  explicit Settings(std::map<std::string, std::string> values) : values_(std::move(values)) {}

  bool has(const std::string& key) const { return values_.count(key) != 0; }
  std::string get_string(const std::string& key, const std::string& fallback) const;
  double get_double(const std::string& key, double fallback) const;
  int get_int(const std::string& key, int fallback) const;
  std::optional<int> get_optional_int(const std::string& key) const;
  const std::map<std::string, std::string>& values() const noexcept { return values_; }

 private:
  std::map<std::string, std::string> values_;
};

}  // namespace kgbound::cli
