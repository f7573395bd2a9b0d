#include "kgbound_cli/config.hpp"

#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace kgbound::cli {

namespace {

const std::map<std::string, std::set<std::string>>& key_table() {
  static const std::map<std::string, std::set<std::string>> table = [] {
    const std::set<std::string> common = {"z", "alpha", "format", "out"};
    std::map<std::string, std::set<std::string>> t;
    t["spectrum"] = {"n", "l"};
    t["wavefunction"] = {"n", "l", "grid-n", "rmax", "rmin"};
    t["solve"] = {"n", "l", "mode", "potential", "lambda", "grid-n", "rmax", "tol", "max-iters",
                  "stencil", "richardson"};
    t["compare"] = {"n", "l", "grid-n", "rmax", "tol"};
    t["lorentz"] = {"beta", "energy", "px", "py", "pz", "u", "u-prime"};
    t["convergence"] = {"n", "l", "mode", "potential", "lambda", "rmax", "tol", "stencil",
                        "sizes"};
    for (auto& [name, keys] : t) keys.insert(common.begin(), common.end());
    return t;
  }();
  return table;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

const std::set<std::string>& allowed_keys(const std::string& command) {
  const auto& t = key_table();
  auto it = t.find(command);
  if (it == t.end()) throw ConfigError("unknown command '" + command + "'");
  return it->second;
}

const std::set<std::string>& command_names() {
  static const std::set<std::string> names = [] {
    std::set<std::string> s;
    for (const auto& [name, keys] : key_table()) s.insert(name);
    return s;
  }();
  return names;
}

std::map<std::string, std::string> parse_config_text(const std::string& text,
                                                     const std::string& command,
                                                     const std::string& source) {
  const auto& own = allowed_keys(command);
  std::set<std::string> any_key;
  for (const auto& name : command_names()) {
    const auto& k = allowed_keys(name);
    any_key.insert(k.begin(), k.end());
  }
  std::map<std::string, std::string> top;
  std::map<std::string, std::string> section_values;
  std::string section;
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  auto fail = [&](const std::string& msg) {
    throw ConfigError(source + ":" + std::to_string(line_no) + ": " + msg);
  };
  while (std::getline(in, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') fail("unterminated section header");
      section = trim(line.substr(1, line.size() - 2));
      if (!command_names().count(section)) fail("unknown section [" + section + "]");
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) fail("expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) fail("empty key");
    if (value.empty()) fail("empty value for key '" + key + "'");
    if (section.empty()) {
      if (!any_key.count(key)) fail("unknown key '" + key + "'");
      if (own.count(key)) top[key] = value;
    } else {
      if (!allowed_keys(section).count(key)) {
        fail("unknown key '" + key + "' in section [" + section + "]");
      }
      if (section == command) section_values[key] = value;
    }
  }
  for (auto& [k, v] : section_values) top[k] = v;
  return top;
}

std::map<std::string, std::string> load_config_file(const std::string& path,
                                                    const std::string& command) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_config_text(ss.str(), command, path);
}

std::string Settings::get_string(const std::string& key, const std::string& fallback) const {
  auto it = values_.find(key);
  return it == values_.end() ? fallback : it->second;
}

double Settings::get_double(const std::string& key, double fallback) const {
  auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  const char* s = it->second.c_str();
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(s, &end);
  if (end == s || *end != '\0' || errno == ERANGE) {
    throw ConfigError("key '" + key + "': '" + it->second + "' is not a number");
  }
  return v;
}

int Settings::get_int(const std::string& key, int fallback) const {
  auto v = get_optional_int(key);
  return v ? *v : fallback;
}

std::optional<int> Settings::get_optional_int(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end()) return std::nullopt;
  const char* s = it->second.c_str();
  char* end = nullptr;
  errno = 0;
  const long v = std::strtol(s, &end, 10);
  if (end == s || *end != '\0' || errno == ERANGE || v < -1000000000L || v > 1000000000L) {
    throw ConfigError("key '" + key + "': '" + it->second + "' is not an integer");
  }
  return static_cast<int>(v);
}

}  // namespace kgbound::cli
