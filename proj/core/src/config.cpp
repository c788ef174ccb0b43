#include "fglab/config.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "fglab/errors.hpp"

namespace fglab {

namespace {

std::string trim(const std::string& s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

// Strips a trailing comment that starts with '#' or ';'. Values never
// contain these characters, so no quoting rules are needed.
std::string strip_comment(const std::string& s) {
  size_t pos = s.find_first_of("#;");
  return pos == std::string::npos ? s : s.substr(0, pos);
}

}  // namespace

ConfigFile ConfigFile::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_text(buf.str(), path);
}

ConfigFile ConfigFile::parse_text(const std::string& text,
                                  const std::string& origin) {
  ConfigFile cfg;
  cfg.origin_ = origin;
  std::istringstream in(text);
  std::string line;
  std::string section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string s = trim(strip_comment(line));
    if (s.empty()) continue;
    if (s.front() == '[') {
      if (s.back() != ']' || s.size() < 3)
        throw ConfigError(origin + ":" + std::to_string(lineno) +
                          ": malformed section header: " + trim(line));
      section = trim(s.substr(1, s.size() - 2));
      cfg.sections_[section];
      continue;
    }
    size_t eq = s.find('=');
    if (eq == std::string::npos)
      throw ConfigError(origin + ":" + std::to_string(lineno) +
                        ": expected key = value, got: " + s);
    std::string key = trim(s.substr(0, eq));
    std::string value = trim(s.substr(eq + 1));
    if (key.empty())
      throw ConfigError(origin + ":" + std::to_string(lineno) + ": empty key");
    if (section.empty())
      throw ConfigError(origin + ":" + std::to_string(lineno) +
                        ": key '" + key + "' appears before any [section]");
    auto& sec = cfg.sections_[section];
    if (sec.count(key))
      throw ConfigError(origin + ":" + std::to_string(lineno) +
                        ": duplicate key '" + key + "' in [" + section + "]");
    sec[key] = value;
  }
  return cfg;
}

bool ConfigFile::has_section(const std::string& section) const {
  return sections_.count(section) > 0;
}

bool ConfigFile::has_key(const std::string& section,
                         const std::string& key) const {
  auto it = sections_.find(section);
  return it != sections_.end() && it->second.count(key) > 0;
}

std::string ConfigFile::describe(const std::string& section,
                                 const std::string& key) const {
  return origin_ + ": [" + section + "] " + key;
}

const std::string* ConfigFile::find(const std::string& section,
                                    const std::string& key) {
  auto it = sections_.find(section);
  if (it == sections_.end()) return nullptr;
  auto kt = it->second.find(key);
  if (kt == it->second.end()) return nullptr;
  consumed_.insert(section + "/" + key);
  known_sections_.insert(section);
  return &kt->second;
}

std::string ConfigFile::require_string(const std::string& section,
                                       const std::string& key) {
  const std::string* v = find(section, key);
  if (!v) throw ConfigError(describe(section, key) + ": missing required key");
  return *v;
}

std::string ConfigFile::string_or(const std::string& section,
                                  const std::string& key,
                                  const std::string& fallback) {
  const std::string* v = find(section, key);
  return v ? *v : fallback;
}

double ConfigFile::require_double(const std::string& section,
                                  const std::string& key) {
  std::string v = require_string(section, key);
  char* end = nullptr;
  double x = std::strtod(v.c_str(), &end);
  if (end == v.c_str() || *end != '\0')
    throw ConfigError(describe(section, key) + ": not a number: '" + v + "'");
  return x;
}

double ConfigFile::double_or(const std::string& section, const std::string& key,
                             double fallback) {
  return has_key(section, key) ? require_double(section, key) : fallback;
}

int ConfigFile::require_int(const std::string& section,
                            const std::string& key) {
  std::string v = require_string(section, key);
  char* end = nullptr;
  long x = std::strtol(v.c_str(), &end, 10);
  if (end == v.c_str() || *end != '\0')
    throw ConfigError(describe(section, key) + ": not an integer: '" + v + "'");
  return static_cast<int>(x);
}

int ConfigFile::int_or(const std::string& section, const std::string& key,
                       int fallback) {
  return has_key(section, key) ? require_int(section, key) : fallback;
}

bool ConfigFile::bool_or(const std::string& section, const std::string& key,
                         bool fallback) {
  if (!has_key(section, key)) return fallback;
  std::string v = require_string(section, key);
  if (v == "true" || v == "yes" || v == "on" || v == "1") return true;
  if (v == "false" || v == "no" || v == "off" || v == "0") return false;
  throw ConfigError(describe(section, key) + ": not a boolean: '" + v + "'");
}

std::optional<double> ConfigFile::optional_double(const std::string& section,
                                                  const std::string& key) {
  if (!has_key(section, key)) return std::nullopt;
  return require_double(section, key);
}

std::optional<std::string> ConfigFile::optional_string(
    const std::string& section, const std::string& key) {
  if (!has_key(section, key)) return std::nullopt;
  return require_string(section, key);
}

std::vector<int> ConfigFile::int_list_or(const std::string& section,
                                         const std::string& key,
                                         const std::vector<int>& fallback) {
  if (!has_key(section, key)) return fallback;
  std::string v = require_string(section, key);
  std::vector<int> out;
  std::istringstream in(v);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::string t = trim(item);
    if (t.empty())
      throw ConfigError(describe(section, key) + ": empty list element");
    char* end = nullptr;
    long x = std::strtol(t.c_str(), &end, 10);
    if (end == t.c_str() || *end != '\0')
      throw ConfigError(describe(section, key) + ": not an integer: '" + t + "'");
    out.push_back(static_cast<int>(x));
  }
  if (out.empty())
    throw ConfigError(describe(section, key) + ": empty list");
  return out;
}

void ConfigFile::allow_section(const std::string& section) {
  known_sections_.insert(section);
}

void ConfigFile::ensure_all_consumed() const {
  std::vector<std::string> leftovers;
  for (const auto& [section, keys] : sections_) {
    if (!known_sections_.count(section)) {
      leftovers.push_back("[" + section + "] (unknown section)");
      continue;
    }
    for (const auto& [key, value] : keys) {
      if (!consumed_.count(section + "/" + key))
        leftovers.push_back("[" + section + "] " + key);
    }
  }
  if (!leftovers.empty()) {
    std::string msg = origin_ + ": unknown config keys:";
    for (const auto& l : leftovers) msg += "\n  " + l;
    throw ConfigError(msg);
  }
}

std::vector<std::string> ConfigFile::section_names() const {
  std::vector<std::string> out;
  for (const auto& [section, keys] : sections_) out.push_back(section);
  return out;
}

}  // namespace fglab
