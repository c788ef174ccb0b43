#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace fglab {

// Sectioned key=value config file. Lines look like:
//
//   # comment
//   [section]
//   key = value      ; trailing comment
//
// Keys are unique within a section. Readers consume keys as they go;
// ensure_all_consumed() then rejects anything left over, so a typo in a key
// name fails loudly instead of being silently ignored.
class ConfigFile {
 public:
  static ConfigFile parse_file(const std::string& path);
  static ConfigFile parse_text(const std::string& text,
                               const std::string& origin = "<string>");

  bool has_section(const std::string& section) const;
  bool has_key(const std::string& section, const std::string& key) const;

  // Typed getters. The *_or forms consume the key if present and fall back
  // to the given default otherwise; the require_* forms throw ConfigError
  // when the key is missing. Malformed values always throw ConfigError.
  std::string require_string(const std::string& section, const std::string& key);
  std::string string_or(const std::string& section, const std::string& key,
                        const std::string& fallback);
  double require_double(const std::string& section, const std::string& key);
  double double_or(const std::string& section, const std::string& key,
                   double fallback);
  int require_int(const std::string& section, const std::string& key);
  int int_or(const std::string& section, const std::string& key, int fallback);
  bool bool_or(const std::string& section, const std::string& key,
               bool fallback);
  std::optional<double> optional_double(const std::string& section,
                                        const std::string& key);
  std::optional<std::string> optional_string(const std::string& section,
                                             const std::string& key);

  // Comma-separated list of ints, e.g. "0, 2, 4".
  std::vector<int> int_list_or(const std::string& section,
                               const std::string& key,
                               const std::vector<int>& fallback);

  // Marks a whole section as recognized even if no key was read from it.
  void allow_section(const std::string& section);

  // Throws ConfigError naming every key never consumed by any reader and
  // every section nobody recognized.
  void ensure_all_consumed() const;

  std::vector<std::string> section_names() const;

 private:
  std::string describe(const std::string& section, const std::string& key) const;
  const std::string* find(const std::string& section, const std::string& key);

  std::string origin_;
  std::map<std::string, std::map<std::string, std::string>> sections_;
  std::set<std::string> consumed_;          // "section/key"
  std::set<std::string> known_sections_;
};

}  // namespace fglab
