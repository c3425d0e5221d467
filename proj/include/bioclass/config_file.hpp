#pragma once

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "bioclass/errors.hpp"

namespace bioclass {

/// Flat `key = value` settings, one per line, `#` starts a comment.
class KeyValueConfig {
 public:
  static KeyValueConfig parse(std::istream& is, const std::set<std::string>& allowed) {
    KeyValueConfig cfg;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
      ++lineno;
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      const std::string text = trim(line);
      if (text.empty()) continue;
      const auto eq = text.find('=');
      if (eq == std::string::npos) {
        throw ConfigError("config line " + std::to_string(lineno) + ": expected 'key = value'");
      }
      const std::string key = trim(text.substr(0, eq));
      const std::string value = trim(text.substr(eq + 1));
      if (key.empty()) throw ConfigError("config line " + std::to_string(lineno) + ": empty key");
      if (!allowed.contains(key)) throw ConfigError("unknown config key '" + key + "'");
      cfg.values_[key] = value;
    }
    return cfg;
  }

  [[nodiscard]] bool has(const std::string& key) const { return values_.contains(key); }
  [[nodiscard]] const std::string& raw(const std::string& key) const { return values_.at(key); }

  template <typename T>
  void apply(const std::string& key, T& target) const {
    if (auto it = values_.find(key); it != values_.end()) target = to_number<T>(key, it->second);
  }

  void apply_list(const std::string& key, std::vector<std::size_t>& target) const {
    if (auto it = values_.find(key); it != values_.end()) target = parse_list(key, it->second);
  }

  template <typename T>
  static T to_number(const std::string& key, std::string_view text) {
    T out{};
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, out);
    if (ec != std::errc() || ptr != end) {
      throw ConfigError("invalid value '" + std::string(text) + "' for '" + key + "'");
    }
    return out;
  }

  static std::vector<std::size_t> parse_list(const std::string& key, std::string_view text) {
    std::vector<std::size_t> out;
    std::size_t start = 0;
    while (start <= text.size()) {
      const auto comma = std::min(text.find(',', start), text.size());
      out.push_back(to_number<std::size_t>(key, trim(std::string(text.substr(start, comma - start)))));
      start = comma + 1;
    }
    return out;
  }

 private:
  static std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
  }

  std::map<std::string, std::string> values_;
};

}  // namespace bioclass
