#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bev {

// Flat "section.key = value" configuration. Lines starting with '#' and
// blank lines are ignored. CLI overrides are applied on top with set(),
// so precedence is: CLI flag > config file > built-in default.
class Config {
 public:
  Config() = default;

  static Config load_file(const std::string& path);
  static Config parse(const std::string& text);

  void set(const std::string& key, const std::string& value);
  bool has(const std::string& key) const;

  std::string get_string(const std::string& key, const std::string& fallback) const;
  double get_double(const std::string& key, double fallback) const;
  int get_int(const std::string& key, int fallback) const;
  std::int64_t get_int64(const std::string& key, std::int64_t fallback) const;
  bool get_bool(const std::string& key, bool fallback) const;

  const std::map<std::string, std::string>& entries() const { return values_; }

  // First key not present in `known`, if any. Used to reject typos with
  // a precise message.
  std::optional<std::string> first_unknown_key(const std::vector<std::string>& known) const;

 private:
  std::map<std::string, std::string> values_;
};

// Every key the tools understand, across all commands.
const std::vector<std::string>& known_config_keys();

}  // namespace bev
