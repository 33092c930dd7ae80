#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace wavebreak {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Line-oriented `key = value` configuration with [section] headers and
/// `#` comments. Keys are addressed as "section.key". Unknown keys are hard
/// errors, caught by require_known() against a command's schema.
class Config {
  public:
    static Config parse_file(const std::string& path);
    static Config parse_string(const std::string& text);

    bool has(const std::string& key) const;
    std::string get_string(const std::string& key) const;
    std::string get_string(const std::string& key, const std::string& fallback) const;
    double get_double(const std::string& key) const;
    double get_double(const std::string& key, double fallback) const;
    int get_int(const std::string& key) const;
    int get_int(const std::string& key, int fallback) const;
    bool get_bool(const std::string& key, bool fallback) const;
    std::vector<double> get_double_list(const std::string& key) const;

    /// Throws ConfigError naming any key outside the given schema.
    void require_known(const std::set<std::string>& known) const;

    const std::map<std::string, std::string>& entries() const { return entries_; }

  private:
    std::map<std::string, std::string> entries_;
};

}  // namespace wavebreak
