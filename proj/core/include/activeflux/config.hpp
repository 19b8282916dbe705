// Plain-text run configuration: "key = value" lines grouped under
// "[section]" headers, '#' or ';' comments.  Keys are stored flattened as
// "section.key"; lines before any header keep the bare key.  Lookups with
// defaults let the harness layer case defaults under file values under CLI
// overrides.
#pragma once

#include <map>
#include <string>
#include <vector>

namespace activeflux {

class ConfigFile {
  public:
    static ConfigFile parse_file(const std::string& path);
    static ConfigFile parse_string(const std::string& text);

    bool has(const std::string& key) const { return values_.count(key) != 0; }
    // Overwrites an existing value; used for CLI "--set key=value".
    void set(const std::string& key, const std::string& value) {
        values_[key] = value;
    }

    std::string get_string(const std::string& key,
                           const std::string& fallback) const;
    double get_double(const std::string& key, double fallback) const;
    int get_int(const std::string& key, int fallback) const;
    bool get_bool(const std::string& key, bool fallback) const;

    // Required variants throw std::runtime_error naming the missing key.
    std::string require_string(const std::string& key) const;
    double require_double(const std::string& key) const;

    std::vector<std::string> keys() const;

  private:
    std::map<std::string, std::string> values_;
};

} // namespace activeflux
