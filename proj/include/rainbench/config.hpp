#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace rainbench {

/// Flat `key = value` text file. `#` starts a comment, blank lines are
/// skipped, later occurrences of a key win. Used for droplet-style files,
/// calibration fit files and sweep configs.
class Config {
public:
    Config() = default;

    static Config parse_file(const std::filesystem::path& path);
    static Config parse_text(const std::string& text, const std::string& origin = "<string>");

    bool has(const std::string& key) const { return values_.count(key) != 0; }

    std::string get(const std::string& key, const std::string& fallback) const;
    std::string require(const std::string& key) const;

    double get_double(const std::string& key, double fallback) const;
    int get_int(const std::string& key, int fallback) const;
    std::uint64_t get_u64(const std::string& key, std::uint64_t fallback) const;

    void set(const std::string& key, const std::string& value) { values_[key] = value; }

    const std::map<std::string, std::string>& values() const { return values_; }

    /// Keys present in the file but not in `known` (typo guard for strict
    /// consumers).
    std::vector<std::string> unknown_keys(const std::vector<std::string>& known) const;

private:
    std::map<std::string, std::string> values_;
    std::string origin_ = "<empty>";
};

/// Comma-separated list of doubles ("0,10,20"). Throws BadConfig on junk.
std::vector<double> parse_double_list(const std::string& text, const std::string& what);

} // namespace rainbench
