#ifndef GARDNER_CONFIG_HPP
#define GARDNER_CONFIG_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace gardner {

/// Flat `key = value` configuration. '#' starts a comment; keys are
/// dot-separated paths; values are free text parsed on access.
class Config {
public:
    Config() = default;

    static Config parse_file(const std::string& path);
    static Config parse_string(const std::string& text);

    bool has(const std::string& key) const;

    std::string get_string(const std::string& key) const;
    std::string get_string(const std::string& key, const std::string& fallback) const;
    double get_double(const std::string& key) const;
    double get_double(const std::string& key, double fallback) const;
    int get_int(const std::string& key) const;
    int get_int(const std::string& key, int fallback) const;
    uint64_t get_u64(const std::string& key, uint64_t fallback) const;
    bool get_bool(const std::string& key, bool fallback) const;

    /// Comma-separated list of doubles.
    std::vector<double> get_double_list(const std::string& key, std::vector<double> fallback) const;
    std::vector<std::string> get_string_list(const std::string& key,
                                             std::vector<std::string> fallback) const;

    void set(const std::string& key, const std::string& value);

    /// Deterministic key-sorted `key = value` lines, used to embed the
    /// resolved configuration in every report.
    std::string dump() const;
    const std::map<std::string, std::string>& entries() const { return entries_; }

private:
    std::map<std::string, std::string> entries_;
};

}  // namespace gardner

#endif
