#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "sos/config.hpp"

namespace sos {

enum class ParseErrorKind { Syntax, UnknownKey, DuplicateKey, TypeMismatch };

class ConfigParseError : public std::invalid_argument {
public:
    /// line is 1-based; 0 when the setting did not come from a file.
    ConfigParseError(ParseErrorKind kind, int line, std::string key, const std::string& detail);

    [[nodiscard]] ParseErrorKind kind() const noexcept { return kind_; }
    [[nodiscard]] int line() const noexcept { return line_; }
    [[nodiscard]] const std::string& key() const noexcept { return key_; }
    [[nodiscard]] const std::string& detail() const noexcept { return detail_; }

private:
    ParseErrorKind kind_;
    int line_;
    std::string key_;
    std::string detail_;
};

/// Parses `key = value` lines. `#` starts a comment, lists are comma
/// separated, unknown and repeated keys are rejected and missing keys keep
/// their ModelConfig defaults. The result is checked with validate_config.
ModelConfig parse_config(std::string_view text);

/// Sets one field from its textual value, as a config line would.
void apply_setting(ModelConfig& config, std::string_view key, std::string_view value);

/// Config text listing every key; parse_config(serialize_config(c)) == c.
std::string serialize_config(const ModelConfig& config);

}  // namespace sos
