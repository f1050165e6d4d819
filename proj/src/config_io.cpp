#include "sos/config_io.hpp"

#include <charconv>
#include <cstdio>
#include <set>
#include <vector>

namespace sos {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

[[noreturn]] void mismatch(std::string_view key, std::string_view expected, std::string_view value) {
    throw ConfigParseError(ParseErrorKind::TypeMismatch, 0, std::string(key),
                           "expected " + std::string(expected) + ", got '" + std::string(value) + "'");
}

template <typename T>
T parse_number(std::string_view key, std::string_view value, std::string_view expected) {
    T out{};
    const auto* end = value.data() + value.size();
    const auto [ptr, ec] = std::from_chars(value.data(), end, out);
    if (ec != std::errc{} || ptr != end || value.empty()) mismatch(key, expected, value);
    return out;
}

std::vector<int> parse_int_list(std::string_view key, std::string_view value) {
    std::vector<int> out;
    if (trim(value).empty()) mismatch(key, "comma-separated integers", value);
    std::size_t pos = 0;
    while (pos <= value.size()) {
        const auto comma = value.find(',', pos);
        const auto item = trim(value.substr(pos, comma == std::string_view::npos ? value.npos : comma - pos));
        out.push_back(parse_number<int>(key, item, "comma-separated integers"));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

std::string real_text(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

ConfigParseError::ConfigParseError(ParseErrorKind kind, int line, std::string key,
                                   const std::string& detail)
    : std::invalid_argument((line > 0 ? "line " + std::to_string(line) + ": " : std::string()) +
                            (key.empty() ? std::string() : "key '" + key + "': ") + detail),
      kind_(kind),
      line_(line),
      key_(std::move(key)),
      detail_(detail) {}

void apply_setting(ModelConfig& c, std::string_view key, std::string_view value) {
    value = trim(value);
    if (key == "grid_width") {
        c.grid_width = parse_number<int>(key, value, "integer");
    } else if (key == "grid_height") {
        c.grid_height = parse_number<int>(key, value, "integer");
    } else if (key == "population") {
        c.population = parse_number<int>(key, value, "integer");
    } else if (key == "vision_radius") {
        c.vision_radius = parse_number<double>(key, value, "real");
    } else if (key == "alpha") {
        c.alpha = parse_number<double>(key, value, "real");
    } else if (key == "beta") {
        c.beta = parse_number<double>(key, value, "real");
    } else if (key == "media_levels") {
        c.media_levels = parse_int_list(key, value);
    } else if (key == "threshold") {
        c.threshold = parse_number<double>(key, value, "real");
    } else if (key == "w_sd") {
        c.w_sd = parse_number<double>(key, value, "real");
    } else if (key == "initial_split") {
        if (value == "balanced") {
            c.initial_split = InitialSplit::Balanced;
        } else if (value == "random") {
            c.initial_split = InitialSplit::Random;
        } else {
            mismatch(key, "'balanced' or 'random'", value);
        }
    } else if (key == "max_ticks") {
        c.max_ticks = parse_number<int>(key, value, "integer");
    } else if (key == "stability_window") {
        c.stability_window = parse_number<int>(key, value, "integer");
    } else if (key == "seed") {
        c.seed = parse_number<std::uint64_t>(key, value, "unsigned 64-bit integer");
    } else if (key == "w_clamp") {
        c.w_clamp = parse_number<double>(key, value, "real");
    } else {
        throw ConfigParseError(ParseErrorKind::UnknownKey, 0, std::string(key), "unknown key");
    }
}

ModelConfig parse_config(std::string_view text) {
    ModelConfig config;
    std::set<std::string, std::less<>> seen;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const auto eol = text.find('\n', pos);
        auto line = text.substr(pos, eol == std::string_view::npos ? text.npos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() : eol + 1;
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigParseError(ParseErrorKind::Syntax, line_no, {}, "expected 'key = value'");
        }
        const auto key = trim(line.substr(0, eq));
        if (key.empty()) throw ConfigParseError(ParseErrorKind::Syntax, line_no, {}, "missing key");
        if (!seen.emplace(key).second) {
            throw ConfigParseError(ParseErrorKind::DuplicateKey, line_no, std::string(key),
                                   "duplicate key");
        }
        try {
            apply_setting(config, key, line.substr(eq + 1));
        } catch (const ConfigParseError& e) {
            throw ConfigParseError(e.kind(), line_no, e.key(), e.detail());
        }
    }
    validate_config(config);
    return config;
}

std::string serialize_config(const ModelConfig& c) {
    std::string levels;
    for (std::size_t i = 0; i < c.media_levels.size(); ++i) {
        if (i > 0) levels += ", ";
        levels += std::to_string(c.media_levels[i]);
    }
    std::string out;
    auto put = [&out](std::string_view key, const std::string& value) {
        out.append(key).append(" = ").append(value).push_back('\n');
    };
    put("grid_width", std::to_string(c.grid_width));
    put("grid_height", std::to_string(c.grid_height));
    put("population", std::to_string(c.population));
    put("vision_radius", real_text(c.vision_radius));
    put("alpha", real_text(c.alpha));
    put("beta", real_text(c.beta));
    put("media_levels", levels);
    put("threshold", real_text(c.threshold));
    put("w_sd", real_text(c.w_sd));
    put("initial_split", std::string(to_string(c.initial_split)));
    put("max_ticks", std::to_string(c.max_ticks));
    put("stability_window", std::to_string(c.stability_window));
    put("seed", std::to_string(c.seed));
    put("w_clamp", real_text(c.w_clamp));
    return out;
}

}  // namespace sos
