#include "droop/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "droop/errors.hpp"

namespace droop {

namespace {

using nlohmann::json;

bool is_known_key(const std::string& key) {
    return std::find(kConfigKeys.begin(), kConfigKeys.end(), key) != kConfigKeys.end();
}

const json& require_key(const json& obj, const char* key) {
    const auto it = obj.find(key);
    if (it == obj.end()) {
        throw ConfigError(key, "required key is missing");
    }
    return *it;
}

double as_number(const json& value, const char* key) {
    if (!value.is_number()) {
        throw ConfigError(key, "expected a number");
    }
    return value.get<double>();
}

double required_number(const json& obj, const char* key) {
    return as_number(require_key(obj, key), key);
}

double optional_number(const json& obj, const char* key, double fallback) {
    const auto it = obj.find(key);
    return it == obj.end() ? fallback : as_number(*it, key);
}

std::int64_t required_integer(const json& obj, const char* key) {
    const json& value = require_key(obj, key);
    if (value.is_number_integer()) {
        return value.get<std::int64_t>();
    }
    if (value.is_number_float()) {
        const double d = value.get<double>();
        if (std::isfinite(d) && d == std::floor(d) && std::abs(d) < 9e15) {
            return static_cast<std::int64_t>(d);
        }
    }
    throw ConfigError(key, "expected an integer");
}

}  // namespace

LinkConfig parse_config(std::string_view text) {
    json obj;
    try {
        obj = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config parse error: ") + e.what());
    }
    if (!obj.is_object()) {
        throw ConfigError("config must be a flat object of numeric values");
    }
    for (const auto& [key, value] : obj.items()) {
        if (!is_known_key(key)) {
            throw ConfigError(key, "unknown configuration key");
        }
    }

    LinkConfig cfg;
    cfg.span_length_km = required_number(obj, "span_length_km");
    cfg.loss_db_per_km = required_number(obj, "loss_db_per_km");
    cfg.noise_figure_db = required_number(obj, "noise_figure_db");
    cfg.bandwidth_ghz = required_number(obj, "bandwidth_ghz");
    cfg.center_wavelength_nm =
        optional_number(obj, "center_wavelength_nm", constants::default_wavelength_nm);
    cfg.n_spans = required_integer(obj, "n_spans");
    cfg.alpha_nl_per_mw2 = required_number(obj, "alpha_nl_per_mw2");
    cfg.gamma_gawbs_per_km = optional_number(obj, "gamma_gawbs_per_km", 0.0);
    validate(cfg);
    return cfg;
}

LinkConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError("cannot open config file '" + path.string() + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

}  // namespace droop
