#pragma once

#include <array>
#include <filesystem>
#include <string>
#include <string_view>

#include "droop/units.hpp"

namespace droop {

/// Accepted configuration keys, in canonical output order.
inline constexpr std::array<std::string_view, 8> kConfigKeys = {
    "span_length_km",       "loss_db_per_km", "noise_figure_db",  "bandwidth_ghz",
    "center_wavelength_nm", "n_spans",        "alpha_nl_per_mw2", "gamma_gawbs_per_km",
};

/// Parses a flat JSON object of numeric values. Missing optional keys take
/// their defaults (center_wavelength_nm = 1550, gamma_gawbs_per_km = 0);
/// unknown keys, missing required keys and invariant violations raise
/// ConfigError naming the key.
LinkConfig parse_config(std::string_view text);

LinkConfig load_config(const std::filesystem::path& path);

}  // namespace droop
