#include "droop/units.hpp"

#include <cmath>
#include <string>

#include "droop/errors.hpp"

namespace droop {

namespace {

void require_finite(double x, const char* what) {
    if (!std::isfinite(x)) {
        throw DomainError(std::string(what) + ": non-finite input");
    }
}

void require_positive(double value, const char* key) {
    if (!std::isfinite(value) || !(value > 0.0)) {
        throw ConfigError(key, "must be finite and > 0, got " + std::to_string(value));
    }
}

void require_non_negative(double value, const char* key) {
    if (!std::isfinite(value) || value < 0.0) {
        throw ConfigError(key, "must be finite and >= 0, got " + std::to_string(value));
    }
}

}  // namespace

double db_to_linear(double x_db) {
    require_finite(x_db, "db_to_linear");
    return std::pow(10.0, x_db / 10.0);
}

double linear_to_db(double ratio) {
    if (std::isnan(ratio) || ratio < 0.0) {
        throw DomainError("linear_to_db: ratio must be >= 0");
    }
    return 10.0 * std::log10(ratio);
}

double dbm_to_mw(double p_dbm) {
    require_finite(p_dbm, "dbm_to_mw");
    return std::pow(10.0, p_dbm / 10.0);
}

double mw_to_dbm(double p_mw) {
    if (!std::isfinite(p_mw) || !(p_mw > 0.0)) {
        throw DomainError("mw_to_dbm: power must be finite and > 0");
    }
    return 10.0 * std::log10(p_mw);
}

void validate(const LinkConfig& cfg) {
    require_positive(cfg.span_length_km, "span_length_km");
    require_positive(cfg.loss_db_per_km, "loss_db_per_km");
    if (!std::isfinite(cfg.noise_figure_db)) {
        throw ConfigError("noise_figure_db", "must be finite");
    }
    require_positive(cfg.bandwidth_ghz, "bandwidth_ghz");
    require_positive(cfg.center_wavelength_nm, "center_wavelength_nm");
    if (cfg.n_spans < 1) {
        throw ConfigError("n_spans", "must be >= 1, got " + std::to_string(cfg.n_spans));
    }
    require_non_negative(cfg.alpha_nl_per_mw2, "alpha_nl_per_mw2");
    require_non_negative(cfg.gamma_gawbs_per_km, "gamma_gawbs_per_km");
}

double carrier_frequency_hz(double wavelength_nm) {
    return constants::speed_of_light_mps / (wavelength_nm * 1e-9);
}

double span_loss_db(const LinkConfig& cfg) {
    return cfg.loss_db_per_km * cfg.span_length_km;
}

DerivedParams derive_params(const LinkConfig& cfg) {
    validate(cfg);

    DerivedParams p;
    p.span_loss_linear = std::pow(10.0, -span_loss_db(cfg) / 10.0);
    if (!(p.span_loss_linear > 0.0) || !(p.span_loss_linear < 1.0)) {
        throw ConfigError("loss_db_per_km",
                          "span loss must lie strictly between 0 and 1 in linear units");
    }

    const double photon_energy_j = constants::planck_js * carrier_frequency_hz(cfg.center_wavelength_nm);
    const double mu_a_w = photon_energy_j * db_to_linear(cfg.noise_figure_db) * (cfg.bandwidth_ghz * 1e9);
    p.mu_a_mw = mu_a_w * 1e3;
    p.beta_mw = p.mu_a_mw / p.span_loss_linear;
    p.alpha_nl_per_mw2 = cfg.alpha_nl_per_mw2;
    p.gawbs_loss = cfg.gamma_gawbs_per_km * cfg.span_length_km;
    if (p.gawbs_loss >= 1.0) {
        throw DomainError("GAWBS removes all power per span (gamma_gawbs * span length >= 1)");
    }
    p.n_spans = cfg.n_spans;
    return p;
}

}  // namespace droop
