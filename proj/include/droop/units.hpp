#pragma once

// Unit conversions, physical constants and the linear-domain working set of
// an amplified link. Internal power unit is mW throughout; dBm only appears
// at I/O boundaries.

#include <cstdint>

namespace droop {

namespace constants {
inline constexpr double planck_js = 6.62607015e-34;        // J*s, SI exact
inline constexpr double speed_of_light_mps = 299792458.0;  // m/s, SI exact
inline constexpr double default_wavelength_nm = 1550.0;
}  // namespace constants

double db_to_linear(double x_db);
double linear_to_db(double ratio);
double dbm_to_mw(double p_dbm);
double mw_to_dbm(double p_mw);

/// User-facing description of N identical spans, engineering units.
struct LinkConfig {
    double span_length_km = 0.0;
    double loss_db_per_km = 0.0;
    double noise_figure_db = 0.0;
    double bandwidth_ghz = 0.0;  // per-channel ASE / receiver bandwidth
    double center_wavelength_nm = constants::default_wavelength_nm;
    std::int64_t n_spans = 0;
    double alpha_nl_per_mw2 = 0.0;
    double gamma_gawbs_per_km = 0.0;
};

/// Throws ConfigError naming the first offending field.
void validate(const LinkConfig& cfg);

/// Linear-unit working set used by every model computation.
struct DerivedParams {
    double span_loss_linear = 1.0;  // L in (0, 1)
    double mu_a_mw = 0.0;           // equivalent input ASE, h*nu*F*B
    double beta_mw = 0.0;           // per-span output ASE without droop, mu_a / L
    double alpha_nl_per_mw2 = 0.0;
    double gawbs_loss = 0.0;        // gamma_gawbs * span length
    std::int64_t n_spans = 1;
};

/// Carrier frequency in Hz for a wavelength in nm.
double carrier_frequency_hz(double wavelength_nm);

/// Span loss in dB (positive number) of the config.
double span_loss_db(const LinkConfig& cfg);

DerivedParams derive_params(const LinkConfig& cfg);

}  // namespace droop
