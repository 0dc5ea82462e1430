#pragma once

// Closed-form SNR models for chains of power-mode amplifiers: droop factors,
// the generalized droop formula (GDF), the incoherent GN-model SNR, the GDF
// upper bound, gap approximations, optimum launch powers and spectral
// efficiency. All functions are pure; powers in mW, SNRs as linear ratios.

#include <cstdint>

#include "droop/units.hpp"

namespace droop {

/// Per-span signal droop at a given launch power.
struct DroopFactors {
    double chi_a = 1.0;  // ASE droop, (1 + beta/P)^-1
    double chi_n = 1.0;  // redistribution droop, 1 - alpha*P^2 - gawbs_loss
    double chi = 1.0;    // chi_a * chi_n
};

/// All SNR figures for one launch power.
struct SnrReport {
    double power_mw = 0.0;
    double snr_gdf = 0.0;
    double snr_gn = 0.0;
    double snr_gdf_ub = 0.0;
    double gap_db_exact = 0.0;   // SNR_GN(dB) - SNR_GDF(dB)
    double gap_db_approx = 0.0;
    double snr1a = 0.0;          // single-span linear SNR, P / beta
    double snr1n = 0.0;          // single-span nonlinear SNR, 1 / (alpha * P^2)
};

/// Straight-line tails of the GN and GDF curves, each obtained by removing
/// the other impairment from the exact model.
struct Asymptotes {
    double gn_linear = 0.0;
    double gn_nonlinear = 0.0;
    double gdf_linear = 0.0;
    double gdf_nonlinear = 0.0;
};

double chi_ase(double p_mw, double beta_mw);

/// Fraction of launch power moved into NLI (+GAWBS) per span.
double redistributed_fraction(double p_mw, const DerivedParams& params);

/// Throws DroopDomainError when the redistribution fraction reaches 1.
double chi_redistribution(double p_mw, const DerivedParams& params);

DroopFactors total_droop(double p_mw, const DerivedParams& params);

/// Generalized droop formula 1 / (chi^-N - 1), evaluated through
/// log1p/expm1 so it stays accurate when chi is within a few ulps of 1.
/// Returns +inf for a noise-free chain.
double snr_gdf(double p_mw, const DerivedParams& params);

/// Incoherent GN-model SNR. GAWBS enters the denominator as an additive
/// per-span noise-to-signal term.
double snr_gn(double p_mw, const DerivedParams& params);

double snr_gdf_upper_bound(double snr_gn, std::int64_t n_spans);

/// First-order GN -> GDF gap in dB.
double gap_db_approx(double snr_gn, std::int64_t n_spans);

/// Launch power where ASE equals twice the NLI.
double optimal_power_gn(const DerivedParams& params);

double max_snr_gn(const DerivedParams& params);

/// Launch power maximizing the total droop chi(P), hence SNR_GDF.
///
/// Solves P = P_oGN * chi(P)^(1/3) by fixed-point iteration started at
/// P_oGN; falls back to bisection on beta*chi(P) - 2*alpha*P^3 over
/// [P_oGN/2, P_oGN] if the iteration does not settle within 100 steps.
double optimal_power_gdf(const DerivedParams& params);

/// beta*chi(P) - 2*alpha*P^3 divided by beta*chi(P); zero at the GDF optimum.
double gdf_stationarity_residual(double p_mw, const DerivedParams& params);

/// Dual-polarization AWGN lower bound, 2*log2(1 + SNR) b/s/Hz per mode.
double spectral_efficiency(double snr);

double se_gap_approx(double snr_ogn);

Asymptotes asymptotes(double p_mw, const DerivedParams& params);

SnrReport snr_report(double p_mw, const DerivedParams& params);

namespace detail {
// The two solver paths behind optimal_power_gdf, exposed for testing.
double optimal_power_gdf_fixed_point(const DerivedParams& params, int max_iterations);
double optimal_power_gdf_bisect(const DerivedParams& params);
}  // namespace detail

}  // namespace droop
