#pragma once

// Figure-style data sets: SNR versus launch power, top spectral efficiency
// versus span count, and the optimum-power markers.

#include <cstdint>
#include <vector>

#include "droop/units.hpp"

namespace droop {

/// Uniform dBm grid; point i is p_min_dbm + i * step_db (no accumulation).
struct PowerGrid {
    double p_min_dbm = -20.0;
    double p_max_dbm = 8.0;
    double step_db = 0.1;

    std::vector<double> points() const;
};

struct SpanGrid {
    std::int64_t n_min = 10;
    std::int64_t n_max = 500;
    std::int64_t n_step = 10;

    std::vector<std::int64_t> points() const;
};

/// One power-sweep record. When the redistribution model is invalid at this
/// power, valid is false and every model column is NaN.
struct SweepRow {
    double p_dbm = 0.0;
    bool valid = false;
    double snr_gn_db = 0.0;
    double snr_gdf_db = 0.0;
    double snr_gdf_ub_db = 0.0;
    double gap_db_exact = 0.0;
    double gap_db_approx = 0.0;
    double gn_lin_asym_db = 0.0;
    double gn_nl_asym_db = 0.0;
    double gdf_lin_asym_db = 0.0;
    double gdf_nl_asym_db = 0.0;
};

struct SpanSweepRow {
    std::int64_t n_spans = 0;
    double se_o_gn = 0.0;
    double se_o_gdf = 0.0;
    double se_gap_exact = 0.0;
    double se_gap_approx = 0.0;
};

struct OptimumSummary {
    double p_ogn_mw = 0.0;
    double snr_ogn = 0.0;
    double p_ogdf_mw = 0.0;
    double snr_ogdf = 0.0;
    /// SNR_oGDF predicted from SNR_oGN through the GDF upper bound.
    double snr_ogdf_predicted = 0.0;
    /// predicted - exact, in dB.
    double prediction_error_db = 0.0;
    double stationarity_residual = 0.0;
};

SweepRow evaluate_power_row(double p_dbm, const DerivedParams& params);

std::vector<SweepRow> sweep_power(const DerivedParams& params, const PowerGrid& grid);
std::vector<SweepRow> sweep_power(const LinkConfig& cfg, const PowerGrid& grid);

SpanSweepRow evaluate_span_row(std::int64_t n_spans, const DerivedParams& params);

std::vector<SpanSweepRow> sweep_spans(const DerivedParams& params, const SpanGrid& grid);
std::vector<SpanSweepRow> sweep_spans(const LinkConfig& cfg, const SpanGrid& grid);

OptimumSummary top_markers(const DerivedParams& params);
OptimumSummary top_markers(const LinkConfig& cfg);

/// Peak SNR_GDF in dB: the larger of the best valid grid row and the exact
/// optimum marker. NaN if neither is available.
double peak_snr_gdf_db(const std::vector<SweepRow>& rows, const DerivedParams& params);

}  // namespace droop
