#include "droop/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "droop/droop.hpp"
#include "droop/errors.hpp"

namespace droop {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double to_db(double snr) { return linear_to_db(snr); }

}  // namespace

std::vector<double> PowerGrid::points() const {
    if (!std::isfinite(p_min_dbm) || !std::isfinite(p_max_dbm) || !(p_min_dbm < p_max_dbm)) {
        throw ConfigError("pmin", "power grid needs finite pmin < pmax");
    }
    if (!std::isfinite(step_db) || !(step_db > 0.0)) {
        throw ConfigError("step", "power grid step must be > 0");
    }
    // Small slack so that pmax lands on the grid despite rounding in the ratio.
    const double span = (p_max_dbm - p_min_dbm) / step_db;
    const auto count = static_cast<std::int64_t>(std::floor(span + 1e-9)) + 1;
    if (count > 10'000'000) {
        throw ConfigError("step", "power grid has too many points");
    }
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(count));
    for (std::int64_t i = 0; i < count; ++i) {
        out.push_back(p_min_dbm + static_cast<double>(i) * step_db);
    }
    return out;
}

std::vector<std::int64_t> SpanGrid::points() const {
    if (n_min < 1 || n_max < n_min) {
        throw ConfigError("nmin", "span grid needs 1 <= nmin <= nmax");
    }
    if (n_step < 1) {
        throw ConfigError("nstep", "span grid step must be >= 1");
    }
    std::vector<std::int64_t> out;
    for (std::int64_t n = n_min; n <= n_max; n += n_step) {
        out.push_back(n);
    }
    return out;
}

SweepRow evaluate_power_row(double p_dbm, const DerivedParams& params) {
    SweepRow row;
    row.p_dbm = p_dbm;
    const double p_mw = dbm_to_mw(p_dbm);
    if (redistributed_fraction(p_mw, params) >= 1.0 ||
        params.alpha_nl_per_mw2 * p_mw * p_mw >= 1.0) {
        row.valid = false;
        row.snr_gn_db = row.snr_gdf_db = row.snr_gdf_ub_db = kNaN;
        row.gap_db_exact = row.gap_db_approx = kNaN;
        row.gn_lin_asym_db = row.gn_nl_asym_db = row.gdf_lin_asym_db = row.gdf_nl_asym_db = kNaN;
        return row;
    }

    const SnrReport r = snr_report(p_mw, params);
    const Asymptotes a = asymptotes(p_mw, params);
    row.valid = true;
    row.snr_gn_db = to_db(r.snr_gn);
    row.snr_gdf_db = to_db(r.snr_gdf);
    row.snr_gdf_ub_db = to_db(r.snr_gdf_ub);
    row.gap_db_exact = r.gap_db_exact;
    row.gap_db_approx = r.gap_db_approx;
    row.gn_lin_asym_db = to_db(a.gn_linear);
    row.gn_nl_asym_db = to_db(a.gn_nonlinear);
    row.gdf_lin_asym_db = to_db(a.gdf_linear);
    row.gdf_nl_asym_db = to_db(a.gdf_nonlinear);
    return row;
}

std::vector<SweepRow> sweep_power(const DerivedParams& params, const PowerGrid& grid) {
    std::vector<SweepRow> rows;
    for (double p_dbm : grid.points()) {
        rows.push_back(evaluate_power_row(p_dbm, params));
    }
    return rows;
}

std::vector<SweepRow> sweep_power(const LinkConfig& cfg, const PowerGrid& grid) {
    return sweep_power(derive_params(cfg), grid);
}

SpanSweepRow evaluate_span_row(std::int64_t n_spans, const DerivedParams& params) {
    DerivedParams at_n = params;
    at_n.n_spans = n_spans;

    const double snr_ogn = max_snr_gn(at_n);
    const double snr_ogdf = snr_gdf(optimal_power_gdf(at_n), at_n);

    SpanSweepRow row;
    row.n_spans = n_spans;
    row.se_o_gn = spectral_efficiency(snr_ogn);
    row.se_o_gdf = spectral_efficiency(snr_ogdf);
    row.se_gap_exact = row.se_o_gn - row.se_o_gdf;
    row.se_gap_approx = se_gap_approx(snr_ogn);
    return row;
}

std::vector<SpanSweepRow> sweep_spans(const DerivedParams& params, const SpanGrid& grid) {
    std::vector<SpanSweepRow> rows;
    for (std::int64_t n : grid.points()) {
        rows.push_back(evaluate_span_row(n, params));
    }
    return rows;
}

std::vector<SpanSweepRow> sweep_spans(const LinkConfig& cfg, const SpanGrid& grid) {
    return sweep_spans(derive_params(cfg), grid);
}

OptimumSummary top_markers(const DerivedParams& params) {
    OptimumSummary s;
    s.p_ogn_mw = optimal_power_gn(params);
    s.snr_ogn = max_snr_gn(params);
    s.p_ogdf_mw = optimal_power_gdf(params);
    s.snr_ogdf = snr_gdf(s.p_ogdf_mw, params);
    s.snr_ogdf_predicted = snr_gdf_upper_bound(s.snr_ogn, params.n_spans);
    s.prediction_error_db = to_db(s.snr_ogdf_predicted) - to_db(s.snr_ogdf);
    s.stationarity_residual = gdf_stationarity_residual(s.p_ogdf_mw, params);
    return s;
}

OptimumSummary top_markers(const LinkConfig& cfg) { return top_markers(derive_params(cfg)); }

double peak_snr_gdf_db(const std::vector<SweepRow>& rows, const DerivedParams& params) {
    double best = -std::numeric_limits<double>::infinity();
    for (const SweepRow& r : rows) {
        if (r.valid) {
            best = std::max(best, r.snr_gdf_db);
        }
    }
    try {
        best = std::max(best, to_db(snr_gdf(optimal_power_gdf(params), params)));
    } catch (const DomainError&) {
        // no finite optimum: grid maximum only
    }
    return std::isfinite(best) ? best : kNaN;
}

}  // namespace droop
