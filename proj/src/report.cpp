#include "droop/report.hpp"

#include <charconv>
#include <cmath>
#include <system_error>

namespace droop {

namespace {

std::string chars(double x, int precision) {
    if (std::isnan(x)) {
        return "NA";
    }
    if (std::isinf(x)) {
        return x > 0 ? "inf" : "-inf";
    }
    if (x == 0.0) {
        return "0";
    }
    char buf[64];
    const auto res = precision > 0
                         ? std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::general, precision)
                         : std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

void comment(std::ostream& out, const std::string& key, const std::string& value) {
    out << "# " << key << " = " << value << '\n';
}

std::string db_or_na(double linear) {
    return linear > 0.0 ? format_number(10.0 * std::log10(linear)) : "NA";
}

}  // namespace

std::string format_number(double x) { return chars(x, 9); }

std::string format_exact(double x) { return chars(x, 0); }

RunManifest make_manifest(std::string subcommand, const LinkConfig& cfg, const DerivedParams& derived) {
    RunManifest m;
    m.subcommand = std::move(subcommand);
    m.config = cfg;
    m.derived = derived;
    return m;
}

std::vector<std::pair<std::string, std::string>> derived_fields(const DerivedParams& d) {
    return {
        {"span_loss_linear", format_number(d.span_loss_linear)},
        {"span_loss_db", db_or_na(1.0 / d.span_loss_linear)},
        {"mu_a_mw", format_number(d.mu_a_mw)},
        {"mu_a_dbm", db_or_na(d.mu_a_mw)},
        {"beta_mw", format_number(d.beta_mw)},
        {"beta_dbm", db_or_na(d.beta_mw)},
        {"alpha_nl_per_mw2", format_number(d.alpha_nl_per_mw2)},
        {"gawbs_loss", format_number(d.gawbs_loss)},
        {"n_spans", std::to_string(d.n_spans)},
    };
}

void write_manifest(std::ostream& out, const RunManifest& m) {
    const LinkConfig& c = m.config;
    comment(out, "tool", std::string(kToolName) + " " + kToolVersion);
    comment(out, "subcommand", m.subcommand);
    comment(out, "config.span_length_km", format_exact(c.span_length_km));
    comment(out, "config.loss_db_per_km", format_exact(c.loss_db_per_km));
    comment(out, "config.noise_figure_db", format_exact(c.noise_figure_db));
    comment(out, "config.bandwidth_ghz", format_exact(c.bandwidth_ghz));
    comment(out, "config.center_wavelength_nm", format_exact(c.center_wavelength_nm));
    comment(out, "config.n_spans", std::to_string(c.n_spans));
    comment(out, "config.alpha_nl_per_mw2", format_exact(c.alpha_nl_per_mw2));
    comment(out, "config.gamma_gawbs_per_km", format_exact(c.gamma_gawbs_per_km));
    for (const auto& [key, value] : derived_fields(m.derived)) {
        comment(out, "derived." + key, value);
    }
    for (const auto& [key, value] : m.grid) {
        comment(out, "grid." + key, value);
    }
    for (const auto& [key, value] : m.results) {
        comment(out, "result." + key, value);
    }
}

void write_sweep_csv(std::ostream& out, const RunManifest& manifest, const std::vector<SweepRow>& rows) {
    write_manifest(out, manifest);
    out << "p_dbm,snr_gn_db,snr_gdf_db,snr_gdf_ub_db,gap_db_exact,gap_db_approx,"
           "gn_lin_asym_db,gn_nl_asym_db,gdf_lin_asym_db,gdf_nl_asym_db,valid\n";
    for (const SweepRow& r : rows) {
        out << format_number(r.p_dbm) << ',' << format_number(r.snr_gn_db) << ','
            << format_number(r.snr_gdf_db) << ',' << format_number(r.snr_gdf_ub_db) << ','
            << format_number(r.gap_db_exact) << ',' << format_number(r.gap_db_approx) << ','
            << format_number(r.gn_lin_asym_db) << ',' << format_number(r.gn_nl_asym_db) << ','
            << format_number(r.gdf_lin_asym_db) << ',' << format_number(r.gdf_nl_asym_db) << ','
            << (r.valid ? 1 : 0) << '\n';
    }
}

void write_span_sweep_csv(std::ostream& out, const RunManifest& manifest,
                          const std::vector<SpanSweepRow>& rows) {
    write_manifest(out, manifest);
    out << "n_spans,se_o_gn,se_o_gdf,se_gap_exact,se_gap_approx\n";
    for (const SpanSweepRow& r : rows) {
        out << r.n_spans << ',' << format_number(r.se_o_gn) << ',' << format_number(r.se_o_gdf) << ','
            << format_number(r.se_gap_exact) << ',' << format_number(r.se_gap_approx) << '\n';
    }
}

void write_trace_csv(std::ostream& out, const RunManifest& manifest, const ChainResult& chain) {
    write_manifest(out, manifest);
    out << "k,p_s_mw,p_a_mw,p_n_mw,total_mw,chi_a,chi_n\n";
    const std::string chi_a = format_number(chain.droop.chi_a);
    const std::string chi_n = format_number(chain.droop.chi_n);
    for (const PowerState& s : chain.trace) {
        out << s.span_index << ',' << format_number(s.p_s_mw) << ',' << format_number(s.p_a_mw) << ','
            << format_number(s.p_n_mw) << ',' << format_number(s.total_mw()) << ',' << chi_a << ','
            << chi_n << '\n';
    }
}

}  // namespace droop
