#include "droop/cli.hpp"

#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <utility>

#include "CLI11.hpp"

#include "droop/config.hpp"
#include "droop/droop.hpp"
#include "droop/errors.hpp"
#include "droop/report.hpp"
#include "droop/span_chain.hpp"
#include "droop/sweep.hpp"

namespace droop {

namespace {

using KeyValues = std::vector<std::pair<std::string, std::string>>;

struct Options {
    std::string config_path;
    std::string out_path;
    std::string format = "table";
    PowerGrid power_grid;
    SpanGrid span_grid;
    double power_dbm = 0.0;
    std::optional<double> beta_override;
    std::optional<double> alpha_override;
};

void print_key_values(std::ostream& out, const KeyValues& kv) {
    std::size_t width = 0;
    for (const auto& [key, value] : kv) {
        width = std::max(width, key.size());
    }
    for (const auto& [key, value] : kv) {
        out << std::left << std::setw(static_cast<int>(width)) << key << " = " << value << '\n';
    }
}

// Writes to --out when given (binary mode, so bytes match on every platform),
// otherwise to `out`.
void emit(const Options& opt, std::ostream& out, const std::function<void(std::ostream&)>& body) {
    if (opt.out_path.empty() || opt.out_path == "-") {
        body(out);
        return;
    }
    std::ofstream file(opt.out_path, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw ConfigError("out", "cannot open output file '" + opt.out_path + "'");
    }
    body(file);
    file.flush();
    if (!file) {
        throw ConfigError("out", "failed writing output file '" + opt.out_path + "'");
    }
}

DerivedParams apply_overrides(DerivedParams params, const Options& opt) {
    if (opt.beta_override) {
        if (!(*opt.beta_override >= 0.0)) {
            throw ConfigError("beta-mw", "override must be >= 0");
        }
        params.beta_mw = *opt.beta_override;
    }
    if (opt.alpha_override) {
        if (!(*opt.alpha_override >= 0.0)) {
            throw ConfigError("alpha-nl-per-mw2", "override must be >= 0");
        }
        params.alpha_nl_per_mw2 = *opt.alpha_override;
    }
    return params;
}

KeyValues snr_pair(const std::string& name, double snr) {
    return {{name, format_number(snr)},
            {name + "_db", snr > 0.0 ? format_number(linear_to_db(snr)) : "-inf"}};
}

void append(KeyValues& dst, const KeyValues& src) { dst.insert(dst.end(), src.begin(), src.end()); }

void cmd_derive(const Options& opt, std::ostream& out) {
    const LinkConfig cfg = load_config(opt.config_path);
    const DerivedParams d = derive_params(cfg);
    const KeyValues fields = derived_fields(d);
    if (opt.format == "kv") {
        for (const auto& [key, value] : fields) {
            out << key << '=' << value << '\n';
        }
        return;
    }
    out << std::left << std::setw(18) << "quantity" << std::setw(18) << "value" << "unit\n";
    const char* units[] = {"-", "dB", "mW", "dBm", "mW", "dBm", "1/mW^2", "-", "-"};
    for (std::size_t i = 0; i < fields.size(); ++i) {
        out << std::left << std::setw(18) << fields[i].first << std::setw(18) << fields[i].second
            << units[i] << '\n';
    }
}

void cmd_sweep_power(const Options& opt, std::ostream& out) {
    const LinkConfig cfg = load_config(opt.config_path);
    const DerivedParams d = derive_params(cfg);
    const std::vector<SweepRow> rows = sweep_power(d, opt.power_grid);
    RunManifest m = make_manifest("sweep-power", cfg, d);
    m.grid = {{"pmin_dbm", format_exact(opt.power_grid.p_min_dbm)},
              {"pmax_dbm", format_exact(opt.power_grid.p_max_dbm)},
              {"step_db", format_exact(opt.power_grid.step_db)}};
    emit(opt, out, [&](std::ostream& os) { write_sweep_csv(os, m, rows); });
}

void cmd_sweep_spans(const Options& opt, std::ostream& out) {
    const LinkConfig cfg = load_config(opt.config_path);
    const DerivedParams d = derive_params(cfg);
    const std::vector<SpanSweepRow> rows = sweep_spans(d, opt.span_grid);
    RunManifest m = make_manifest("sweep-spans", cfg, d);
    m.grid = {{"nmin", std::to_string(opt.span_grid.n_min)},
              {"nmax", std::to_string(opt.span_grid.n_max)},
              {"nstep", std::to_string(opt.span_grid.n_step)}};
    emit(opt, out, [&](std::ostream& os) { write_span_sweep_csv(os, m, rows); });
}

void cmd_optimum(const Options& opt, std::ostream& out) {
    const DerivedParams d = derive_params(load_config(opt.config_path));
    const OptimumSummary s = top_markers(d);
    KeyValues kv = {{"p_ogn_mw", format_number(s.p_ogn_mw)},
                    {"p_ogn_dbm", format_number(mw_to_dbm(s.p_ogn_mw))}};
    append(kv, snr_pair("snr_ogn", s.snr_ogn));
    kv.emplace_back("p_ogdf_mw", format_number(s.p_ogdf_mw));
    kv.emplace_back("p_ogdf_dbm", format_number(mw_to_dbm(s.p_ogdf_mw)));
    append(kv, snr_pair("snr_ogdf", s.snr_ogdf));
    append(kv, snr_pair("snr_ogdf_predicted", s.snr_ogdf_predicted));
    kv.emplace_back("prediction_error_db", format_number(s.prediction_error_db));
    kv.emplace_back("stationarity_residual", format_number(s.stationarity_residual));
    kv.emplace_back("se_ogn", format_number(spectral_efficiency(s.snr_ogn)));
    kv.emplace_back("se_ogdf", format_number(spectral_efficiency(s.snr_ogdf)));
    print_key_values(out, kv);
}

void cmd_simulate(const Options& opt, std::ostream& out, std::ostream& report) {
    const LinkConfig cfg = load_config(opt.config_path);
    const DerivedParams d = apply_overrides(derive_params(cfg), opt);
    const ChainResult chain = run_chain(dbm_to_mw(opt.power_dbm), d);

    RunManifest m = make_manifest("simulate", cfg, d);
    m.grid = {{"power_dbm", format_exact(opt.power_dbm)}};
    m.results = snr_pair("final_snr", chain.snr);
    emit(opt, out, [&](std::ostream& os) { write_trace_csv(os, m, chain); });
    if (!opt.out_path.empty() && opt.out_path != "-") {
        print_key_values(report, m.results);
    }
}

void cmd_gap(const Options& opt, std::ostream& out) {
    const DerivedParams d = apply_overrides(derive_params(load_config(opt.config_path)), opt);
    const double p_mw = dbm_to_mw(opt.power_dbm);
    const SnrReport r = snr_report(p_mw, d);
    KeyValues kv = {{"power_dbm", format_number(opt.power_dbm)}, {"power_mw", format_number(p_mw)}};
    append(kv, snr_pair("snr_gn", r.snr_gn));
    append(kv, snr_pair("snr_gdf", r.snr_gdf));
    append(kv, snr_pair("snr_gdf_ub", r.snr_gdf_ub));
    kv.emplace_back("gap_db_exact", format_number(r.gap_db_exact));
    kv.emplace_back("gap_db_approx", format_number(r.gap_db_approx));
    kv.emplace_back("snr1a", format_number(r.snr1a));
    kv.emplace_back("snr1n", format_number(r.snr1n));
    print_key_values(out, kv);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"SNR and spectral efficiency of power-mode amplified links", kToolName};
    app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);
    app.require_subcommand(1);

    Options opt;
    const auto add_config = [&](CLI::App* sub) {
        sub->add_option("--config", opt.config_path, "link configuration (JSON object)")->required();
    };
    const auto add_out = [&](CLI::App* sub) {
        sub->add_option("--out", opt.out_path, "output CSV path (stdout if omitted)");
    };
    const auto add_overrides = [&](CLI::App* sub) {
        sub->add_option("--beta-mw", opt.beta_override, "override per-span output ASE beta (mW)");
        sub->add_option("--alpha-nl-per-mw2", opt.alpha_override, "override NLI coefficient (1/mW^2)");
    };

    CLI::App* derive = app.add_subcommand("derive", "print derived linear-unit parameters");
    add_config(derive);
    derive->add_option("--format", opt.format, "table or kv")
        ->check(CLI::IsMember({"table", "kv"}))
        ->capture_default_str();

    CLI::App* sweep_p = app.add_subcommand("sweep-power", "SNR versus launch power CSV");
    add_config(sweep_p);
    sweep_p->add_option("--pmin", opt.power_grid.p_min_dbm, "first power (dBm)")->capture_default_str();
    sweep_p->add_option("--pmax", opt.power_grid.p_max_dbm, "last power (dBm)")->capture_default_str();
    sweep_p->add_option("--step", opt.power_grid.step_db, "grid step (dB)")->capture_default_str();
    add_out(sweep_p);

    CLI::App* sweep_n = app.add_subcommand("sweep-spans", "top spectral efficiency versus span count CSV");
    add_config(sweep_n);
    sweep_n->add_option("--nmin", opt.span_grid.n_min, "first span count")->capture_default_str();
    sweep_n->add_option("--nmax", opt.span_grid.n_max, "last span count")->capture_default_str();
    sweep_n->add_option("--nstep", opt.span_grid.n_step, "span count step")->capture_default_str();
    add_out(sweep_n);

    CLI::App* optimum = app.add_subcommand("optimum", "optimum launch powers and top SNRs");
    add_config(optimum);

    CLI::App* simulate = app.add_subcommand("simulate", "per-span power bookkeeping trace CSV");
    add_config(simulate);
    simulate->add_option("--power-dbm", opt.power_dbm, "launch power per channel (dBm)")->required();
    add_out(simulate);
    add_overrides(simulate);

    CLI::App* gap = app.add_subcommand("gap", "GN, GDF and bound SNRs at one power");
    add_config(gap);
    gap->add_option("--power-dbm", opt.power_dbm, "launch power per channel (dBm)")->required();
    add_overrides(gap);

    std::vector<char*> argv;
    std::vector<std::string> storage = args;
    if (storage.empty()) {
        storage.emplace_back(kToolName);
    }
    for (std::string& s : storage) {
        argv.push_back(s.data());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitConfigError;
    }

    try {
        if (derive->parsed()) {
            cmd_derive(opt, out);
        } else if (sweep_p->parsed()) {
            cmd_sweep_power(opt, out);
        } else if (sweep_n->parsed()) {
            cmd_sweep_spans(opt, out);
        } else if (optimum->parsed()) {
            cmd_optimum(opt, out);
        } else if (simulate->parsed()) {
            cmd_simulate(opt, out, out);
        } else if (gap->parsed()) {
            cmd_gap(opt, out);
        }
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return kExitConfigError;
    } catch (const Error& e) {
        err << "model error: " << e.what() << '\n';
        return kExitModelError;
    }
    return kExitOk;
}

}  // namespace droop
