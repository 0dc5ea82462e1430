#include "droop/droop.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "droop/errors.hpp"

namespace droop {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kFixedPointCap = 100;
constexpr double kFixedPointTol = 1e-12;

void require_power(double p_mw, const char* where) {
    if (!std::isfinite(p_mw) || !(p_mw > 0.0)) {
        throw DomainError(std::string(where) + ": power must be finite and > 0");
    }
}

void require_spans(std::int64_t n_spans, const char* where) {
    if (n_spans < 1) {
        throw DomainError(std::string(where) + ": n_spans must be >= 1");
    }
}

// Shared so that the asymptotes reproduce snr_gdf bit-for-bit when the
// other impairment is zero.
double nli_fraction(double p_mw, double alpha_nl) { return alpha_nl * p_mw * p_mw; }

// -ln(chi) = ln(1 + beta/P) - ln(1 - f)
double neg_log_chi(double p_mw, const DerivedParams& params) {
    const double f = redistributed_fraction(p_mw, params);
    if (f >= 1.0) {
        throw DroopDomainError(p_mw, f);
    }
    return std::log1p(params.beta_mw / p_mw) - std::log1p(-f);
}

double inverse_of_expm1(double exponent) {
    const double denom = std::expm1(exponent);
    return denom > 0.0 ? 1.0 / denom : kInf;
}

}  // namespace

DroopDomainError::DroopDomainError(double power_mw, double redistributed_fraction)
    : DomainError("redistribution droop invalid at P = " + std::to_string(power_mw) +
                  " mW: alpha_nl*P^2 + gawbs_loss = " + std::to_string(redistributed_fraction) +
                  " >= 1"),
      power_mw_(power_mw),
      fraction_(redistributed_fraction) {}

double chi_ase(double p_mw, double beta_mw) {
    require_power(p_mw, "chi_ase");
    if (!(beta_mw >= 0.0)) {
        throw DomainError("chi_ase: beta must be >= 0");
    }
    return 1.0 / (1.0 + beta_mw / p_mw);
}

double redistributed_fraction(double p_mw, const DerivedParams& params) {
    return nli_fraction(p_mw, params.alpha_nl_per_mw2) + params.gawbs_loss;
}

double chi_redistribution(double p_mw, const DerivedParams& params) {
    require_power(p_mw, "chi_redistribution");
    const double f = redistributed_fraction(p_mw, params);
    if (f >= 1.0) {
        throw DroopDomainError(p_mw, f);
    }
    return 1.0 - f;
}

DroopFactors total_droop(double p_mw, const DerivedParams& params) {
    DroopFactors d;
    d.chi_a = chi_ase(p_mw, params.beta_mw);
    d.chi_n = chi_redistribution(p_mw, params);
    d.chi = d.chi_a * d.chi_n;
    return d;
}

double snr_gdf(double p_mw, const DerivedParams& params) {
    require_power(p_mw, "snr_gdf");
    require_spans(params.n_spans, "snr_gdf");
    if (params.n_spans == 1) {
        // chi^-1 - 1 = (beta + f*P) / (P * chi_n); reduces to P/beta without NLI
        const double chi_n = chi_redistribution(p_mw, params);
        const double noise = params.beta_mw + redistributed_fraction(p_mw, params) * p_mw;
        return noise > 0.0 ? p_mw * chi_n / noise : kInf;
    }
    const double n = static_cast<double>(params.n_spans);
    return inverse_of_expm1(n * neg_log_chi(p_mw, params));
}

double snr_gn(double p_mw, const DerivedParams& params) {
    require_power(p_mw, "snr_gn");
    require_spans(params.n_spans, "snr_gn");
    const double x = params.beta_mw / p_mw + nli_fraction(p_mw, params.alpha_nl_per_mw2) +
                     params.gawbs_loss;
    if (!(x > 0.0)) {
        return kInf;
    }
    return 1.0 / (static_cast<double>(params.n_spans) * x);
}

double snr_gdf_upper_bound(double snr_gn, std::int64_t n_spans) {
    if (!(snr_gn > 0.0)) {
        throw DomainError("snr_gdf_upper_bound: SNR_GN must be > 0");
    }
    require_spans(n_spans, "snr_gdf_upper_bound");
    const double excess = 1.0 - 1.0 / static_cast<double>(n_spans);
    return snr_gn / (1.0 + excess / (2.0 * snr_gn));
}

double gap_db_approx(double snr_gn, std::int64_t n_spans) {
    if (!(snr_gn > 0.0)) {
        throw DomainError("gap_db_approx: SNR_GN must be > 0");
    }
    require_spans(n_spans, "gap_db_approx");
    const double excess = 1.0 - 1.0 / static_cast<double>(n_spans);
    return 5.0 * std::numbers::log10e * excess / snr_gn;
}

double optimal_power_gn(const DerivedParams& params) {
    if (!(params.alpha_nl_per_mw2 > 0.0)) {
        throw NoOptimumError("no finite optimum: alpha_nl = 0 makes SNR monotone in power");
    }
    if (!(params.beta_mw > 0.0)) {
        throw DomainError("optimal power requires beta > 0");
    }
    return std::cbrt(params.beta_mw / (2.0 * params.alpha_nl_per_mw2));
}

double max_snr_gn(const DerivedParams& params) {
    const double p = optimal_power_gn(params);
    require_spans(params.n_spans, "max_snr_gn");
    // At P_oGN, beta/P = 2*alpha*P^2, so the GN denominator is 3*alpha*P^2.
    const double x = 3.0 * nli_fraction(p, params.alpha_nl_per_mw2) + params.gawbs_loss;
    return 1.0 / (static_cast<double>(params.n_spans) * x);
}

double gdf_stationarity_residual(double p_mw, const DerivedParams& params) {
    const double ase_term = params.beta_mw * total_droop(p_mw, params).chi;
    return (ase_term - 2.0 * params.alpha_nl_per_mw2 * p_mw * p_mw * p_mw) / ase_term;
}

namespace detail {

double optimal_power_gdf_bisect(const DerivedParams& params) {
    const double p_gn = optimal_power_gn(params);
    const auto h = [&](double p) {
        return params.beta_mw * total_droop(p, params).chi -
               2.0 * params.alpha_nl_per_mw2 * p * p * p;
    };
    double lo = 0.5 * p_gn;
    double hi = p_gn;
    const double h_lo = h(lo);
    const double h_hi = h(hi);
    if (!(h_lo > 0.0) || !(h_hi <= 0.0)) {
        throw NumericalError("GDF optimum not bracketed in [P_oGN/2, P_oGN]", p_gn,
                             gdf_stationarity_residual(p_gn, params));
    }
    if (h_hi == 0.0) {
        return hi;
    }
    for (int i = 0; i < 200 && (hi - lo) > 1e-15 * hi; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double h_mid = h(mid);
        if (h_mid > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double optimal_power_gdf_fixed_point(const DerivedParams& params, int max_iterations) {
    const double p_gn = optimal_power_gn(params);
    double p = p_gn;
    for (int i = 0; i < max_iterations; ++i) {
        const double next = p_gn * std::cbrt(total_droop(p, params).chi);
        if (std::abs(next - p) <= kFixedPointTol * next) {
            return next;
        }
        p = next;
    }
    throw NumericalError("GDF optimum fixed point did not converge", p,
                         gdf_stationarity_residual(p, params));
}

}  // namespace detail

double optimal_power_gdf(const DerivedParams& params) {
    try {
        return detail::optimal_power_gdf_fixed_point(params, kFixedPointCap);
    } catch (const NumericalError&) {
        return detail::optimal_power_gdf_bisect(params);
    }
}

double spectral_efficiency(double snr) {
    if (std::isnan(snr) || snr < 0.0) {
        throw DomainError("spectral_efficiency: SNR must be >= 0");
    }
    return 2.0 * std::log2(1.0 + snr);
}

double se_gap_approx(double snr_ogn) {
    if (!(snr_ogn > 0.0)) {
        throw DomainError("se_gap_approx: SNR must be > 0");
    }
    // s / (1 + 2s + 2s^2) rewritten to stay finite as s -> inf
    return (2.0 / std::numbers::ln2) / (1.0 / snr_ogn + 2.0 + 2.0 * snr_ogn);
}

Asymptotes asymptotes(double p_mw, const DerivedParams& params) {
    require_power(p_mw, "asymptotes");
    require_spans(params.n_spans, "asymptotes");
    const double n = static_cast<double>(params.n_spans);
    const double ase_ratio = params.beta_mw / p_mw;
    const double nli = nli_fraction(p_mw, params.alpha_nl_per_mw2);
    if (nli >= 1.0) {
        throw DroopDomainError(p_mw, nli);
    }

    Asymptotes a;
    a.gn_linear = ase_ratio > 0.0 ? 1.0 / (n * ase_ratio) : kInf;
    a.gn_nonlinear = nli > 0.0 ? 1.0 / (n * nli) : kInf;
    a.gdf_linear = inverse_of_expm1(n * std::log1p(ase_ratio));
    a.gdf_nonlinear = inverse_of_expm1(n * (0.0 - std::log1p(-nli)));
    return a;
}

SnrReport snr_report(double p_mw, const DerivedParams& params) {
    SnrReport r;
    r.power_mw = p_mw;
    r.snr_gdf = snr_gdf(p_mw, params);
    r.snr_gn = snr_gn(p_mw, params);
    r.snr_gdf_ub = snr_gdf_upper_bound(r.snr_gn, params.n_spans);
    r.gap_db_exact = std::isinf(r.snr_gn) && std::isinf(r.snr_gdf)
                         ? 0.0
                         : linear_to_db(r.snr_gn) - linear_to_db(r.snr_gdf);
    r.gap_db_approx = gap_db_approx(r.snr_gn, params.n_spans);
    r.snr1a = params.beta_mw > 0.0 ? p_mw / params.beta_mw : kInf;
    const double nli = nli_fraction(p_mw, params.alpha_nl_per_mw2);
    r.snr1n = nli > 0.0 ? 1.0 / nli : kInf;
    return r;
}

}  // namespace droop
