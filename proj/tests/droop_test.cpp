#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "droop/droop.hpp"
#include "droop/errors.hpp"
#include "test_support.hpp"

namespace droop {
namespace {

using test::make_params;
using test::reference_params;
using test::rel_err;

constexpr double kRefBeta = 5.7551808324894469e-04;

std::vector<double> log_spaced_powers(double dbm_lo, double dbm_hi, int count) {
    std::vector<double> out;
    for (int i = 0; i < count; ++i) {
        out.push_back(dbm_to_mw(dbm_lo + (dbm_hi - dbm_lo) * i / (count - 1)));
    }
    return out;
}

TEST(ChiAse, Examples) {
    EXPECT_EQ(chi_ase(1.0, 0.0), 1.0);
    EXPECT_EQ(chi_ase(0.3, 0.3), 0.5);
    EXPECT_NEAR(chi_ase(0.889, 5.76e-4), 0.999352, 2e-6);
    EXPECT_LE(rel_err(chi_ase(0.889, kRefBeta), 0.99935304190420055), 1e-15);
}

TEST(ChiAse, RejectsNonPositivePower) {
    EXPECT_THROW(chi_ase(0.0, 1e-3), DomainError);
    EXPECT_THROW(chi_ase(-1.0, 1e-3), DomainError);
    EXPECT_THROW(chi_ase(1.0, -1e-3), DomainError);
}

TEST(ChiRedistribution, Examples) {
    EXPECT_EQ(chi_redistribution(3.0, make_params(1e-3, 0.0, 10)), 1.0);
    EXPECT_NEAR(chi_redistribution(1.0, make_params(1e-3, 4.1e-4, 10)), 0.99959, 1e-15);
    EXPECT_NEAR(chi_redistribution(1.0, make_params(1e-3, 4.1e-4, 10, 0.01)), 0.98959, 1e-15);
}

TEST(ChiRedistribution, OutsideModelValidity) {
    const DerivedParams p = make_params(1e-3, 4.1e-4, 10);
    try {
        chi_redistribution(50.0, p);
        FAIL() << "expected DroopDomainError";
    } catch (const DroopDomainError& e) {
        EXPECT_EQ(e.power_mw(), 50.0);
        EXPECT_NEAR(e.redistributed_fraction(), 1.025, 1e-12);
    }
    // GAWBS alone can push the total over the edge
    EXPECT_THROW(chi_redistribution(1.0, make_params(1e-3, 0.5, 10, 0.5)), DroopDomainError);
}

TEST(TotalDroop, Examples) {
    const DroopFactors clean = total_droop(2.0, make_params(0.0, 0.0, 5));
    EXPECT_EQ(clean.chi_a, 1.0);
    EXPECT_EQ(clean.chi_n, 1.0);
    EXPECT_EQ(clean.chi, 1.0);

    const DroopFactors ref = total_droop(0.889, reference_params());
    EXPECT_EQ(ref.chi, ref.chi_a * ref.chi_n);
    EXPECT_LE(rel_err(ref.chi, 0.99902921992907394), 1e-15);
    EXPECT_NEAR(ref.chi, 0.999028, 2e-6);

    const DroopFactors tiny = total_droop(1e-12, make_params(1e-3, 4.1e-4, 5, 0.02));
    EXPECT_LT(tiny.chi_a, 1e-8);
    EXPECT_NEAR(tiny.chi_n, 0.98, 1e-15);
}

TEST(SnrGdf, SingleSpanAseOnlyIsPowerOverBeta) {
    const DerivedParams p = make_params(2.5e-3, 0.0, 1);
    for (double pw : {1e-3, 0.1, 1.0, 7.0}) {
        EXPECT_EQ(snr_gdf(pw, p), pw / 2.5e-3);
    }
}

TEST(SnrGdf, ReferenceLink) {
    const DerivedParams p = reference_params();
    // mpmath evaluation of 1/(chi^-228 - 1)
    EXPECT_LE(rel_err(snr_gdf(0.889, p), 4.0342253443897757), 1e-12);
    EXPECT_NEAR(linear_to_db(snr_gdf(0.889, p)), 6.06, 0.005);
}

TEST(SnrGdf, NoiseFreeChainIsInfinite) {
    EXPECT_TRUE(std::isinf(snr_gdf(1.0, make_params(0.0, 0.0, 10))));
}

TEST(SnrGdf, PropagatesDroopDomainError) {
    EXPECT_THROW(snr_gdf(50.0, reference_params()), DroopDomainError);
}

TEST(SnrGdf, AgreesWithDirectArithmeticAtOneSpan) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> log_beta(-5.0, -2.0), log_alpha(-5.0, -3.0), dbm(-20.0, 10.0);
    for (int i = 0; i < 2000; ++i) {
        const DerivedParams p = make_params(std::pow(10.0, log_beta(rng)), std::pow(10.0, log_alpha(rng)), 1);
        const double pw = dbm_to_mw(dbm(rng));
        const double chi_n = 1.0 - p.alpha_nl_per_mw2 * pw * pw;
        // chi^-1 - 1 = (1 + beta/P)/chi_n - 1 = (beta/P + alpha P^2) / chi_n
        const double direct = chi_n / (p.beta_mw / pw + p.alpha_nl_per_mw2 * pw * pw);
        EXPECT_LE(rel_err(snr_gdf(pw, p), direct), 1e-14) << "P=" << pw;
    }
}

TEST(SnrGdf, FirstOrderAgreementWithGnForTinyDroop) {
    // N (1 - chi) < 1e-8
    for (double alpha : {1e-12, 1e-13}) {
        for (std::int64_t n : {1, 10, 1000}) {
            const DerivedParams p = make_params(0.0, alpha, n);
            const double one_minus_chi = alpha;
            ASSERT_LT(static_cast<double>(n) * one_minus_chi, 1e-8);
            EXPECT_LT(rel_err(snr_gdf(1.0, p), snr_gn(1.0, p)), 1e-6);
        }
    }
}

TEST(SnrGdf, ExpM1PathNearUnitDroop) {
    // chi = 1 - 1e-10 with N = 100
    const DerivedParams p = make_params(0.0, 1e-10, 100);
    EXPECT_LE(rel_err(snr_gdf(1.0, p), 1.0 / (100 * 1e-10)), 1e-6);
    // mpmath: 1/expm1(-100 ln(1 - 1e-10))
    EXPECT_LE(rel_err(snr_gdf(1.0, p), 99999999.495000001), 1e-9);
}

TEST(SnrGn, Examples) {
    const DerivedParams ase_only = make_params(3e-4, 0.0, 40);
    EXPECT_LE(rel_err(snr_gn(0.5, ase_only), 0.5 / (40 * 3e-4)), 1e-15);
    EXPECT_EQ(snr_gn(0.2, make_params(0.2, 0.0, 1)), 1.0);
    EXPECT_LE(rel_err(snr_gn(0.889, reference_params()), 4.5150570227421202), 1e-13);
    EXPECT_THROW(snr_gn(0.0, ase_only), DomainError);
}

TEST(SnrGn, GawbsEntersAdditively) {
    const DerivedParams p = make_params(1e-3, 2e-4, 50, 3e-3);
    const double pw = 1.3;
    EXPECT_LE(rel_err(snr_gn(pw, p), 1.0 / (50 * (1e-3 / pw + 2e-4 * pw * pw + 3e-3))), 1e-15);
}

TEST(UpperBound, Examples) {
    EXPECT_EQ(snr_gdf_upper_bound(4.51, 1), 4.51);
    EXPECT_LE(rel_err(snr_gdf_upper_bound(4.51, 228), 4.0616780815919004), 1e-15);
    EXPECT_NEAR(snr_gdf_upper_bound(1e12, 228) / 1e12, 1.0, 1e-12);
    EXPECT_THROW(snr_gdf_upper_bound(0.0, 10), DomainError);
}

TEST(GapApprox, Examples) {
    EXPECT_EQ(gap_db_approx(4.51, 1), 0.0);
    EXPECT_LE(rel_err(gap_db_approx(4.51, 228), 0.47936771789803441), 1e-14);
    EXPECT_NEAR(gap_db_approx(1.0, std::int64_t{1} << 53), 2.1714724095162591, 1e-14);
}

TEST(OptimalPowerGn, Examples) {
    EXPECT_NEAR(optimal_power_gn(make_params(8.2e-4, 4.1e-4, 1)), 1.0, 1e-15);
    const DerivedParams ref = reference_params();
    const double p = optimal_power_gn(ref);
    EXPECT_LE(rel_err(p, 0.88868607238152609), 1e-14);
    EXPECT_NEAR(mw_to_dbm(p), -0.51, 0.01);
    // ASE is twice the NLI at the optimum
    EXPECT_LE(rel_err(ref.beta_mw / p, 2 * ref.alpha_nl_per_mw2 * p * p), 1e-12);

    DerivedParams scaled = ref;
    scaled.beta_mw *= 8.0;
    EXPECT_LE(rel_err(optimal_power_gn(scaled), 2.0 * p), 1e-15);
}

TEST(OptimalPowerGn, LinearFiberHasNoOptimum) {
    EXPECT_THROW(optimal_power_gn(make_params(1e-3, 0.0, 10)), NoOptimumError);
    EXPECT_THROW(max_snr_gn(make_params(1e-3, 0.0, 10)), NoOptimumError);
    EXPECT_THROW(optimal_power_gdf(make_params(1e-3, 0.0, 10)), NoOptimumError);
}

TEST(OptimalPowerGn, IsStationaryPoint) {
    const DerivedParams ref = reference_params();
    const double p = optimal_power_gn(ref);
    const double h = 1e-6;
    const double deriv = (snr_gn(p * (1 + h), ref) - snr_gn(p * (1 - h), ref)) / (2 * h * p);
    EXPECT_LE(std::abs(deriv * p / snr_gn(p, ref)), 1e-6);
}

TEST(MaxSnrGn, Examples) {
    const DerivedParams ref = reference_params();
    EXPECT_LE(rel_err(max_snr_gn(ref), 4.5150575860207704), 1e-14);
    EXPECT_LE(rel_err(max_snr_gn(ref), snr_gn(optimal_power_gn(ref), ref)), 1e-12);

    // alpha P_oGN^2 = 1/3 with N = 1: beta = 2 alpha P^3 with P = 1, alpha = 1/3
    EXPECT_NEAR(max_snr_gn(make_params(2.0 / 3.0, 1.0 / 3.0, 1)), 1.0, 1e-15);

    DerivedParams doubled = ref;
    doubled.n_spans *= 2;
    EXPECT_LE(rel_err(max_snr_gn(doubled), 0.5 * max_snr_gn(ref)), 1e-15);
}

TEST(MaxSnrGn, IncludesGawbsTerm) {
    const DerivedParams p = make_params(1e-3, 2e-4, 30, 1e-3);
    EXPECT_LE(rel_err(max_snr_gn(p), snr_gn(optimal_power_gn(p), p)), 1e-12);
}

TEST(OptimalPowerGdf, ReferenceLink) {
    const DerivedParams ref = reference_params();
    const double p_gn = optimal_power_gn(ref);
    const double p_o = optimal_power_gdf(ref);
    // mpmath fixed point
    EXPECT_LE(rel_err(p_o, 0.88839840649697200), 1e-12);
    EXPECT_LE(p_o, p_gn);
    EXPECT_LT((p_gn - p_o) / p_gn, 5e-4);
    EXPECT_LE(std::abs(gdf_stationarity_residual(p_o, ref)), 1e-10);
    EXPECT_LE(rel_err(p_o / p_gn, std::cbrt(total_droop(p_o, ref).chi)), 1e-10);

    const double top = snr_gdf(p_o, ref);
    EXPECT_LE(rel_err(top, 4.0342274054183591), 1e-12);
    EXPECT_LT(snr_gdf(p_o * (1 + 1e-3), ref), top);
    EXPECT_LT(snr_gdf(p_o * (1 - 1e-3), ref), top);
}

TEST(OptimalPowerGdf, SolversAgree) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> log_beta(-5.0, -2.0), log_alpha(-5.0, -3.0), g(0.0, 0.05);
    for (int i = 0; i < 500; ++i) {
        const DerivedParams p =
            make_params(std::pow(10.0, log_beta(rng)), std::pow(10.0, log_alpha(rng)), 100, g(rng));
        const double fixed = detail::optimal_power_gdf_fixed_point(p, 100);
        const double bisect = detail::optimal_power_gdf_bisect(p);
        EXPECT_LE(rel_err(fixed, bisect), 1e-12);
        EXPECT_LE(std::abs(gdf_stationarity_residual(fixed, p)), 1e-10);
        EXPECT_LE(fixed, optimal_power_gn(p));
        EXPECT_LE(rel_err(fixed / optimal_power_gn(p), std::cbrt(total_droop(fixed, p).chi)), 1e-10);
    }
}

TEST(OptimalPowerGdf, NonConvergenceReportsLastIterate) {
    const DerivedParams ref = reference_params();
    try {
        detail::optimal_power_gdf_fixed_point(ref, 1);
        FAIL() << "expected NumericalError";
    } catch (const NumericalError& e) {
        EXPECT_GT(e.last_iterate(), 0.0);
        EXPECT_TRUE(std::isfinite(e.residual()));
    }
}

TEST(SpectralEfficiency, Examples) {
    EXPECT_EQ(spectral_efficiency(0.0), 0.0);
    EXPECT_EQ(spectral_efficiency(1.0), 2.0);
    EXPECT_NEAR(spectral_efficiency(4.51), 4.9241046375928658, 1e-14);
    EXPECT_THROW(spectral_efficiency(-0.1), DomainError);
}

TEST(SeGapApprox, Examples) {
    EXPECT_NEAR(se_gap_approx(4.51), 0.25666780937389695, 1e-15);
    EXPECT_LT(se_gap_approx(1e-12), 1e-11);
    EXPECT_LT(se_gap_approx(1e12), 1e-11);
    EXPECT_EQ(se_gap_approx(std::numeric_limits<double>::infinity()), 0.0);
}

TEST(Asymptotes, ReduceToExactModel) {
    const double pw = 0.7;
    const DerivedParams linear = make_params(6e-4, 0.0, 228);
    EXPECT_EQ(snr_gdf(pw, linear), asymptotes(pw, linear).gdf_linear);
    EXPECT_EQ(snr_gn(pw, linear), asymptotes(pw, linear).gn_linear);

    const DerivedParams nonlinear = make_params(0.0, 4.1e-4, 228);
    EXPECT_EQ(snr_gdf(pw, nonlinear), asymptotes(pw, nonlinear).gdf_nonlinear);
    EXPECT_EQ(snr_gn(pw, nonlinear), asymptotes(pw, nonlinear).gn_nonlinear);
}

TEST(Asymptotes, GdfTailIsSteeperAtHighPower) {
    const DerivedParams ref = reference_params();
    for (double dbm = 2.0; dbm <= 16.0; dbm += 0.5) {
        const Asymptotes a = asymptotes(dbm_to_mw(dbm), ref);
        EXPECT_LT(a.gdf_nonlinear, a.gn_nonlinear) << dbm;
    }
    EXPECT_THROW(asymptotes(50.0, ref), DroopDomainError);
}

TEST(Asymptotes, ExactCurvesLieBelowBothAsymptotes) {
    const DerivedParams ref = reference_params();
    for (double pw : log_spaced_powers(-20.0, 10.0, 61)) {
        const Asymptotes a = asymptotes(pw, ref);
        EXPECT_LE(snr_gn(pw, ref), std::min(a.gn_linear, a.gn_nonlinear));
        EXPECT_LE(snr_gdf(pw, ref), std::min(a.gdf_linear, a.gdf_nonlinear));
    }
}

// Ordering snr_gdf <= ub <= gn, checked on the reference link and on
// randomized links without GAWBS.
TEST(Properties, OrderingOnPowerGrids) {
    std::vector<DerivedParams> links = {reference_params()};
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 20; ++i) {
        const auto r = test::random_link(rng);
        links.push_back(derive_params(r.cfg));
    }
    for (const DerivedParams& p : links) {
        int checked = 0;
        for (double pw : log_spaced_powers(-20.0, 10.0, 241)) {
            if (redistributed_fraction(pw, p) >= 1.0) {
                continue;
            }
            const double gdf = snr_gdf(pw, p);
            const double gn = snr_gn(pw, p);
            const double ub = snr_gdf_upper_bound(gn, p.n_spans);
            EXPECT_LE(gdf, ub * (1 + 1e-12)) << "N=" << p.n_spans << " P=" << pw;
            EXPECT_LE(ub, gn);
            EXPECT_LE(gdf, gn * (1 + 1e-12));
            ++checked;
        }
        EXPECT_GE(checked, 200);
    }
}

TEST(Properties, GapShrinksAsGnSnrGrows) {
    const DerivedParams ref = reference_params();
    const double p_gn = optimal_power_gn(ref);
    const std::vector<double> powers = log_spaced_powers(-20.0, 10.0, 601);
    for (std::size_t i = 0; i < powers.size(); ++i) {
        const SnrReport r = snr_report(powers[i], ref);
        EXPECT_GE(r.gap_db_exact, 0.0);
        if (i == 0) {
            continue;
        }
        // same side of the optimum -> one monotone branch
        if ((powers[i - 1] < p_gn) != (powers[i] < p_gn)) {
            continue;
        }
        const SnrReport prev = snr_report(powers[i - 1], ref);
        if (r.snr_gn > prev.snr_gn) {
            EXPECT_LT(r.gap_db_exact, prev.gap_db_exact);
        } else {
            EXPECT_GT(r.gap_db_exact, prev.gap_db_exact);
        }
    }
}

TEST(SnrReport, ReferenceLinkAtOptimum) {
    const DerivedParams ref = reference_params();
    const SnrReport r = snr_report(optimal_power_gn(ref), ref);
    EXPECT_LE(rel_err(r.snr_gdf, 4.0342269340539839), 1e-12);
    EXPECT_LE(rel_err(r.snr_gn, 4.5150575860207704), 1e-13);
    EXPECT_LE(rel_err(r.snr_gdf_ub, 4.0666857410406569), 1e-13);
    EXPECT_NEAR(r.gap_db_exact, 0.48902969195929011, 1e-11);
    EXPECT_NEAR(r.gap_db_approx, 0.47883074944909234, 1e-13);
    EXPECT_LE(rel_err(r.snr1a, r.power_mw / ref.beta_mw), 1e-15);
    EXPECT_LE(rel_err(r.snr1n, 1.0 / (ref.alpha_nl_per_mw2 * r.power_mw * r.power_mw)), 1e-15);
}

}  // namespace
}  // namespace droop
