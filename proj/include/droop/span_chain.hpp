#pragma once

// Per-span power bookkeeping for a chain of power-mode amplifiers. Each span
// first redistributes power into NLI (scaling every component by chi_n), then
// loses L and regains L^-1 * chi_a at the amplifier, then picks up fresh ASE
// beta * chi_a. The amplifier output always totals the launch power.

#include <cstdint>
#include <vector>

#include "droop/droop.hpp"
#include "droop/units.hpp"

namespace droop {

inline constexpr std::int64_t kMaxChainSpans = 100000;

struct PowerState {
    std::int64_t span_index = 0;
    double p_s_mw = 0.0;  // desired signal
    double p_a_mw = 0.0;  // cumulated ASE
    double p_n_mw = 0.0;  // cumulated NLI, GAWBS-scattered power included

    double total_mw() const { return p_s_mw + p_a_mw + p_n_mw; }
    double noise_mw() const { return p_a_mw + p_n_mw; }
};

/// Propagates one span: redistribution, loss + gain, ASE injection.
PowerState step(const PowerState& state, double p_mw, const DerivedParams& params);

struct ChainResult {
    std::vector<PowerState> trace;  // N + 1 states, trace[0] = (P, 0, 0)
    DroopFactors droop;             // per-span factors (identical for every span)
    double snr = 0.0;               // p_s(N) / (p_a(N) + p_n(N)); +inf if noise-free
};

/// Runs params.n_spans steps from (P, 0, 0). Throws ConfigError if
/// n_spans exceeds kMaxChainSpans.
ChainResult run_chain(double p_mw, const DerivedParams& params);

}  // namespace droop
