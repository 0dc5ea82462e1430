#include "droop/span_chain.hpp"

#include <limits>
#include <string>

#include "droop/errors.hpp"

namespace droop {

namespace {

PowerState advance(const PowerState& in, double p_mw, const DroopFactors& d,
                   const DerivedParams& params) {
    PowerState out;
    out.span_index = in.span_index + 1;

    // Fiber: every component scaled by chi_n, the removed power reappears as NLI.
    const double generated_nli =
        params.alpha_nl_per_mw2 * p_mw * p_mw * p_mw + params.gawbs_loss * p_mw;
    const double s = in.p_s_mw * d.chi_n;
    const double a = in.p_a_mw * d.chi_n;
    const double n = in.p_n_mw * d.chi_n + generated_nli;

    // Span loss L and power-mode gain L^-1 * chi_a, then fresh ASE.
    out.p_s_mw = s * d.chi_a;
    out.p_a_mw = a * d.chi_a + params.beta_mw * d.chi_a;
    out.p_n_mw = n * d.chi_a;
    return out;
}

}  // namespace

PowerState step(const PowerState& state, double p_mw, const DerivedParams& params) {
    return advance(state, p_mw, total_droop(p_mw, params), params);
}

ChainResult run_chain(double p_mw, const DerivedParams& params) {
    if (params.n_spans < 1 || params.n_spans > kMaxChainSpans) {
        throw ConfigError("n_spans", "simulated chains need 1 <= N <= " +
                                         std::to_string(kMaxChainSpans));
    }

    ChainResult result;
    result.droop = total_droop(p_mw, params);
    result.trace.reserve(static_cast<std::size_t>(params.n_spans) + 1);
    result.trace.push_back(PowerState{0, p_mw, 0.0, 0.0});
    for (std::int64_t k = 0; k < params.n_spans; ++k) {
        result.trace.push_back(advance(result.trace.back(), p_mw, result.droop, params));
    }

    const PowerState& last = result.trace.back();
    const double noise = last.noise_mw();
    result.snr = noise > 0.0 ? last.p_s_mw / noise : std::numeric_limits<double>::infinity();
    return result;
}

}  // namespace droop
