#ifndef PLSEC_MONTECARLO_HPP
#define PLSEC_MONTECARLO_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "plsec/channel.hpp"

namespace plsec {

/// Sample-mean estimate with its standard error. Reproducible from
/// (seed, n_samples) under the fixed block layout, whatever the thread count.
struct McEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    long n_samples = 0;
    std::uint64_t seed = 0;
};

/// Which SNR estimate the rate selection uses: the base station's view
/// (attacked gamma_e_hat, giving the compromised rate) or the true
/// eavesdropper SNR (giving the secrecy capacity).
enum class DesignView { bs_view, true_view };

/// Samples per RNG substream; block b of an estimate always draws from
/// stream_id b, so serial and parallel runs produce identical results.
inline constexpr long kMcBlockSize = 1 << 16;

/// Positive part of log2(1+snr_b) - log2(1+snr_e_design), in bps/Hz.
double instantaneous_rate(double snr_b, double snr_e_design);

/// Average selected rate over n fading realizations (n >= 10^4).
McEstimate estimate_avg_rate(const ScenarioParams& params, AttackKind kind,
                             DesignView view, long n, std::uint64_t seed,
                             int threads = 1);

struct RatePair {
    McEstimate true_view;  // secrecy-capacity estimate
    McEstimate bs_view;    // compromised-rate estimate
};

/// Both views from one set of realizations; each component equals the
/// corresponding estimate_avg_rate result for the same (n, seed).
RatePair estimate_avg_rate_both(const ScenarioParams& params, AttackKind kind,
                                long n, std::uint64_t seed, int threads = 1);

/// Fraction of realizations where the rate selected from the attacked view
/// strictly exceeds the instantaneous secrecy capacity. Attacked kinds only.
McEstimate leakage_fraction(const ScenarioParams& params, AttackKind kind,
                            long n, std::uint64_t seed, int threads = 1);

/// For each grid point x, the fraction of samples strictly greater than x.
std::vector<double> empirical_ccdf(std::span<const double> samples,
                                   std::span<const double> x_grid);

}  // namespace plsec

#endif
