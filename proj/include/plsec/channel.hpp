#ifndef PLSEC_CHANNEL_HPP
#define PLSEC_CHANNEL_HPP

#include <complex>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "plsec/rng.hpp"

namespace plsec {

/// Distribution of the synthetic fading coefficient |theta| the eavesdropper
/// multiplies into its uplink symbols. All kinds keep E{|theta|^2} = 1.
enum class AttackKind { none, rayleigh_theta, uniform_theta };

const char* to_string(AttackKind kind);
std::optional<AttackKind> attack_from_string(std::string_view name);

struct LinkBudget {
    double pt_watts;   // transmit power
    double n0_watts;   // noise power
    double r_b_m;      // legitimate-user distance
    double r_e_m;      // eavesdropper distance
    double alpha;      // path-loss exponent
};

/// Link parameters of one scenario point. gamma0 is the per-antenna average
/// SNR of the legitimate link; the array gain makes gammaB = m * gamma0.
/// The eavesdropper's average SNR does not scale with m because the beam is
/// matched to the legitimate channel, not to the eavesdropper's.
struct ScenarioParams {
    int m = 1;
    double gamma0_db = 0.0;
    double gammaE_db = 0.0;

    static ScenarioParams from_link_budget(int m, const LinkBudget& budget);

    double gamma0_lin() const;
    double gammaB_lin() const;  // m * gamma0_lin
    double gammaE_lin() const;
    double gammaB_db() const;   // gamma0_db + 10 log10(m)

    void validate() const;  // throws std::invalid_argument
};

/// One fading realization with its derived gains and instantaneous SNRs.
/// snr_e_hat is the SNR the base station believes the eavesdropper has;
/// it equals theta_pow * snr_e and coincides with snr_e when no attack runs.
struct ChannelRealization {
    std::vector<std::complex<double>> h_b;
    std::vector<std::complex<double>> h_e;
    double g_b = 0.0;        // |h_B^eq|^2 = ||h_b||^2 under matched beamforming
    double g_e = 0.0;        // |h_E^eq|^2
    double theta_pow = 1.0;  // |theta|^2, 1 when kind == none
    double snr_b = 0.0;
    double snr_e = 0.0;
    double snr_e_hat = 0.0;
};

class DegenerateChannelError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// m i.i.d. CN(0,1) entries (unit mean power per entry).
std::vector<std::complex<double>> sample_channel_vector(int m, RngStream& rng);

/// Equivalent power gains under beamforming matched to h_b:
/// g_b = ||h_b||^2, g_e = |h_e^H w|^2 with w = h_b / ||h_b||.
/// Throws DegenerateChannelError when ||h_b|| = 0.
std::pair<double, double> mrt_equivalent_gains(
    std::span<const std::complex<double>> h_b,
    std::span<const std::complex<double>> h_e);

/// Draw |theta|^2 for the given attack kind (always unit mean).
double sample_theta_power(AttackKind kind, RngStream& rng);

/// Full realization: channel vectors, gains, and the SNR triple.
ChannelRealization snr_realization(const ScenarioParams& params,
                                   AttackKind kind, RngStream& rng);

struct SnrDraw {
    double snr_b;
    double snr_e;
    double snr_e_hat;
};

/// Allocation-free sampler for tight Monte-Carlo loops; draws the same
/// sequence as snr_realization for a given stream.
class ChannelSampler {
public:
    ChannelSampler(const ScenarioParams& params, AttackKind kind);
    SnrDraw next(RngStream& rng);

private:
    ScenarioParams params_;
    AttackKind kind_;
    double gamma0_;
    double gammaE_;
    std::vector<std::complex<double>> h_b_;
    std::vector<std::complex<double>> h_e_;
};

}  // namespace plsec

#endif
