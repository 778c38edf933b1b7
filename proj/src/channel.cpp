#include "plsec/channel.hpp"

#include <cmath>

namespace plsec {

namespace {

double db_to_lin(double db) { return std::pow(10.0, db / 10.0); }
double lin_to_db(double lin) { return 10.0 * std::log10(lin); }

void fill_cgauss(std::vector<std::complex<double>>& v, int m, RngStream& rng) {
    v.resize(size_t(m));
    for (auto& h : v) h = rng.next_cgauss();
}

std::pair<double, double> gains_impl(std::span<const std::complex<double>> h_b,
                                     std::span<const std::complex<double>> h_e) {
    double g_b = 0.0;
    for (const auto& h : h_b) g_b += std::norm(h);
    if (g_b == 0.0)
        throw DegenerateChannelError(
            "mrt_equivalent_gains: legitimate channel vector is zero");
    // inner product h_e^H (h_b / ||h_b||), made explicit rather than using
    // the distributional shortcut so the beamforming algebra is exercised
    std::complex<double> inner{0.0, 0.0};
    for (size_t i = 0; i < h_b.size(); ++i) inner += std::conj(h_e[i]) * h_b[i];
    const double g_e = std::norm(inner) / g_b;
    return {g_b, g_e};
}

}  // namespace

const char* to_string(AttackKind kind) {
    switch (kind) {
        case AttackKind::none: return "none";
        case AttackKind::rayleigh_theta: return "rayleigh";
        case AttackKind::uniform_theta: return "uniform";
    }
    return "?";
}

std::optional<AttackKind> attack_from_string(std::string_view name) {
    if (name == "none") return AttackKind::none;
    if (name == "rayleigh") return AttackKind::rayleigh_theta;
    if (name == "uniform") return AttackKind::uniform_theta;
    return std::nullopt;
}

ScenarioParams ScenarioParams::from_link_budget(int m, const LinkBudget& b) {
    if (b.pt_watts <= 0 || b.n0_watts <= 0 || b.r_b_m <= 0 || b.r_e_m <= 0)
        throw std::invalid_argument("link budget entries must be positive");
    ScenarioParams p;
    p.m = m;
    p.gamma0_db = lin_to_db(b.pt_watts * std::pow(b.r_b_m, -b.alpha) / b.n0_watts);
    p.gammaE_db = lin_to_db(b.pt_watts * std::pow(b.r_e_m, -b.alpha) / b.n0_watts);
    p.validate();
    return p;
}

double ScenarioParams::gamma0_lin() const { return db_to_lin(gamma0_db); }
double ScenarioParams::gammaB_lin() const { return m * db_to_lin(gamma0_db); }
double ScenarioParams::gammaE_lin() const { return db_to_lin(gammaE_db); }
double ScenarioParams::gammaB_db() const { return gamma0_db + 10.0 * std::log10(double(m)); }

void ScenarioParams::validate() const {
    if (m < 1)
        throw std::invalid_argument("ScenarioParams: m must be >= 1, got " +
                                    std::to_string(m));
    if (!std::isfinite(gamma0_db) || !std::isfinite(gammaE_db))
        throw std::invalid_argument("ScenarioParams: SNRs must be finite");
    if (!(gamma0_lin() > 0.0) || !(gammaE_lin() > 0.0))
        throw std::invalid_argument(
            "ScenarioParams: linear SNRs must be > 0 (dB value out of range)");
}

std::vector<std::complex<double>> sample_channel_vector(int m, RngStream& rng) {
    if (m < 1) throw std::invalid_argument("sample_channel_vector: m must be >= 1");
    std::vector<std::complex<double>> v;
    fill_cgauss(v, m, rng);
    return v;
}

std::pair<double, double> mrt_equivalent_gains(
    std::span<const std::complex<double>> h_b,
    std::span<const std::complex<double>> h_e) {
    if (h_b.size() != h_e.size() || h_b.empty())
        throw std::invalid_argument(
            "mrt_equivalent_gains: vectors must be nonempty and equally sized");
    return gains_impl(h_b, h_e);
}

double sample_theta_power(AttackKind kind, RngStream& rng) {
    switch (kind) {
        case AttackKind::none:
            return 1.0;
        case AttackKind::rayleigh_theta:
            // |theta| Rayleigh with unit mean power -> |theta|^2 ~ Exp(1)
            return -std::log(1.0 - rng.next_double());
        case AttackKind::uniform_theta: {
            // |theta| ~ U[0, sqrt(3)] so that E{|theta|^2} = 1
            const double u = rng.next_double();
            return 3.0 * u * u;
        }
    }
    return 1.0;
}

ChannelRealization snr_realization(const ScenarioParams& params,
                                   AttackKind kind, RngStream& rng) {
    params.validate();
    ChannelRealization r;
    fill_cgauss(r.h_b, params.m, rng);
    fill_cgauss(r.h_e, params.m, rng);
    std::tie(r.g_b, r.g_e) = gains_impl(r.h_b, r.h_e);
    r.theta_pow = sample_theta_power(kind, rng);
    r.snr_b = params.gamma0_lin() * r.g_b;
    r.snr_e = params.gammaE_lin() * r.g_e;
    r.snr_e_hat = r.theta_pow * r.snr_e;
    return r;
}

ChannelSampler::ChannelSampler(const ScenarioParams& params, AttackKind kind)
    : params_(params), kind_(kind) {
    params_.validate();
    gamma0_ = params_.gamma0_lin();
    gammaE_ = params_.gammaE_lin();
    h_b_.reserve(size_t(params_.m));
    h_e_.reserve(size_t(params_.m));
}

SnrDraw ChannelSampler::next(RngStream& rng) {
    fill_cgauss(h_b_, params_.m, rng);
    fill_cgauss(h_e_, params_.m, rng);
    const auto [g_b, g_e] = gains_impl(h_b_, h_e_);
    const double theta_pow = sample_theta_power(kind_, rng);
    const double snr_e = gammaE_ * g_e;
    return {gamma0_ * g_b, snr_e, theta_pow * snr_e};
}

}  // namespace plsec
