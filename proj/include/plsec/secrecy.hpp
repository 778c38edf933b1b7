#ifndef PLSEC_SECRECY_HPP
#define PLSEC_SECRECY_HPP

#include "plsec/channel.hpp"
#include "plsec/quadrature.hpp"

namespace plsec {

enum class Method { closed, quadrature };

const char* to_string(Method method);

/// Secrecy figures for one scenario point, all in bps/Hz. `rate` is the true
/// average secrecy capacity when attack == none, otherwise the compromised
/// rate the base station would select. rate = c_bar_b - loss by construction;
/// a negative rate is never floored, only flagged (it can arise solely from
/// numerical error).
struct SecrecyReport {
    double c_bar_b = 0.0;
    double loss = 0.0;
    double rate = 0.0;
    Method method = Method::closed;
    AttackKind attack = AttackKind::none;

    bool rate_negative_anomaly() const { return rate < 0.0; }
};

/// cCDF of the legitimate instantaneous SNR: Erlang with shape m and mean
/// gamma_b_bar, evaluated as exp(-z) * sum_{n<m} z^n/n! with z = m x / gamma_b_bar.
double ccdf_bob(double x, double gamma_b_bar, int m);

/// cCDF of the eavesdropper SNR as estimated by the base station:
/// exponential when unattacked, Bessel-K1 form under a Rayleigh synthetic
/// symbol, erfc form under a uniform one.
double ccdf_eve(double x, double gamma_e_bar, AttackKind kind);

/// Average capacity of the legitimate link (bps/Hz).
double avg_capacity_bob(double gamma_b_bar, int m);

/// Average capacity of the eavesdropper link as seen by the base station.
/// Closed form when unattacked, quadrature of the attacked cCDF otherwise.
double avg_capacity_eve(double gamma_e_bar, AttackKind kind);

/// Average secrecy-capacity loss term: closed form (unattacked only) or
/// quadrature of ccdf_eve * ccdf_bob / (1+x) / ln 2.
double asc_loss(double gamma_b_bar, double gamma_e_bar, int m, AttackKind kind,
                Method method);

/// Average secrecy capacity (attack == none) or average compromised secrecy
/// rate (attacked kinds) for one scenario point.
SecrecyReport secrecy_rate(const ScenarioParams& params, AttackKind kind);

/// Rate margin by which the base station unknowingly exceeds the true
/// secrecy capacity: loss(none) - loss(kind) >= 0. Requires an attacked kind.
double excess_rate(const ScenarioParams& params, AttackKind kind);

/// High-SNR limit of the excess rate; depends only on the eavesdropper's
/// average SNR and the synthetic-symbol distribution.
double excess_rate_asymptote(double gamma_e_bar, AttackKind kind);

}  // namespace plsec

#endif
