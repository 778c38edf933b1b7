#include "plsec/secrecy.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "plsec/specfun.hpp"

namespace plsec {

namespace {

constexpr double kInvLn2 = 1.4426950408889634074;  // 1/ln 2
constexpr double kSqrtPi = 1.7724538509055160273;

void check_nonneg(double x, const char* who) {
    if (!(x >= 0.0))
        throw std::domain_error(std::string(who) + ": x must be >= 0, got " +
                                std::to_string(x));
}

void check_positive(double g, const char* who) {
    if (!(g > 0.0))
        throw std::domain_error(std::string(who) +
                                ": average SNR must be > 0, got " +
                                std::to_string(g));
}

double loss_integrand(double x, double gamma_b_bar, double gamma_e_bar, int m,
                      AttackKind kind) {
    const double fe = ccdf_eve(x, gamma_e_bar, kind);
    if (fe == 0.0) return 0.0;
    const double fb = ccdf_bob(x, gamma_b_bar, m);
    if (fb == 0.0) return 0.0;
    return fe * fb / (1.0 + x);
}

}  // namespace

const char* to_string(Method method) {
    return method == Method::closed ? "closed" : "quadrature";
}

double ccdf_bob(double x, double gamma_b_bar, int m) {
    check_nonneg(x, "ccdf_bob");
    check_positive(gamma_b_bar, "ccdf_bob");
    if (m < 1) throw std::domain_error("ccdf_bob: m must be >= 1");
    const double z = m * x / gamma_b_bar;
    if (z == 0.0) return 1.0;
    if (z > 700.0) {
        // exp(-z) underflows; assemble the surviving terms in log space
        double sum = 0.0;
        const double lz = std::log(z);
        for (int n = 0; n < m; ++n) {
            const double lt = -z + n * lz - std::lgamma(double(n) + 1.0);
            if (lt > -745.0) sum += std::exp(lt);
        }
        return sum;
    }
    double term = 1.0;
    double sum = 1.0;
    for (int n = 1; n < m; ++n) {
        term *= z / n;
        sum += term;
    }
    return std::exp(-z) * sum;
}

double ccdf_eve(double x, double gamma_e_bar, AttackKind kind) {
    check_nonneg(x, "ccdf_eve");
    check_positive(gamma_e_bar, "ccdf_eve");
    if (x == 0.0) return 1.0;
    switch (kind) {
        case AttackKind::none:
            return std::exp(-x / gamma_e_bar);
        case AttackKind::rayleigh_theta: {
            const double u = 2.0 * std::sqrt(x / gamma_e_bar);
            if (u > 1400.0) return 0.0;
            return u * std::exp(-u) * specfun::bessel_k1_scaled(u);
        }
        case AttackKind::uniform_theta: {
            const double s = std::sqrt(x / (3.0 * gamma_e_bar));
            const double v = std::exp(-s * s) - kSqrtPi * s * specfun::erfc(s);
            return v > 0.0 ? v : 0.0;  // guard the tail against rounding
        }
    }
    throw std::logic_error("ccdf_eve: bad attack kind");
}

double avg_capacity_bob(double gamma_b_bar, int m) {
    check_positive(gamma_b_bar, "avg_capacity_bob");
    if (m < 1) throw std::domain_error("avg_capacity_bob: m must be >= 1");
    const double z = m / gamma_b_bar;
    double sum = 0.0;
    for (int n = 0; n < m; ++n)
        sum += specfun::exp_integral_en_scaled(n + 1, z);
    return kInvLn2 * sum;
}

double avg_capacity_eve(double gamma_e_bar, AttackKind kind) {
    check_positive(gamma_e_bar, "avg_capacity_eve");
    if (kind == AttackKind::none)
        return kInvLn2 * specfun::exp_integral_en_scaled(1, 1.0 / gamma_e_bar);
    const auto q = integrate_semi_infinite([gamma_e_bar, kind](double x) {
        const double fe = ccdf_eve(x, gamma_e_bar, kind);
        return fe == 0.0 ? 0.0 : fe / (1.0 + x);
    });
    return kInvLn2 * q.value;
}

double asc_loss(double gamma_b_bar, double gamma_e_bar, int m, AttackKind kind,
                Method method) {
    check_positive(gamma_b_bar, "asc_loss");
    check_positive(gamma_e_bar, "asc_loss");
    if (m < 1) throw std::domain_error("asc_loss: m must be >= 1");
    if (method == Method::closed) {
        if (kind != AttackKind::none)
            throw std::invalid_argument(
                "asc_loss: closed form exists only for the unattacked case");
        // exp(s) sum_n rho^n Gamma(-n, s) s^n with s = m/gammaB + 1/gammaE;
        // written via scaled exponential integrals so nothing overflows
        const double zb = m / gamma_b_bar;
        const double s = zb + 1.0 / gamma_e_bar;
        const double rho = zb / s;
        double rho_n = 1.0;
        double sum = 0.0;
        for (int n = 0; n < m; ++n) {
            sum += rho_n * specfun::exp_integral_en_scaled(n + 1, s);
            rho_n *= rho;
        }
        return kInvLn2 * sum;
    }
    const auto q = integrate_semi_infinite([=](double x) {
        return loss_integrand(x, gamma_b_bar, gamma_e_bar, m, kind);
    });
    return kInvLn2 * q.value;
}

SecrecyReport secrecy_rate(const ScenarioParams& params, AttackKind kind) {
    params.validate();
    const double gb = params.gammaB_lin();
    const double ge = params.gammaE_lin();
    SecrecyReport rep;
    rep.attack = kind;
    rep.method = kind == AttackKind::none ? Method::closed : Method::quadrature;
    rep.c_bar_b = avg_capacity_bob(gb, params.m);
    rep.loss = asc_loss(gb, ge, params.m, kind, rep.method);
    rep.rate = rep.c_bar_b - rep.loss;
    return rep;
}

double excess_rate(const ScenarioParams& params, AttackKind kind) {
    if (kind == AttackKind::none)
        throw std::invalid_argument("excess_rate: requires an attacked kind");
    params.validate();
    const double gb = params.gammaB_lin();
    const double ge = params.gammaE_lin();
    const double loss_true = asc_loss(gb, ge, params.m, AttackKind::none, Method::closed);
    const double loss_hat = asc_loss(gb, ge, params.m, kind, Method::quadrature);
    return loss_true - loss_hat;
}

double excess_rate_asymptote(double gamma_e_bar, AttackKind kind) {
    if (kind == AttackKind::none)
        throw std::invalid_argument("excess_rate_asymptote: requires an attacked kind");
    return avg_capacity_eve(gamma_e_bar, AttackKind::none) -
           avg_capacity_eve(gamma_e_bar, kind);
}

}  // namespace plsec
