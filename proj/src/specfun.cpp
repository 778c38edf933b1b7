#include "plsec/specfun.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

// E_n follows the classic netlib expn scheme: a power series for x <= 1 and
// a continued fraction for x > 1 (the fraction naturally yields the scaled
// value exp(x)*E_n(x), which is what the capacity formulas need at low SNR).
// K_1 is the SLATEC FNLIB Chebyshev evaluation (DBESK1/DBSK1E/DBESI1),
// truncated to double precision.

namespace plsec::specfun {

namespace {

constexpr double kEulerGamma = 0.57721566490153286061;
constexpr double kMachEps = 1.1e-16;

void check_en_domain(int n, double x) {
    if (n < 1)
        throw std::domain_error("exp_integral_en: order must be >= 1, got " +
                                std::to_string(n));
    if (!(x > 0.0))
        throw std::domain_error("exp_integral_en: argument must be > 0, got " +
                                std::to_string(x));
}

// Power series for E_n(x), 0 < x <= 1 (A&S 5.1.12).
double en_series(int n, double x) {
    double psi = -kEulerGamma - std::log(x);
    for (int i = 1; i < n; ++i) psi += 1.0 / i;

    const double z = -x;
    double xk = 0.0;
    double yk = 1.0;
    double pk = 1.0 - n;
    double sum = (n != 1) ? 1.0 / pk : 0.0;
    double t;
    do {
        xk += 1.0;
        yk *= z / xk;
        pk += 1.0;
        if (pk != 0.0) sum += yk / pk;
        t = (sum != 0.0) ? std::fabs(yk / pk / sum) : 1.0;
    } while (t > kMachEps);

    // leading term (-x)^(n-1) * psi / (n-1)!
    double front = 1.0;
    if (n > 1) {
        front = ((n - 1) % 2 != 0 ? -1.0 : 1.0) *
                std::exp((n - 1) * std::log(x) - std::lgamma(double(n)));
    }
    return front * psi - sum;
}

// Continued fraction for exp(x)*E_n(x), x > 1.
double en_cf_scaled(int n, double x) {
    constexpr double kBig = 1.44115188075855872e17;
    int k = 1;
    double pkm2 = 1.0;
    double qkm2 = x;
    double pkm1 = 1.0;
    double qkm1 = x + n;
    double ans = pkm1 / qkm1;
    double t;
    do {
        ++k;
        double yk, xk;
        if (k & 1) {
            yk = 1.0;
            xk = double(n + (k - 1) / 2);
        } else {
            yk = x;
            xk = double(k / 2);
        }
        const double pk = pkm1 * yk + pkm2 * xk;
        const double qk = qkm1 * yk + qkm2 * xk;
        if (qk != 0.0) {
            const double r = pk / qk;
            t = std::fabs((ans - r) / r);
            ans = r;
        } else {
            t = 1.0;
        }
        pkm2 = pkm1;
        pkm1 = pk;
        qkm2 = qkm1;
        qkm1 = qk;
        if (std::fabs(pk) > kBig) {
            pkm2 /= kBig;
            pkm1 /= kBig;
            qkm2 /= kBig;
            qkm1 /= kBig;
        }
    } while (t > kMachEps && k < 500);
    return ans;
}

// Chebyshev series evaluation (SLATEC DCSEVL).
double csevl(double x, const double* cs, int n) {
    double b0 = 0.0, b1 = 0.0, b2 = 0.0;
    const double twox = 2.0 * x;
    for (int i = n - 1; i >= 0; --i) {
        b2 = b1;
        b1 = b0;
        b0 = twox * b1 - b2 + cs[i];
    }
    return 0.5 * (b0 - b2);
}

// Series for BK1 on (0, 4], double precision truncation of SLATEC FNLIB.
const double kBk1[11] = {
    0.025300227338947770532531120868533,
    -0.35315596077654487566723831691801,
    -0.12261118082265714823479067930042,
    -0.0069757238596398643501812920296083,
    -1.7302889575130520630176507368979e-4,
    -2.4334061415659682349600735030164e-6,
    -2.2133876307347258558315252545126e-8,
    -1.4114883926335277610958330212608e-10,
    -6.6669016941993290060853751264373e-13,
    -2.4274498505193659339263196864853e-15,
    -7.023863479386287597178379712e-18,
};

const double kAk1[18] = {
    0.27443134069738829695257666227266,
    0.07571989953199367817089237814929,
    -0.0014410515564754061229853116175625,
    6.6501169551257479394251385477036e-5,
    -4.3699847095201407660580845089167e-6,
    3.5402774997630526799417139008534e-7,
    -3.3111637792932920208982688245704e-8,
    3.4459775819010534532311499770992e-9,
    -3.8989323474754271048981937492758e-10,
    4.7208197504658356400947449339005e-11,
    -6.047835662875356234537359156289e-12,
    8.1284948748658747888193837985663e-13,
    -1.1386945747147891428923915951042e-13,
    1.654035840846228232597294820509e-14,
    -2.4809025677068848221516010440533e-15,
    3.8292378907024096948429227299157e-16,
    -6.0647341040012418187768210377386e-17,
    9.8324256232648616038194004650666e-18,
};

const double kAk12[14] = {
    0.06379308343739001036600488534102,
    0.02832887813049720935835030284708,
    -2.475370673905250345414545566732e-4,
    5.771972451607248820470976625763e-6,
    -2.068939219536548302745533196552e-7,
    9.739983441381804180309213097887e-9,
    -5.585336140380624984688895511129e-10,
    3.732996634046185240221212854731e-11,
    -2.825051961023225445135065754928e-12,
    2.372019002484144173643496955486e-13,
    -2.176677387991753979268301667938e-14,
    2.157914161616032453939562689706e-15,
    -2.290196930718269275991551338154e-16,
    2.582885729823274961919939565226e-17,
};

// Series for BI1 on [0, 9], used by the small-argument K1 branch.
const double kBi1[11] = {
    -0.0019717132610998597316138503218149,
    0.40734887667546480608155393652014,
    0.034838994299959455866245037783787,
    0.0015453945563001236038598401058489,
    4.188852109837778412945883200412e-5,
    7.6490267648362114741959703966069e-7,
    1.0042493924741178689179808037238e-8,
    9.9322077919238106481371298054863e-11,
    7.6638017918447637275200171681349e-13,
    4.741418923816739498038809194816e-15,
    2.4041144040745181799863172032e-17,
};

// I_1(x) for 0 < x <= 3 (only range the K1 branches need).
double bessel_i1_small(double x) {
    const double xsml = std::sqrt(std::numeric_limits<double>::epsilon() * 4.5);
    if (x < xsml) return 0.5 * x;
    return x * (csevl(x * x / 4.5 - 1.0, kBi1, 11) + 0.875);
}

void check_k1_domain(double x) {
    if (!(x > 0.0))
        throw std::domain_error("bessel_k1: argument must be > 0, got " +
                                std::to_string(x));
}

}  // namespace

double exp_integral_en(int n, double x) {
    check_en_domain(n, x);
    if (x <= 1.0) return en_series(n, x);
    return std::exp(-x) * en_cf_scaled(n, x);  // underflows to 0 past ~745
}

double exp_integral_en_scaled(int n, double x) {
    check_en_domain(n, x);
    if (x <= 1.0) return std::exp(x) * en_series(n, x);
    return en_cf_scaled(n, x);
}

double upper_incomplete_gamma_negint(int n, double x) {
    if (n < 0)
        throw std::domain_error(
            "upper_incomplete_gamma_negint: order must be >= 0");
    if (!(x > 0.0))
        throw std::domain_error(
            "upper_incomplete_gamma_negint: argument must be > 0, got " +
            std::to_string(x));
    return std::pow(x, -double(n)) * exp_integral_en(n + 1, x);
}

double bessel_k1(double x) {
    check_k1_domain(x);
    if (x <= 2.0) {
        const double xsml = 2.0 * std::sqrt(std::numeric_limits<double>::epsilon());
        const double y = (x > xsml) ? x * x : 0.0;
        return std::log(0.5 * x) * bessel_i1_small(x) +
               (csevl(0.5 * y - 1.0, kBk1, 11) + 0.75) / x;
    }
    return std::exp(-x) * bessel_k1_scaled(x);  // 0 once exp(-x) underflows
}

double bessel_k1_scaled(double x) {
    check_k1_domain(x);
    if (x <= 2.0) return std::exp(x) * bessel_k1(x);
    if (x <= 8.0) return (csevl((16.0 / x - 5.0) / 3.0, kAk1, 18) + 1.25) / std::sqrt(x);
    return (csevl(16.0 / x - 1.0, kAk12, 14) + 1.25) / std::sqrt(x);
}

double erfc(double x) { return std::erfc(x); }

}  // namespace plsec::specfun
