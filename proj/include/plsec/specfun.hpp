#ifndef PLSEC_SPECFUN_HPP
#define PLSEC_SPECFUN_HPP

namespace plsec::specfun {

/// Generalized exponential integral E_n(x) = int_1^inf exp(-x t) t^-n dt.
/// Requires n >= 1 and x > 0; underflows to zero for x beyond ~745.
double exp_integral_en(int n, double x);

/// exp(x) * E_n(x), stable for large x where E_n itself underflows.
double exp_integral_en_scaled(int n, double x);

/// Upper incomplete gamma at negative integer order, Gamma(-n, x).
/// Evaluated through the identity Gamma(-n, x) = x^-n E_{n+1}(x).
double upper_incomplete_gamma_negint(int n, double x);

/// Modified Bessel function of the second kind, order one. x > 0.
double bessel_k1(double x);

/// exp(x) * K_1(x).
double bessel_k1_scaled(double x);

/// Complementary error function (thin wrapper over the C library).
double erfc(double x);

}  // namespace plsec::specfun

#endif
