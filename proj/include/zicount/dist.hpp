#pragma once

#include <cstdint>

namespace zicount {

// Negative binomial parameterized by mean and dispersion: the variance is
// mu + alpha*mu^2 and alpha = 1/r, where r is the classical size
// parameter. alpha = 0 is the Poisson limit.
struct NbParams {
  double mu;
  double alpha;
};

// Zero-inflated NB: a point mass at zero with probability phi mixed with
// an NB count component.
struct ZinbParams {
  double phi;
  NbParams nb;
};

// Below this dispersion the NB pmf is evaluated as a Poisson: the
// lgamma(1/alpha) differences lose too many digits otherwise.
inline constexpr double kPoissonSwitchAlpha = 1e-8;

// log(1 + exp(x)), safe for any x.
double softplus(double x);

// log(exp(a) + exp(b)), safe for any magnitudes including -inf.
double log_sum_exp(double a, double b);

double logit(double p);   // domain (0,1), throws std::domain_error outside
double expit(double x);   // overflow-safe inverse of logit

double poisson_log_pmf(long long y, double mu);
double nb_log_pmf(long long y, const NbParams& p);
double zinb_log_pmf(long long y, const ZinbParams& p);

}  // namespace zicount
