#include "zicount/dist.hpp"

#include <cmath>
#include <stdexcept>

namespace zicount {

namespace {

void check_nb(const NbParams& p) {
  if (!(p.mu > 0.0) || !std::isfinite(p.mu))
    throw std::domain_error("nb_log_pmf: mu must be positive and finite");
  if (!(p.alpha >= 0.0) || !std::isfinite(p.alpha))
    throw std::domain_error("nb_log_pmf: alpha must be non-negative and finite");
}

void check_y(long long y) {
  if (y < 0) throw std::domain_error("count must be non-negative");
}

}  // namespace

double softplus(double x) {
  if (x > 36.0) return x;
  if (x < -36.0) return std::exp(x);
  return std::log1p(std::exp(x));
}

double log_sum_exp(double a, double b) {
  if (a == -std::numeric_limits<double>::infinity()) return b;
  if (b == -std::numeric_limits<double>::infinity()) return a;
  const double m = a > b ? a : b;
  return m + std::log(std::exp(a - m) + std::exp(b - m));
}

double logit(double p) {
  if (!(p > 0.0) || !(p < 1.0))
    throw std::domain_error("logit: argument must lie strictly in (0,1)");
  return std::log(p) - std::log1p(-p);
}

double expit(double x) {
  if (!std::isfinite(x)) {
    if (std::isnan(x)) throw std::domain_error("expit: NaN argument");
    return x > 0 ? 1.0 : 0.0;
  }
  if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

double poisson_log_pmf(long long y, double mu) {
  check_y(y);
  if (!(mu > 0.0) || !std::isfinite(mu))
    throw std::domain_error("poisson_log_pmf: mu must be positive and finite");
  const double yd = static_cast<double>(y);
  return yd * std::log(mu) - mu - std::lgamma(yd + 1.0);
}

double nb_log_pmf(long long y, const NbParams& p) {
  check_y(y);
  check_nb(p);
  if (p.alpha < kPoissonSwitchAlpha) return poisson_log_pmf(y, p.mu);
  const double yd = static_cast<double>(y);
  const double r = 1.0 / p.alpha;
  const double am = p.alpha * p.mu;
  // lgamma(y+r) - lgamma(y+1) - lgamma(r) + y log(am/(1+am)) - r log(1+am)
  double v = -(yd + r) * std::log1p(am);
  if (y > 0) {
    v += std::lgamma(yd + r) - std::lgamma(yd + 1.0) - std::lgamma(r);
    v += yd * std::log(am);
  }
  return v;
}

double zinb_log_pmf(long long y, const ZinbParams& p) {
  check_y(y);
  check_nb(p.nb);
  if (!(p.phi >= 0.0) || !(p.phi <= 1.0) || !std::isfinite(p.phi))
    throw std::domain_error("zinb_log_pmf: phi must lie in [0,1]");
  const double log_keep = std::log1p(-p.phi);  // log(1-phi), -inf at phi=1
  if (y > 0) return log_keep + nb_log_pmf(y, p.nb);
  // y = 0: log(phi + (1-phi) g(0)) via log-sum-exp so tiny phi never underflows
  const double log_phi =
      p.phi > 0.0 ? std::log(p.phi) : -std::numeric_limits<double>::infinity();
  return log_sum_exp(log_phi, log_keep + nb_log_pmf(0, p.nb));
}

}  // namespace zicount
