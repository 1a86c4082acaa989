#include "zicount/kernel.hpp"

#include <cmath>
#include <limits>

#include "zicount/dist.hpp"

namespace zicount {

namespace {

// log alpha below which the NB pmf switches to its Poisson expansion
// log g = pois + (alpha/2)((y-mu)^2 - y). Keeps lgamma(1/alpha) out of the
// catastrophic range while staying smooth in t across the switch.
const double kLogAlphaSwitch = std::log(kPoissonSwitchAlpha);

constexpr double kInf = std::numeric_limits<double>::infinity();

double stable_expit(double x) {
  if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

// -log g(y) and its c-derivatives for the count component, plus the y=0
// log-mass s = log g(0) needed by the mixture branch.
struct CountPart {
  double neg_logg, d1, d2;  // of -log g at this y
  double s, s1, s2;         // log g(0) and its c-derivatives
  bool overflow = false;
};

CountPart count_part(Family family, long long y, double c, double t) {
  CountPart out;
  const double yd = static_cast<double>(y);
  const bool nb_component = family_has_dispersion(family);
  if (nb_component && t >= kLogAlphaSwitch) {
    const double r = std::exp(-t);
    const double sp = softplus(t + c);
    const double q = stable_expit(t + c);
    double logg = yd * (t + c) - (yd + r) * sp;
    if (y > 0)
      logg += std::lgamma(yd + r) - std::lgamma(yd + 1.0) - std::lgamma(r);
    out.neg_logg = -logg;
    out.d1 = (yd + r) * q - yd;
    out.d2 = (yd + r) * q * (1.0 - q);
    out.s = -r * sp;
    out.s1 = -r * q;
    out.s2 = -r * q * (1.0 - q);
  } else {
    // Poisson, or NB below the dispersion switch.
    const double mu = std::exp(c);
    if (!std::isfinite(mu)) {
      out.overflow = true;
      out.neg_logg = kInf;
      return out;
    }
    double logg = yd * c - mu - std::lgamma(yd + 1.0);
    double d1 = mu - yd;  // of -log g
    double d2 = mu;
    double s = -mu, s1 = -mu, s2 = -mu;
    if (nb_component) {
      const double alpha = std::exp(t);
      logg += 0.5 * alpha * ((yd - mu) * (yd - mu) - yd);
      d1 += alpha * mu * (yd - mu);
      d2 += alpha * mu * (yd - 2.0 * mu);
      s += 0.5 * alpha * mu * mu;
      s1 += alpha * mu * mu;
      s2 += 2.0 * alpha * mu * mu;
    }
    out.neg_logg = -logg;
    out.d1 = d1;
    out.d2 = d2;
    out.s = s;
    out.s1 = s1;
    out.s2 = s2;
  }
  return out;
}

}  // namespace

ObsDerivs2 obs_nll2(Family family, long long y, double c, double z, double t) {
  ObsDerivs2 o{};
  const CountPart g = count_part(family, y, c, t);
  if (g.overflow) {
    o.val = kInf;
    return o;
  }
  if (!family_zero_inflated(family)) {
    o.val = g.neg_logg;
    o.dc = g.d1;
    o.dcc = g.d2;
    return o;
  }
  const double pz = stable_expit(z);
  if (y > 0) {
    o.val = softplus(z) + g.neg_logg;
    o.dc = g.d1;
    o.dcc = g.d2;
    o.dz = pz;
    o.dzz = pz * (1.0 - pz);
    return o;
  }
  // y = 0: -log( phi + (1-phi) g(0) ) = softplus(z) - lse(z, s)
  const double w = stable_expit(z - g.s);  // weight on the structural zero
  o.val = softplus(z) - (g.s + softplus(z - g.s));
  o.dc = -(1.0 - w) * g.s1;
  o.dz = pz - w;
  o.dcc = -(1.0 - w) * (w * g.s1 * g.s1 + g.s2);
  o.dcz = w * (1.0 - w) * g.s1;
  o.dzz = pz * (1.0 - pz) - w * (1.0 - w);
  return o;
}

namespace {

// Jet version of the count component. Variables: c -> 0, z -> 1, t -> 2.
struct CountJet {
  Jet3 logg;   // log g(y)
  Jet3 logg0;  // log g(0)
  bool overflow = false;
};

CountJet count_jet(Family family, long long y, double c, double t) {
  CountJet out;
  const double yd = static_cast<double>(y);
  const Jet3 cj = Jet3::variable(c, 0);
  const Jet3 tj = Jet3::variable(t, 2);
  const bool nb_component = family_has_dispersion(family);
  if (nb_component && t >= kLogAlphaSwitch) {
    const Jet3 r = exp_jet(-tj);
    const Jet3 sp = softplus_jet(tj + cj);
    out.logg0 = -(r * sp);
    if (y > 0) {
      Jet3 logg = cj * yd + tj * yd - (r + yd) * sp;
      logg += lgamma_jet(r + yd) - lgamma_jet(r);
      logg += Jet3::constant(-std::lgamma(yd + 1.0));
      out.logg = logg;
    } else {
      out.logg = out.logg0;
    }
  } else {
    const double mu0 = std::exp(c);
    if (!std::isfinite(mu0)) {
      out.overflow = true;
      return out;
    }
    const Jet3 mu = exp_jet(cj);
    Jet3 pois = cj * yd - mu + Jet3::constant(-std::lgamma(yd + 1.0));
    if (nb_component) {
      const Jet3 alpha = exp_jet(tj);
      const Jet3 dev = mu - yd;  // mu - y
      pois += alpha * (dev * dev - Jet3::constant(yd)) * 0.5;
      out.logg0 = -mu + alpha * (mu * mu) * 0.5;
    } else {
      out.logg0 = -mu;
    }
    out.logg = y > 0 ? pois : out.logg0;
  }
  return out;
}

}  // namespace

Jet3 obs_nll_jet(Family family, long long y, double c, double z, double t) {
  const CountJet g = count_jet(family, y, c, t);
  if (g.overflow) return Jet3::constant(kInf);
  if (!family_zero_inflated(family)) return -g.logg;
  const Jet3 zj = Jet3::variable(z, 1);
  if (y > 0) return softplus_jet(zj) - g.logg;
  return softplus_jet(zj) - log_sum_exp_jet(zj, g.logg0);
}

ObsDerivs3 obs_nll3(Family family, long long y, double c, double z, double t) {
  const Jet3 j = obs_nll_jet(family, y, c, z, t);
  ObsDerivs3 o;
  o.val = j.value();
  o.dc = j.d1(0);
  o.dz = j.d1(1);
  o.dt = j.d1(2);
  o.dcc = j.d2(0, 0);
  o.dcz = j.d2(0, 1);
  o.dzz = j.d2(1, 1);
  o.dct = j.d2(0, 2);
  o.dzt = j.d2(1, 2);
  o.dccc = j.d3(0, 0, 0);
  o.dccz = j.d3(0, 0, 1);
  o.dczz = j.d3(0, 1, 1);
  o.dzzz = j.d3(1, 1, 1);
  o.dcct = j.d3(0, 0, 2);
  o.dczt = j.d3(0, 1, 2);
  o.dzzt = j.d3(1, 1, 2);
  return o;
}

}  // namespace zicount
