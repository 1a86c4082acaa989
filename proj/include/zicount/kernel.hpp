#pragma once

#include "zicount/jet.hpp"
#include "zicount/model.hpp"

namespace zicount {

// Per-observation negative log-likelihood in predictor space:
//   c = log mu (conditional linear predictor)
//   z = logit phi (zero-inflation linear predictor, ignored without ZI)
//   t = log alpha (ignored for Poisson-component families)
// Everything is evaluated through softplus/log-sum-exp so no exp(c) is
// ever formed for the NB families; the kernel stays finite for any c.

// Value and first derivatives only; the cheap path for models without
// random effects, where the marginal likelihood is the joint one.
struct ObsDerivs1 {
  double val;
  double dc, dz, dt;
};

ObsDerivs1 obs_nll1(Family family, long long y, double c, double z, double t);

// Value and first/second derivatives in (c, z); used by the inner Newton
// solver where t is fixed.
struct ObsDerivs2 {
  double val;
  double dc, dz;
  double dcc, dcz, dzz;
};

ObsDerivs2 obs_nll2(Family family, long long y, double c, double z, double t);

// Full trivariate jet of the same function: all partials up to order 3 in
// (c, z, t). Backs the analytic gradient of the Laplace objective.
Jet3 obs_nll_jet(Family family, long long y, double c, double z, double t);

// All partials the gradient assembly consumes, extracted from the jet.
struct ObsDerivs3 {
  double val;
  double dc, dz, dt;
  double dcc, dcz, dzz, dct, dzt;
  double dccc, dccz, dczz, dzzz;
  double dcct, dczt, dzzt;
};

ObsDerivs3 obs_nll3(Family family, long long y, double c, double z, double t);

}  // namespace zicount
