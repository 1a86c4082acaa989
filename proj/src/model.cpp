#include "zicount/model.hpp"

#include <algorithm>
#include <set>

#include "zicount/errors.hpp"

namespace zicount {

bool family_has_dispersion(Family f) {
  return f == Family::nb || f == Family::zinb;
}

bool family_zero_inflated(Family f) {
  return f == Family::zip || f == Family::zinb;
}

std::string family_name(Family f) {
  switch (f) {
    case Family::poisson: return "poisson";
    case Family::nb: return "nb";
    case Family::zip: return "zip";
    case Family::zinb: return "zinb";
  }
  return "?";
}

Family parse_family(const std::string& name) {
  if (name == "poisson") return Family::poisson;
  if (name == "nb") return Family::nb;
  if (name == "zip") return Family::zip;
  if (name == "zinb") return Family::zinb;
  throw config_error("unknown family: " + name +
                     " (expected poisson, nb, zip, or zinb)");
}

namespace {

void check_no_duplicates(const std::vector<std::string>& names,
                         const std::string& what) {
  std::set<std::string> seen;
  for (const auto& n : names)
    if (!seen.insert(n).second)
      throw config_error("duplicate " + what + ": " + n);
}

}  // namespace

void ModelSpec::validate(const Dataset& data) const {
  check_no_duplicates(cond_covariates, "conditional covariate");
  check_no_duplicates(zi_covariates, "zero-inflation covariate");
  check_no_duplicates(cond_factors, "conditional factor");
  check_no_duplicates(zi_factors, "zero-inflation factor");

  if (!family_zero_inflated(family)) {
    if (!zi_covariates.empty() || !zi_factors.empty())
      throw config_error("family " + family_name(family) +
                         " has no zero-inflation part; zi covariates/factors "
                         "must be empty");
  }
  for (const auto& c : cond_covariates)
    if (!data.has_covariate(c)) throw config_error("unknown covariate column: " + c);
  for (const auto& c : zi_covariates)
    if (!data.has_covariate(c)) throw config_error("unknown covariate column: " + c);
  for (const auto& f : cond_factors)
    if (!data.has_factor(f)) throw config_error("unknown factor column: " + f);
  for (const auto& f : zi_factors)
    if (!data.has_factor(f)) throw config_error("unknown factor column: " + f);
}

namespace {

bool subset(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  for (const auto& x : a)
    if (std::find(b.begin(), b.end(), x) == b.end()) return false;
  return true;
}

bool family_nests(Family reduced, Family full) {
  if (reduced == full) return true;
  switch (reduced) {
    case Family::poisson: return true;  // alpha = 0 and/or phi = 0
    case Family::nb: return full == Family::zinb;
    case Family::zip: return full == Family::zinb;
    case Family::zinb: return false;
  }
  return false;
}

}  // namespace

bool ModelSpec::nested_in(const ModelSpec& full) const {
  if (!family_nests(family, full.family)) return false;
  if (cond_obs_intercept && !full.cond_obs_intercept) return false;
  return subset(cond_covariates, full.cond_covariates) &&
         subset(zi_covariates, full.zi_covariates) &&
         subset(cond_factors, full.cond_factors) &&
         subset(zi_factors, full.zi_factors);
}

namespace {

Eigen::MatrixXd design_matrix(const Dataset& data,
                              const std::vector<std::string>& covariates) {
  const auto n = static_cast<Eigen::Index>(data.n());
  Eigen::MatrixXd x(n, 1 + covariates.size());
  x.col(0).setOnes();
  for (std::size_t j = 0; j < covariates.size(); ++j)
    x.col(static_cast<Eigen::Index>(j + 1)) = data.covariate(covariates[j]);
  return x;
}

REBlock make_block(const Dataset& data, const std::string& factor, Part part) {
  const FactorColumn& f = data.factor(factor);
  if (f.levels.size() < 2)
    throw config_error("factor " + factor +
                       " has a single level; its random intercept is "
                       "unidentifiable");
  REBlock b;
  b.label = factor;
  b.part = part;
  b.n_levels = f.levels.size();
  b.level = f.codes;
  return b;
}

}  // namespace

ModelFrame build_frame(const Dataset& data, const ModelSpec& spec) {
  if (data.n() == 0) throw data_error("empty dataset");
  spec.validate(data);

  ModelFrame frame;
  frame.family = spec.family;
  frame.spec = spec;
  frame.y = data.response;
  frame.data_checksum = data.response_checksum();

  frame.x_cond = design_matrix(data, spec.cond_covariates);
  if (family_zero_inflated(spec.family))
    frame.x_zi = design_matrix(data, spec.zi_covariates);
  else
    frame.x_zi.resize(static_cast<Eigen::Index>(data.n()), 0);

  for (const auto& f : spec.cond_factors)
    frame.blocks.push_back(make_block(data, f, Part::cond));
  if (spec.cond_obs_intercept) {
    if (data.n() < 2)
      throw config_error("observation-level intercept needs at least 2 rows");
    REBlock b;
    b.label = "(obs)";
    b.part = Part::cond;
    b.n_levels = data.n();
    b.level.resize(data.n());
    for (std::size_t i = 0; i < data.n(); ++i)
      b.level[i] = static_cast<std::int32_t>(i);
    frame.blocks.push_back(std::move(b));
  }
  for (const auto& f : spec.zi_factors)
    frame.blocks.push_back(make_block(data, f, Part::zi));

  std::size_t offset = 0;
  for (auto& b : frame.blocks) {
    b.offset = offset;
    offset += b.n_levels;
  }

  ParameterLayout& lay = frame.layout;
  lay.n_cond_fixed = static_cast<std::size_t>(frame.x_cond.cols());
  lay.n_zi_fixed = static_cast<std::size_t>(frame.x_zi.cols());
  lay.has_dispersion = family_has_dispersion(spec.family);
  lay.n_blocks = frame.blocks.size();
  lay.re_dim = offset;

  lay.names.push_back("cond.(Intercept)");
  for (const auto& c : spec.cond_covariates) lay.names.push_back("cond." + c);
  if (family_zero_inflated(spec.family)) {
    lay.names.push_back("zi.(Intercept)");
    for (const auto& c : spec.zi_covariates) lay.names.push_back("zi." + c);
  }
  if (lay.has_dispersion) lay.names.push_back("log_alpha");
  for (const auto& b : frame.blocks)
    lay.names.push_back(std::string("log_sd.") +
                        (b.part == Part::cond ? "cond." : "zi.") + b.label);

  return frame;
}

void linear_predictors_raw(const ModelFrame& frame, const Eigen::VectorXd& theta,
                           const Eigen::VectorXd& u, Eigen::VectorXd* eta_cond,
                           Eigen::VectorXd* eta_zi) {
  const ParameterLayout& lay = frame.layout;
  if (static_cast<std::size_t>(theta.size()) != lay.k())
    throw estimation_error("parameter vector length does not match layout");
  if (static_cast<std::size_t>(u.size()) != lay.re_dim)
    throw estimation_error("random-effect vector length does not match layout");

  const auto nc = static_cast<Eigen::Index>(lay.n_cond_fixed);
  const auto nz = static_cast<Eigen::Index>(lay.n_zi_fixed);
  *eta_cond = frame.x_cond * theta.head(nc);
  if (nz > 0)
    *eta_zi = frame.x_zi * theta.segment(nc, nz);
  else
    eta_zi->setZero(eta_cond->size());

  for (const auto& b : frame.blocks) {
    Eigen::VectorXd& eta = b.part == Part::cond ? *eta_cond : *eta_zi;
    for (std::size_t i = 0; i < frame.n(); ++i)
      eta[static_cast<Eigen::Index>(i)] +=
          u[static_cast<Eigen::Index>(b.offset + b.level[i])];
  }
}

void linear_predictors(const ModelFrame& frame, const Eigen::VectorXd& theta,
                       const Eigen::VectorXd& u, Eigen::VectorXd* mu,
                       Eigen::VectorXd* phi) {
  Eigen::VectorXd eta_c, eta_z;
  linear_predictors_raw(frame, theta, u, &eta_c, &eta_z);
  *mu = eta_c.array().exp();
  phi->resize(eta_z.size());
  if (family_zero_inflated(frame.family)) {
    for (Eigen::Index i = 0; i < eta_z.size(); ++i)
      (*phi)[i] = 1.0 / (1.0 + std::exp(-eta_z[i]));
  } else {
    phi->setZero();
  }
}

}  // namespace zicount
