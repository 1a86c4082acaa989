#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "zicount/data.hpp"

namespace zicount {

enum class Family { poisson, nb, zip, zinb };

bool family_has_dispersion(Family f);
bool family_zero_inflated(Family f);
std::string family_name(Family f);
Family parse_family(const std::string& name);

enum class Part { cond, zi };

// Which columns enter each part of the model and which factors receive
// random intercepts there. Factors may appear in both parts; the blocks
// are fully crossed, never nested.
struct ModelSpec {
  Family family = Family::nb;
  std::vector<std::string> cond_covariates;
  std::vector<std::string> zi_covariates;
  std::vector<std::string> cond_factors;
  std::vector<std::string> zi_factors;

  // Adds a conditional-part random intercept with one level per
  // observation (a residual term on the log-mean scale). Off by default:
  // NB dispersion already absorbs the overdispersion this would model.
  bool cond_obs_intercept = false;

  void validate(const Dataset& data) const;
  bool nested_in(const ModelSpec& full) const;
};

// One crossed random-intercept block: which part it enters, its level
// count, and each observation's level index.
struct REBlock {
  std::string label;
  Part part;
  std::size_t n_levels;
  std::vector<std::int32_t> level;  // per observation
  std::size_t offset;               // first slot in the stacked RE vector
};

// Deterministic slot layout of the structural parameter vector:
//   [cond fixed | zi fixed | log alpha | log sd per block].
// Random effects live in a separate stacked vector whose block ranges are
// recorded here as well.
struct ParameterLayout {
  std::vector<std::string> names;  // one per structural slot
  std::size_t n_cond_fixed = 0;
  std::size_t n_zi_fixed = 0;
  bool has_dispersion = false;
  std::size_t n_blocks = 0;

  std::size_t zi_begin() const { return n_cond_fixed; }
  std::size_t log_alpha_index() const { return n_cond_fixed + n_zi_fixed; }
  std::size_t log_sd_begin() const {
    return n_cond_fixed + n_zi_fixed + (has_dispersion ? 1 : 0);
  }
  std::size_t k() const { return log_sd_begin() + n_blocks; }

  std::size_t re_dim = 0;  // total random-effect slots across blocks
};

struct ModelFrame {
  Family family = Family::nb;
  std::vector<long long> y;
  Eigen::MatrixXd x_cond;  // n x n_cond_fixed, leading all-ones column
  Eigen::MatrixXd x_zi;    // n x n_zi_fixed (zero columns when no ZI part)
  std::vector<REBlock> blocks;
  ParameterLayout layout;
  ModelSpec spec;
  std::uint64_t data_checksum = 0;

  std::size_t n() const { return y.size(); }
};

ModelFrame build_frame(const Dataset& data, const ModelSpec& spec);

// Natural-scale per-observation (mu, phi) at the given structural
// parameters and stacked random effects. phi is zero for families without
// a zero-inflation part. u may be empty when the frame has no blocks.
void linear_predictors(const ModelFrame& frame, const Eigen::VectorXd& theta,
                       const Eigen::VectorXd& u, Eigen::VectorXd* mu,
                       Eigen::VectorXd* phi);

// Predictor-scale versions (log mu and logit phi).
void linear_predictors_raw(const ModelFrame& frame, const Eigen::VectorXd& theta,
                           const Eigen::VectorXd& u, Eigen::VectorXd* eta_cond,
                           Eigen::VectorXd* eta_zi);

}  // namespace zicount
