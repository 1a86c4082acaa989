#pragma once

#include <functional>
#include <string>

#include <Eigen/Core>

namespace zicount {

// Objective callback: returns f(x) and fills *grad (same length as x).
// Returning a non-finite value marks the point as unusable; the line
// search backs off.
using ObjectiveFn =
    std::function<double(const Eigen::VectorXd& x, Eigen::VectorXd* grad)>;

struct BfgsOptions {
  int max_iters = 500;
  // Converged when ||grad||_inf <= grad_tol * max(1, |f|).
  double grad_tol = 1e-5;
  int max_line_search = 50;
  double wolfe_c1 = 1e-4;
  double wolfe_c2 = 0.9;
};

struct BfgsResult {
  Eigen::VectorXd x;
  double f = 0.0;
  Eigen::VectorXd grad;
  double grad_inf_norm = 0.0;
  int iters = 0;
  int n_evals = 0;
  bool converged = false;
  std::string message;
};

// Dense BFGS (inverse-Hessian update) with a strong-Wolfe line search
// using cubic interpolation. Suited to the few dozen structural
// parameters these models carry.
BfgsResult minimize_bfgs(const ObjectiveFn& f, Eigen::VectorXd x0,
                         const BfgsOptions& opts = {});

}  // namespace zicount
