#include "zicount/optim.hpp"

#include <cmath>
#include <limits>

namespace zicount {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Eval {
  double f;
  double slope;  // directional derivative along the search direction
};

// Cubic minimizer of a function known at (a, fa, da) and (b, fb, db).
// Falls back to bisection when the interpolation is ill-posed.
double cubic_min(double a, double fa, double da, double b, double fb, double db) {
  const double d1 = da + db - 3.0 * (fa - fb) / (a - b);
  const double disc = d1 * d1 - da * db;
  if (!(disc >= 0.0) || !std::isfinite(disc)) return 0.5 * (a + b);
  const double d2 = std::sqrt(disc) * (b > a ? 1.0 : -1.0);
  const double denom = db - da + 2.0 * d2;
  if (denom == 0.0 || !std::isfinite(denom)) return 0.5 * (a + b);
  double t = b - (b - a) * (db + d2 - d1) / denom;
  const double lo = std::min(a, b), hi = std::max(a, b);
  const double guard = 0.1 * (hi - lo);
  if (!(t > lo + guard) || !(t < hi - guard)) t = 0.5 * (a + b);
  return t;
}

class LineSearch {
 public:
  LineSearch(const ObjectiveFn& f, const Eigen::VectorXd& x0,
             const Eigen::VectorXd& dir, double f0, double slope0,
             const BfgsOptions& opts, int* n_evals)
      : f_(f), x0_(x0), dir_(dir), f0_(f0), slope0_(slope0), opts_(opts),
        n_evals_(n_evals) {
    x_trial_.resizeLike(x0);
    g_trial_.resizeLike(x0);
  }

  // Strong Wolfe search; returns the accepted step (0 on failure) and
  // leaves the accepted point/gradient in x(), grad(), fval().
  double run() {
    double alpha_prev = 0.0, f_prev = f0_, slope_prev = slope0_;
    double alpha = 1.0;
    for (int i = 0; i < opts_.max_line_search; ++i) {
      Eval e = eval(alpha);
      if (!std::isfinite(e.f)) {
        // Stepped past the finite region; treat as an upper bracket and
        // shrink toward the last good point.
        double hi = alpha;
        bool ok = false;
        for (int j = 0; j < opts_.max_line_search; ++j) {
          alpha = 0.5 * (alpha_prev + hi);
          e = eval(alpha);
          if (std::isfinite(e.f)) {
            ok = true;
            break;
          }
          hi = alpha;
        }
        if (!ok) return 0.0;
      }
      if (e.f > f0_ + opts_.wolfe_c1 * alpha * slope0_ || (i > 0 && e.f >= f_prev))
        return zoom(alpha_prev, f_prev, slope_prev, alpha, e.f, e.slope);
      if (std::fabs(e.slope) <= -opts_.wolfe_c2 * slope0_) {
        accept(alpha, e.f);
        return alpha;
      }
      if (e.slope >= 0.0)
        return zoom(alpha, e.f, e.slope, alpha_prev, f_prev, slope_prev);
      alpha_prev = alpha;
      f_prev = e.f;
      slope_prev = e.slope;
      alpha *= 2.0;
    }
    return 0.0;
  }

  const Eigen::VectorXd& x() const { return x_acc_; }
  const Eigen::VectorXd& grad() const { return g_acc_; }
  double fval() const { return f_acc_; }

 private:
  Eval eval(double alpha) {
    x_trial_ = x0_ + alpha * dir_;
    const double fv = f_(x_trial_, &g_trial_);
    ++*n_evals_;
    return {fv, std::isfinite(fv) ? g_trial_.dot(dir_) : kInf};
  }

  void accept(double alpha, double fv) {
    x_acc_ = x0_ + alpha * dir_;
    g_acc_ = g_trial_;
    f_acc_ = fv;
  }

  double zoom(double lo, double flo, double dlo, double hi, double fhi, double dhi) {
    for (int i = 0; i < opts_.max_line_search; ++i) {
      double alpha;
      if (std::isfinite(fhi) && std::isfinite(dhi))
        alpha = cubic_min(lo, flo, dlo, hi, fhi, dhi);
      else
        alpha = 0.5 * (lo + hi);
      Eval e = eval(alpha);
      if (!std::isfinite(e.f) || e.f > f0_ + opts_.wolfe_c1 * alpha * slope0_ ||
          e.f >= flo) {
        hi = alpha;
        fhi = e.f;
        dhi = e.slope;
      } else {
        if (std::fabs(e.slope) <= -opts_.wolfe_c2 * slope0_) {
          accept(alpha, e.f);
          return alpha;
        }
        if (e.slope * (hi - lo) >= 0.0) {
          hi = lo;
          fhi = flo;
          dhi = dlo;
        }
        lo = alpha;
        flo = e.f;
        dlo = e.slope;
      }
      if (std::fabs(hi - lo) < 1e-14 * (1.0 + std::fabs(lo))) break;
    }
    // Accept the lower endpoint if it improves on f0 (weak fallback).
    if (std::isfinite(flo) && flo < f0_ && lo > 0.0) {
      Eval e = eval(lo);
      if (std::isfinite(e.f) && e.f < f0_) {
        accept(lo, e.f);
        return lo;
      }
    }
    return 0.0;
  }

  const ObjectiveFn& f_;
  const Eigen::VectorXd& x0_;
  const Eigen::VectorXd& dir_;
  double f0_, slope0_;
  const BfgsOptions& opts_;
  int* n_evals_;
  Eigen::VectorXd x_trial_, g_trial_;
  Eigen::VectorXd x_acc_, g_acc_;
  double f_acc_ = kInf;
};

}  // namespace

BfgsResult minimize_bfgs(const ObjectiveFn& f, Eigen::VectorXd x0,
                         const BfgsOptions& opts) {
  const Eigen::Index n = x0.size();
  BfgsResult res;
  res.x = std::move(x0);
  res.grad.resize(n);
  res.f = f(res.x, &res.grad);
  res.n_evals = 1;
  if (!std::isfinite(res.f)) {
    res.message = "objective not finite at the starting point";
    return res;
  }

  Eigen::MatrixXd h_inv = Eigen::MatrixXd::Identity(n, n);
  bool h_is_identity = true;
  bool reset_since_progress = false;

  for (int iter = 0; iter < opts.max_iters; ++iter) {
    res.iters = iter;
    res.grad_inf_norm = res.grad.lpNorm<Eigen::Infinity>();
    if (res.grad_inf_norm <= opts.grad_tol * std::max(1.0, std::fabs(res.f))) {
      res.converged = true;
      res.message = "gradient tolerance reached";
      return res;
    }

    Eigen::VectorXd dir = -(h_inv * res.grad);
    double slope = res.grad.dot(dir);
    if (!(slope < 0.0)) {
      h_inv.setIdentity();
      h_is_identity = true;
      dir = -res.grad;
      slope = res.grad.dot(dir);
    }

    LineSearch ls(f, res.x, dir, res.f, slope, opts, &res.n_evals);
    const double step = ls.run();
    if (step == 0.0) {
      if (!h_is_identity && !reset_since_progress) {
        // Retry once along steepest descent before giving up.
        h_inv.setIdentity();
        h_is_identity = true;
        reset_since_progress = true;
        continue;
      }
      res.message = "line search failed";
      return res;
    }
    reset_since_progress = false;

    const Eigen::VectorXd s = ls.x() - res.x;
    const Eigen::VectorXd yv = ls.grad() - res.grad;
    const double sy = s.dot(yv);

    res.x = ls.x();
    res.grad = ls.grad();
    res.f = ls.fval();

    if (sy > 1e-12 * s.norm() * yv.norm()) {
      if (h_is_identity) {
        // Scale the initial inverse Hessian to the problem (Nocedal 6.20).
        h_inv *= sy / yv.squaredNorm();
        h_is_identity = false;
      }
      const double rho = 1.0 / sy;
      const Eigen::VectorXd hy = h_inv * yv;
      // H <- (I - rho s y')H(I - rho y s') + rho s s'
      h_inv.noalias() -= rho * (s * hy.transpose() + hy * s.transpose());
      h_inv.noalias() +=
          (rho * rho * yv.dot(hy) + rho) * (s * s.transpose());
    }
  }
  res.iters = opts.max_iters;
  res.grad_inf_norm = res.grad.lpNorm<Eigen::Infinity>();
  res.converged =
      res.grad_inf_norm <= opts.grad_tol * std::max(1.0, std::fabs(res.f));
  res.message = res.converged ? "gradient tolerance reached"
                              : "iteration limit reached";
  return res;
}

}  // namespace zicount
