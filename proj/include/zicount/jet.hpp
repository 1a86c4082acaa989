#pragma once

#include <array>
#include <cstddef>

namespace zicount {

// Truncated Taylor arithmetic in three variables up to total degree 3.
// A Jet3 carries the 20 Taylor coefficients of a function around the
// current point; propagating one through an expression yields every
// partial derivative up to third order in a single pass. The estimator
// uses this for the third-order observation derivatives that enter the
// Laplace-objective gradient.
//
// Coefficient m = (i,j,k) stores d^(i+j+k) f / (dx^i dy^j dz^k) / (i! j! k!).
class Jet3 {
 public:
  static constexpr int kTerms = 20;

  Jet3() { c_.fill(0.0); }

  static Jet3 constant(double v) {
    Jet3 j;
    j.c_[0] = v;
    return j;
  }

  // var = 0, 1, or 2.
  static Jet3 variable(double v, int var) {
    Jet3 j;
    j.c_[0] = v;
    j.c_[1 + var] = 1.0;
    return j;
  }

  double value() const { return c_[0]; }

  // Partial derivatives, with the factorials folded back in.
  double d1(int a) const;
  double d2(int a, int b) const;
  double d3(int a, int b, int c) const;

  Jet3 operator-() const;
  Jet3& operator+=(const Jet3& o);
  Jet3& operator-=(const Jet3& o);
  Jet3& operator*=(double s);

  friend Jet3 operator+(Jet3 a, const Jet3& b) { return a += b; }
  friend Jet3 operator-(Jet3 a, const Jet3& b) { return a -= b; }
  friend Jet3 operator+(Jet3 a, double s) {
    a.c_[0] += s;
    return a;
  }
  friend Jet3 operator+(double s, Jet3 a) {
    a.c_[0] += s;
    return a;
  }
  friend Jet3 operator-(Jet3 a, double s) {
    a.c_[0] -= s;
    return a;
  }
  friend Jet3 operator-(double s, const Jet3& a) { return -a + s; }
  friend Jet3 operator*(Jet3 a, double s) { return a *= s; }
  friend Jet3 operator*(double s, Jet3 a) { return a *= s; }
  friend Jet3 operator*(const Jet3& a, const Jet3& b);

  double raw(int i) const { return c_[i]; }
  double& raw(int i) { return c_[i]; }

 private:
  std::array<double, kTerms> c_;
};

// f(g) for a scalar function with derivatives f0..f3 at g.value().
Jet3 compose(const Jet3& g, double f0, double f1, double f2, double f3);

Jet3 exp_jet(const Jet3& g);
Jet3 log_jet(const Jet3& g);       // g.value() > 0
Jet3 softplus_jet(const Jet3& g);  // log(1 + exp(g)), stable
Jet3 expit_jet(const Jet3& g);
Jet3 lgamma_jet(const Jet3& g);  // g.value() > 0

// log(exp(a) + exp(b)) for jets, evaluated as b + softplus(a - b).
Jet3 log_sum_exp_jet(const Jet3& a, const Jet3& b);

}  // namespace zicount
