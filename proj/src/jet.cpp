#include "zicount/jet.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/polygamma.hpp>
#include <boost/math/special_functions/trigamma.hpp>

namespace zicount {

namespace {

// Monomial exponents (i,j,k) for the 20 terms, grouped by total degree.
constexpr int kExp[Jet3::kTerms][3] = {
    {0, 0, 0},                                              // 0
    {1, 0, 0}, {0, 1, 0}, {0, 0, 1},                        // 1..3
    {2, 0, 0}, {1, 1, 0}, {1, 0, 1},                        // 4..6
    {0, 2, 0}, {0, 1, 1}, {0, 0, 2},                        // 7..9
    {3, 0, 0}, {2, 1, 0}, {2, 0, 1}, {1, 2, 0}, {1, 1, 1},  // 10..14
    {1, 0, 2}, {0, 3, 0}, {0, 2, 1}, {0, 1, 2}, {0, 0, 3},  // 15..19
};

int term_index(int i, int j, int k) {
  for (int m = 0; m < Jet3::kTerms; ++m)
    if (kExp[m][0] == i && kExp[m][1] == j && kExp[m][2] == k) return m;
  return -1;
}

struct MulEntry {
  int target, a, b;
};

const std::vector<MulEntry>& mul_table() {
  static const std::vector<MulEntry> table = [] {
    std::vector<MulEntry> t;
    for (int a = 0; a < Jet3::kTerms; ++a)
      for (int b = 0; b < Jet3::kTerms; ++b) {
        const int i = kExp[a][0] + kExp[b][0];
        const int j = kExp[a][1] + kExp[b][1];
        const int k = kExp[a][2] + kExp[b][2];
        if (i + j + k > 3) continue;
        t.push_back({term_index(i, j, k), a, b});
      }
    return t;
  }();
  return table;
}

double factorial(int n) { return n <= 1 ? 1.0 : n * factorial(n - 1); }

}  // namespace

double Jet3::d1(int a) const {
  int e[3] = {0, 0, 0};
  e[a] = 1;
  return c_[term_index(e[0], e[1], e[2])];
}

double Jet3::d2(int a, int b) const {
  int e[3] = {0, 0, 0};
  e[a] += 1;
  e[b] += 1;
  const double f = factorial(e[0]) * factorial(e[1]) * factorial(e[2]);
  return f * c_[term_index(e[0], e[1], e[2])];
}

double Jet3::d3(int a, int b, int c) const {
  int e[3] = {0, 0, 0};
  e[a] += 1;
  e[b] += 1;
  e[c] += 1;
  const double f = factorial(e[0]) * factorial(e[1]) * factorial(e[2]);
  return f * c_[term_index(e[0], e[1], e[2])];
}

Jet3 Jet3::operator-() const {
  Jet3 r;
  for (int i = 0; i < kTerms; ++i) r.c_[i] = -c_[i];
  return r;
}

Jet3& Jet3::operator+=(const Jet3& o) {
  for (int i = 0; i < kTerms; ++i) c_[i] += o.c_[i];
  return *this;
}

Jet3& Jet3::operator-=(const Jet3& o) {
  for (int i = 0; i < kTerms; ++i) c_[i] -= o.c_[i];
  return *this;
}

Jet3& Jet3::operator*=(double s) {
  for (int i = 0; i < kTerms; ++i) c_[i] *= s;
  return *this;
}

Jet3 operator*(const Jet3& a, const Jet3& b) {
  Jet3 r;
  for (const auto& e : mul_table()) r.c_[e.target] += a.c_[e.a] * b.c_[e.b];
  return r;
}

Jet3 compose(const Jet3& g, double f0, double f1, double f2, double f3) {
  Jet3 h = g;
  h.raw(0) = 0.0;  // h = g - g0
  const Jet3 h2 = h * h;
  const Jet3 h3 = h2 * h;
  Jet3 r = h3 * (f3 / 6.0);
  r += h2 * (f2 / 2.0);
  r += h * f1;
  r.raw(0) += f0;
  return r;
}

Jet3 exp_jet(const Jet3& g) {
  const double e = std::exp(g.value());
  return compose(g, e, e, e, e);
}

Jet3 log_jet(const Jet3& g) {
  const double v = g.value();
  if (!(v > 0.0)) throw std::domain_error("log_jet: non-positive value");
  const double iv = 1.0 / v;
  return compose(g, std::log(v), iv, -iv * iv, 2.0 * iv * iv * iv);
}

Jet3 softplus_jet(const Jet3& g) {
  const double x = g.value();
  const double sp = x > 36.0 ? x : (x < -36.0 ? std::exp(x) : std::log1p(std::exp(x)));
  const double s = 1.0 / (1.0 + std::exp(-std::min(std::max(x, -700.0), 700.0)));
  const double s1 = s * (1.0 - s);
  return compose(g, sp, s, s1, s1 * (1.0 - 2.0 * s));
}

Jet3 expit_jet(const Jet3& g) {
  const double x = g.value();
  const double s = 1.0 / (1.0 + std::exp(-std::min(std::max(x, -700.0), 700.0)));
  const double s1 = s * (1.0 - s);
  const double s2 = s1 * (1.0 - 2.0 * s);
  const double s3 = s1 * (1.0 - 6.0 * s + 6.0 * s * s);
  return compose(g, s, s1, s2, s3);
}

Jet3 lgamma_jet(const Jet3& g) {
  const double v = g.value();
  if (!(v > 0.0)) throw std::domain_error("lgamma_jet: non-positive value");
  return compose(g, std::lgamma(v), boost::math::digamma(v),
                 boost::math::trigamma(v), boost::math::polygamma(2, v));
}

Jet3 log_sum_exp_jet(const Jet3& a, const Jet3& b) {
  // Anchor on the larger constant term so the softplus argument is <= 0.
  if (a.value() >= b.value()) return a + softplus_jet(b - a);
  return b + softplus_jet(a - b);
}

}  // namespace zicount
