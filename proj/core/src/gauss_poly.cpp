#include "cliffqc/gauss_poly.hpp"

#include <cmath>
#include <numbers>

namespace cliffqc {

namespace {

// Binomial re-expansion of P(u + shift) in powers of u.
std::vector<double> shift_poly(const std::vector<double>& coef, double shift) {
  std::vector<double> out(coef.size(), 0.0);
  for (std::size_t n = 0; n < coef.size(); ++n) {
    double binom = 1.0;
    double power = 1.0;
    for (std::size_t j = 0; j <= n; ++j) {
      // coef[n] (u + s)^n contributes coef[n] C(n,j) s^(n-j) u^j
      out[n - j] += coef[n] * binom * power;
      binom *= static_cast<double>(n - j) / (j + 1.0);
      power *= shift;
    }
  }
  return out;
}

}  // namespace

GaussPoly GaussPoly::primitive(double alpha, double center, int power) {
  std::vector<double> coef(power + 1, 0.0);
  coef[power] = 1.0;
  return GaussPoly(alpha, center, std::move(coef));
}

double GaussPoly::evaluate(double y) const {
  const double u = y - c_;
  double poly = 0.0;
  for (int n = degree(); n >= 0; --n) poly = poly * u + coef_[n];
  return poly * std::exp(-q_ * u * u);
}

GaussPoly GaussPoly::product(const GaussPoly& other) const {
  const double p = q_ + other.q_;
  const double pc = (q_ * c_ + other.q_ * other.c_) / p;
  const double dc = c_ - other.c_;
  const double damping = std::exp(-q_ * other.q_ * dc * dc / p);
  const auto a = shift_poly(coef_, pc - c_);
  const auto b = shift_poly(other.coef_, pc - other.c_);
  std::vector<double> prod(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] += a[i] * b[j] * damping;
    }
  }
  return GaussPoly(p, pc, std::move(prod));
}

GaussPoly GaussPoly::derivative() const {
  // d/dy [P e^(-q u^2)] = (P' - 2 q u P) e^(-q u^2)
  std::vector<double> out(coef_.size() + 1, 0.0);
  for (int n = 1; n <= degree(); ++n) out[n - 1] += n * coef_[n];
  for (int n = 0; n <= degree(); ++n) out[n + 1] -= 2.0 * q_ * coef_[n];
  return GaussPoly(q_, c_, std::move(out));
}

double GaussPoly::integrate() const {
  // Even moments: int u^(2k) e^(-q u^2) du = (2k-1)!! / (2q)^k sqrt(pi/q)
  const double base = std::sqrt(std::numbers::pi / q_);
  double acc = 0.0;
  double moment = base;
  for (int n = 0; n <= degree(); n += 2) {
    acc += coef_[n] * moment;
    moment *= (n + 1.0) / (2.0 * q_);
  }
  return acc;
}

GaussPoly GaussPoly::kernel_integrate(double t2) const {
  // f(y1) = P(y1-c) e^(-q (y1-c)^2) against exp(-t2 (y1-y2)^2):
  // gaussian product in y1 leaves exp(-lam (y2-c)^2) with
  // lam = q t2/(q+t2); the y1 moments re-expand P around the shifted
  // center c + kappa (y2 - c), kappa = t2/(q+t2).
  const double p = q_ + t2;
  const double kappa = t2 / p;
  const double lam = q_ * t2 / p;
  const double base = std::sqrt(std::numbers::pi / p);
  // moments[j] = int u^j e^(-p u^2) du
  std::vector<double> moments(coef_.size(), 0.0);
  moments[0] = base;
  for (std::size_t j = 2; j < moments.size(); j += 2) {
    moments[j] = moments[j - 2] * (j - 1.0) / (2.0 * p);
  }
  // P((u) + kappa s), s = y2 - c: collect the s-polynomial after the
  // u-integral.
  std::vector<double> out(coef_.size(), 0.0);
  for (std::size_t n = 0; n < coef_.size(); ++n) {
    double binom = 1.0;
    double kpow = 1.0;  // kappa^j tracks the s-power j
    for (std::size_t j = 0; j <= n; ++j) {
      out[j] += coef_[n] * binom * kpow * moments[n - j];
      binom *= static_cast<double>(n - j) / (j + 1.0);
      kpow *= kappa;
    }
  }
  return GaussPoly(lam, c_, std::move(out));
}

GaussPoly GaussPoly::scaled(double factor) const {
  GaussPoly out = *this;
  for (double& v : out.coef_) v *= factor;
  return out;
}

}  // namespace cliffqc
