#pragma once

#include <vector>

namespace cliffqc {

/// One-dimensional polynomial-times-gaussian factor
///   f(y) = P(y - c) exp(-q (y - c)^2),
/// the free-axis counterpart of the periodic trig-poly factor. Closed under
/// products, derivatives, and integration against the Laplace kernel
/// exp(-t^2 (y1 - y2)^2), which is all the integral engines need.
class GaussPoly {
 public:
  GaussPoly() = default;
  GaussPoly(double exponent, double center, std::vector<double> coef)
      : q_(exponent), c_(center), coef_(std::move(coef)) {}

  /// (y - center)^power * exp(-alpha (y - center)^2)
  static GaussPoly primitive(double alpha, double center, int power);

  double exponent() const { return q_; }
  double center() const { return c_; }
  int degree() const { return static_cast<int>(coef_.size()) - 1; }
  const std::vector<double>& coefficients() const { return coef_; }

  double evaluate(double y) const;

  /// Pointwise product; the gaussian-product damping exp(-q1 q2 dc^2 / q)
  /// is folded into the polynomial coefficients.
  GaussPoly product(const GaussPoly& other) const;

  /// d/dy.
  GaussPoly derivative() const;

  /// Integral over the whole axis.
  double integrate() const;

  /// g(y2) = int dy1 f(y1) exp(-t2 (y1 - y2)^2), again of poly-gaussian form.
  GaussPoly kernel_integrate(double t2) const;

  GaussPoly scaled(double factor) const;

 private:
  double q_ = 1.0;
  double c_ = 0.0;
  std::vector<double> coef_{1.0};
};

}  // namespace cliffqc
