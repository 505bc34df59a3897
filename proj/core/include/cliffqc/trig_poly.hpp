#pragma once

#include <complex>
#include <vector>

namespace cliffqc {

/// Real trigonometric polynomial
///   T(phi) = a_0 + sum_{k>=1} a_k cos(k phi) + b_k sin(k phi).
/// Closed under sums, products, argument shifts and d/dphi; the building
/// block for everything the torus integral engine does along a periodic
/// axis.
class TrigPoly {
 public:
  TrigPoly() : cos_(1, 0.0), sin_(1, 0.0) {}

  static TrigPoly constant(double c);
  /// scale * sin(phi + delta)
  static TrigPoly sin_shifted(double delta, double scale);
  /// (scale * sin(phi + delta))^power
  static TrigPoly sin_power(int power, double delta, double scale);

  int degree() const { return static_cast<int>(cos_.size()) - 1; }
  double cos_coef(int k) const;
  double sin_coef(int k) const;
  /// Complex Fourier coefficient c_k with T = sum_k c_k e^(i k phi);
  /// c_{-k} = conj(c_k).
  std::complex<double> fourier(int k) const;

  double evaluate(double phi) const;

  TrigPoly operator+(const TrigPoly& other) const;
  TrigPoly operator*(const TrigPoly& other) const;
  TrigPoly scaled(double factor) const;
  /// S with S(phi) = T(phi + delta).
  TrigPoly shifted(double delta) const;
  /// dT/dphi.
  TrigPoly derivative() const;
  /// Drops trailing harmonics with |a_k|,|b_k| below `eps` * max coefficient.
  void trim(double eps = 0.0);

 private:
  // cos_[0] is the constant term; sin_[0] is unused padding so both arrays
  // index by harmonic.
  std::vector<double> cos_;
  std::vector<double> sin_;
  void resize(int degree);
};

}  // namespace cliffqc
