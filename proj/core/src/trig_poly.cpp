#include "cliffqc/trig_poly.hpp"

#include <algorithm>
#include <cmath>

namespace cliffqc {

void TrigPoly::resize(int degree) {
  cos_.resize(degree + 1, 0.0);
  sin_.resize(degree + 1, 0.0);
}

TrigPoly TrigPoly::constant(double c) {
  TrigPoly t;
  t.cos_[0] = c;
  return t;
}

TrigPoly TrigPoly::sin_shifted(double delta, double scale) {
  // scale*sin(phi+delta) = scale*cos(delta) sin(phi) + scale*sin(delta) cos(phi)
  TrigPoly t;
  t.resize(1);
  t.cos_[1] = scale * std::sin(delta);
  t.sin_[1] = scale * std::cos(delta);
  return t;
}

TrigPoly TrigPoly::sin_power(int power, double delta, double scale) {
  TrigPoly result = constant(1.0);
  const TrigPoly base = sin_shifted(delta, scale);
  for (int i = 0; i < power; ++i) result = result * base;
  return result;
}

double TrigPoly::cos_coef(int k) const {
  return k <= degree() && k >= 0 ? cos_[k] : 0.0;
}

double TrigPoly::sin_coef(int k) const {
  return k <= degree() && k >= 1 ? sin_[k] : 0.0;
}

std::complex<double> TrigPoly::fourier(int k) const {
  if (k == 0) return {cos_[0], 0.0};
  const int m = std::abs(k);
  if (m > degree()) return {0.0, 0.0};
  const double re = 0.5 * cos_[m];
  const double im = -0.5 * sin_[m];
  return k > 0 ? std::complex<double>(re, im) : std::complex<double>(re, -im);
}

double TrigPoly::evaluate(double phi) const {
  double acc = cos_[0];
  for (int k = 1; k <= degree(); ++k) {
    acc += cos_[k] * std::cos(k * phi) + sin_[k] * std::sin(k * phi);
  }
  return acc;
}

TrigPoly TrigPoly::operator+(const TrigPoly& other) const {
  TrigPoly out;
  out.resize(std::max(degree(), other.degree()));
  for (int k = 0; k <= out.degree(); ++k) {
    out.cos_[k] = cos_coef(k) + other.cos_coef(k);
    out.sin_[k] = sin_coef(k) + other.sin_coef(k);
  }
  return out;
}

TrigPoly TrigPoly::operator*(const TrigPoly& other) const {
  // Multiply in the complex Fourier representation and fold back.
  const int da = degree();
  const int db = other.degree();
  const int dc = da + db;
  std::vector<std::complex<double>> acc(2 * dc + 1, {0.0, 0.0});
  for (int ka = -da; ka <= da; ++ka) {
    const auto ca = fourier(ka);
    if (ca == std::complex<double>(0.0, 0.0)) continue;
    for (int kb = -db; kb <= db; ++kb) {
      acc[ka + kb + dc] += ca * other.fourier(kb);
    }
  }
  TrigPoly out;
  out.resize(dc);
  out.cos_[0] = acc[dc].real();
  for (int k = 1; k <= dc; ++k) {
    out.cos_[k] = 2.0 * acc[dc + k].real();
    out.sin_[k] = -2.0 * acc[dc + k].imag();
  }
  return out;
}

TrigPoly TrigPoly::scaled(double factor) const {
  TrigPoly out = *this;
  for (double& v : out.cos_) v *= factor;
  for (double& v : out.sin_) v *= factor;
  return out;
}

TrigPoly TrigPoly::shifted(double delta) const {
  // cos(k(phi+d)) = cos kphi cos kd - sin kphi sin kd
  // sin(k(phi+d)) = sin kphi cos kd + cos kphi sin kd
  TrigPoly out;
  out.resize(degree());
  out.cos_[0] = cos_[0];
  for (int k = 1; k <= degree(); ++k) {
    const double c = std::cos(k * delta);
    const double s = std::sin(k * delta);
    out.cos_[k] = cos_[k] * c + sin_[k] * s;
    out.sin_[k] = -cos_[k] * s + sin_[k] * c;
  }
  return out;
}

TrigPoly TrigPoly::derivative() const {
  TrigPoly out;
  out.resize(degree());
  for (int k = 1; k <= degree(); ++k) {
    out.cos_[k] = k * sin_[k];
    out.sin_[k] = -k * cos_[k];
  }
  return out;
}

void TrigPoly::trim(double eps) {
  double peak = 0.0;
  for (int k = 0; k <= degree(); ++k) {
    peak = std::max({peak, std::abs(cos_[k]), std::abs(sin_[k])});
  }
  int top = 0;
  for (int k = 0; k <= degree(); ++k) {
    if (std::abs(cos_[k]) > eps * peak || std::abs(sin_[k]) > eps * peak) {
      top = k;
    }
  }
  resize(top);
}

}  // namespace cliffqc
