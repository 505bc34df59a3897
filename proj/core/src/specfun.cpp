#include "cliffqc/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "cliffqc/error.hpp"

namespace cliffqc::specfun {

namespace {

constexpr double kPi = std::numbers::pi;

// 15-point Gauss-Legendre rule on [-1, 1].
struct GlPoint {
  double x, w;
};
constexpr GlPoint kGl15[15] = {
    {-0.987992518020485428, 0.0307532419961172684},
    {-0.937273392400705904, 0.0703660474881081247},
    {-0.848206583410427216, 0.107159220467171935},
    {-0.724417731360170047, 0.139570677926154314},
    {-0.570972172608538848, 0.166269205816993934},
    {-0.39415134707756337, 0.186161000015562211},
    {-0.201194093997434522, 0.198431485327111576},
    {0.0, 0.202578241925561273},
    {0.201194093997434522, 0.198431485327111576},
    {0.39415134707756337, 0.186161000015562211},
    {0.570972172608538848, 0.166269205816993934},
    {0.724417731360170047, 0.139570677926154314},
    {0.848206583410427216, 0.107159220467171935},
    {0.937273392400705904, 0.0703660474881081247},
    {0.987992518020485428, 0.0307532419961172684},
};

// Power series of e^(-z) I_nu(z); all terms positive, no cancellation.
// Usable while e^z stays in range, which covers the z < 40 branch easily.
double bessel_series(int nu, double z) {
  const double half = 0.5 * z;
  double factorial_nu = 1.0;
  for (int k = 2; k <= nu; ++k) factorial_nu *= k;
  double term = std::pow(half, nu) / factorial_nu;
  double sum = term;
  const double q = half * half;
  for (int k = 1; k < 400; ++k) {
    term *= q / (static_cast<double>(k) * (k + nu));
    sum += term;
    if (term < sum * 1e-18) break;
  }
  return sum * std::exp(-z);
}

// Asymptotic expansion of e^(-z) I_nu(z) for large z.
double bessel_asymptotic(int nu, double z) {
  const double mu = 4.0 * nu * nu;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 40; ++k) {
    const double odd = 2.0 * k - 1.0;
    term *= -(mu - odd * odd) / (8.0 * k * z);
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    sum += term;
  }
  return sum / std::sqrt(2.0 * kPi * z);
}

}  // namespace

double bessel_i_scaled(int order, double z) {
  if (order < 0 || order > 8) {
    throw DomainError("bessel_i_scaled: order must be in [0, 8], got " +
                      std::to_string(order));
  }
  if (z < 0.0 || !std::isfinite(z)) {
    throw DomainError("bessel_i_scaled: argument must be non-negative");
  }
  if (z == 0.0) return order == 0 ? 1.0 : 0.0;
  // The asymptotic series for nu <= 8 reaches ~1e-15 once z >= 40; below
  // that the positive-term power series is exact to rounding.
  return z < 40.0 ? bessel_series(order, z) : bessel_asymptotic(order, z);
}

std::vector<double> bessel_i_scaled_array(int m_max, double z) {
  if (m_max < 0) throw DomainError("bessel_i_scaled_array: m_max < 0");
  if (z < 0.0 || !std::isfinite(z)) {
    throw DomainError("bessel_i_scaled_array: argument must be non-negative");
  }
  std::vector<double> out(m_max + 1, 0.0);
  if (z == 0.0) {
    out[0] = 1.0;
    return out;
  }
  // Miller's algorithm: run the three-term recurrence downward from a start
  // order deep enough in the decaying tail, then normalize with the scalar
  // order-0 value. The start offset sqrt(40 z) keeps the parasitic solution
  // below 1e-17 for all z.
  const int start =
      m_max + 20 + static_cast<int>(std::ceil(std::sqrt(40.0 * z)));
  double above = 0.0;      // y_{m+1}
  double current = 1e-280; // y_m, arbitrary seed
  for (int m = start; m >= 1; --m) {
    const double below = above + (2.0 * m / z) * current;  // y_{m-1}
    above = current;
    current = below;
    if (std::abs(current) > 1e250) {
      constexpr double s = 1e-250;
      current *= s;
      above *= s;
      for (double& v : out) v *= s;
    }
    if (m - 1 <= m_max) out[m - 1] = current;
  }
  const double norm = bessel_i_scaled(0, z) / out[0];
  for (double& v : out) v *= norm;
  return out;
}

double boys(int m, double x) {
  double buf[72];
  if (m < 0 || m > 64) {
    throw DomainError("boys: order must be in [0, 64], got " +
                      std::to_string(m));
  }
  boys_array(m, x, buf);
  return buf[m];
}

void boys_array(int m_max, double x, double* out) {
  if (x < 0.0 || !std::isfinite(x)) {
    throw DomainError("boys: argument must be non-negative");
  }
  const double ex = std::exp(-x);
  if (x > 35.0) {
    // erf(sqrt x) = 1 to machine precision; upward recursion is stable
    // here because (2m+1)/(2x) < 1 for the supported orders.
    out[0] = 0.5 * std::sqrt(kPi / x) * std::erf(std::sqrt(x));
    for (int m = 0; m < m_max; ++m) {
      out[m + 1] = ((2.0 * m + 1.0) * out[m] - ex) / (2.0 * x);
    }
    return;
  }
  // Converged series at the top order, downward recursion below it.
  double term = 1.0 / (2.0 * m_max + 1.0);
  double sum = term;
  for (int k = 1; k < 300; ++k) {
    term *= 2.0 * x / (2.0 * m_max + 2.0 * k + 1.0);
    sum += term;
    if (term < sum * 1e-17) break;
  }
  out[m_max] = sum * ex;
  for (int m = m_max; m >= 1; --m) {
    out[m - 1] = (2.0 * x * out[m] + ex) / (2.0 * m - 1.0);
  }
}

namespace {

struct Panel {
  double a, b;      // u-interval
  double estimate;  // single GL15 value on [a, b]
  double tol;       // error budget assigned to this panel
};

}  // namespace

QuadratureResult integrate_halfline(const std::function<double(double)>& f,
                                    const QuadratureSpec& spec) {
  if (!(spec.abs_tol > 0.0) || !(spec.rel_tol > 0.0)) {
    throw DomainError("integrate_halfline: tolerances must be positive");
  }
  if (spec.max_subdivisions < 16) {
    throw DomainError("integrate_halfline: max_subdivisions must be >= 16");
  }

  // Integrand after the change of variables, as a function of u in [0, 1).
  auto g = [&](double u) {
    if (spec.map == HalfLineMap::rational) {
      const double one_minus = 1.0 - u;
      const double t = u / one_minus;
      return f(t) / (one_minus * one_minus);
    }
    const double one_minus = 1.0 - u;
    return f(-std::log(one_minus)) / one_minus;
  };
  auto gl15 = [&](double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double acc = 0.0;
    for (const auto& p : kGl15) acc += p.w * g(mid + half * p.x);
    return acc * half;
  };

  QuadratureResult result;
  std::vector<Panel> work;
  const int n0 = std::max(1, spec.initial_panels);
  double rough = 0.0;
  for (int i = 0; i < n0; ++i) {
    const double a = static_cast<double>(i) / n0;
    const double b = static_cast<double>(i + 1) / n0;
    work.push_back({a, b, gl15(a, b), 0.0});
    rough += work.back().estimate;
  }
  const double budget = std::max(spec.abs_tol, spec.rel_tol * std::abs(rough));
  for (auto& p : work) p.tol = budget / n0;

  int splits = 0;
  bool converged = true;
  while (!work.empty()) {
    Panel p = work.back();
    work.pop_back();
    const double mid = 0.5 * (p.a + p.b);
    const double left = gl15(p.a, mid);
    const double right = gl15(mid, p.b);
    const double refined = left + right;
    const double err = std::abs(refined - p.estimate);
    if (err <= p.tol || (p.b - p.a) < 1e-15) {
      result.value += refined;
      result.error_estimate += err;
      continue;
    }
    if (++splits > spec.max_subdivisions) {
      // Flush what is left at its current refinement and report failure.
      result.value += refined;
      result.error_estimate += err;
      for (const auto& rest : work) {
        result.value += rest.estimate;
        result.error_estimate += std::abs(rest.tol);
      }
      converged = false;
      break;
    }
    work.push_back({p.a, mid, left, 0.5 * p.tol});
    work.push_back({mid, p.b, right, 0.5 * p.tol});
  }
  result.subdivisions = splits;
  if (!converged) {
    throw QuadratureError(
        "integrate_halfline: no convergence after " +
            std::to_string(spec.max_subdivisions) + " subdivisions",
        result.value, result.error_estimate);
  }
  return result;
}

}  // namespace cliffqc::specfun
