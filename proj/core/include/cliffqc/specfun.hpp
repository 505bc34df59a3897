#pragma once

#include <functional>
#include <vector>

namespace cliffqc::specfun {

/// Exponentially scaled modified Bessel function of the first kind,
/// e^(-z) I_nu(z). Power series below z = 40, asymptotic expansion above;
/// relative accuracy ~1e-14 over z in [0, 1e6] for nu <= 8.
double bessel_i_scaled(int order, double z);

/// e^(-z) I_m(z) for m = 0..m_max in one sweep (Miller downward recurrence,
/// normalized against the scalar order-0 value). Unlike bessel_i_scaled this
/// helper accepts arbitrary orders; the torus electron-repulsion series needs
/// a few hundred of them.
std::vector<double> bessel_i_scaled_array(int m_max, double z);

/// Boys function F_m(x) = int_0^1 u^(2m) exp(-x u^2) du.
double boys(int m, double x);

/// F_m(x) for m = 0..m_max (downward recursion from a converged series).
void boys_array(int m_max, double x, double* out);

/// Maps t in [0, inf) onto u in [0, 1).
enum class HalfLineMap {
  rational,  // t = u / (1 - u)
  log,       // t = -log(1 - u)
};

struct QuadratureSpec {
  double abs_tol = 1e-14;
  double rel_tol = 1e-12;
  int max_subdivisions = 1024;  // must be >= 16
  HalfLineMap map = HalfLineMap::rational;
  int initial_panels = 1;  // uniform u-panels before adaptivity kicks in
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int subdivisions = 0;
};

/// Integrates f over t in [0, inf) after the spec's variable change, with
/// globally adaptive bisection of 15-point Gauss-Legendre panels. Throws
/// QuadratureError (carrying the best value) if the tolerance is not met
/// within spec.max_subdivisions.
QuadratureResult integrate_halfline(const std::function<double(double)>& f,
                                    const QuadratureSpec& spec = {});

}  // namespace cliffqc::specfun
