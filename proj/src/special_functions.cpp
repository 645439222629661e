#include "hetnet/special_functions.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <sstream>

namespace hetnet {

namespace {

int depth_for(int max_subdivisions) {
  // The adaptive rule splits one interval per level; interval count is
  // bounded by 2^depth.
  int depth = 4;
  while ((1 << depth) < max_subdivisions && depth < 30) ++depth;
  return depth;
}

void check_spec(const QuadratureSpec& spec) {
  if (!(spec.rel_tol > 0) || !(spec.abs_tol > 0))
    throw std::invalid_argument("QuadratureSpec tolerances must be positive");
  if (spec.max_subdivisions < 16)
    throw std::invalid_argument("QuadratureSpec.max_subdivisions must be >= 16");
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureSpec& spec) {
  check_spec(spec);
  if (a == b) return 0.0;
  using rule = boost::math::quadrature::gauss_kronrod<double, 15>;
  double err = 0.0, l1 = 0.0;
  const double val = rule::integrate(f, a, b, depth_for(spec.max_subdivisions),
                                     spec.rel_tol, &err, &l1);
  if (!(err <= std::max(spec.abs_tol, spec.rel_tol * std::abs(val)) * 10.0)) {
    std::ostringstream os;
    os << "quadrature did not converge on [" << a << ", " << b
       << "]: estimate " << val << ", error " << err;
    throw QuadratureError(os.str());
  }
  return val;
}

double csc_pi(double delta) {
  if (!(delta > 0.0 && delta < 1.0))
    throw std::invalid_argument("csc_pi requires delta in (0,1)");
  return 1.0 / std::sin(M_PI * delta);
}

double unit_fraction_integral(double X, double m, const QuadratureSpec& spec) {
  if (!(m > 1.0)) throw std::invalid_argument("unit_fraction_integral requires m > 1");
  if (!(X >= 0.0)) throw std::invalid_argument("unit_fraction_integral requires X >= 0");
  if (X == 0.0) return 0.0;
  auto integrand = [m](double t) { return 1.0 / (1.0 + std::pow(t, m)); };
  if (X <= 1.0) return integrate(integrand, 0.0, X, spec);
  // Phi(X) = Phi(inf) - tail. With u = 1/t and then z = u^(m-1) the tail
  // becomes a bounded integral on [0, X^(1-m)] of the same functional family.
  const double total = (M_PI / m) * csc_pi(1.0 / m);
  const double mp = m / (m - 1.0);
  auto tail_integrand = [mp](double z) { return 1.0 / (1.0 + std::pow(z, mp)); };
  const double zmax = std::pow(X, 1.0 - m);
  const double tail = integrate(tail_integrand, 0.0, zmax, spec) / (m - 1.0);
  return total - tail;
}

double h1(double w, double R, double delta, const QuadratureSpec& spec) {
  if (!(w > 0.0)) throw std::invalid_argument("h1 requires w > 0");
  if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("h1 requires delta in (0,1)");
  if (!(R >= 0.0)) throw std::invalid_argument("h1 requires R >= 0");
  if (R == 0.0) return 0.0;
  const double X = R * R / std::pow(w, delta);
  return unit_fraction_integral(X, 1.0 / delta, spec);
}

double h2(double v, double delta, const QuadratureSpec& spec) {
  if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("h2 requires delta in (0,1)");
  if (!(v >= 0.0)) throw std::invalid_argument("h2 requires v >= 0");
  if (v == 0.0) return 0.0;
  // integral over [v^(-delta), inf) of dt/(1+t^(1/delta))
  //   = delta/(1-delta) * Phi(v^(1-delta), 1/(1-delta)).
  const double X = std::pow(v, 1.0 - delta);
  return delta / (1.0 - delta) * unit_fraction_integral(X, 1.0 / (1.0 - delta), spec);
}

IncompleteGammas incomplete_gammas(double a, double x) {
  if (!(a > 0.0)) throw std::invalid_argument("incomplete_gammas requires a > 0");
  if (!(x >= 0.0)) throw std::invalid_argument("incomplete_gammas requires x >= 0");
  return {boost::math::tgamma_lower(a, x), boost::math::tgamma(a, x)};
}

}  // namespace hetnet
