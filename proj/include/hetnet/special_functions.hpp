#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <utility>

namespace hetnet {

/// Tolerances and budget for every adaptive quadrature in the library.
struct QuadratureSpec {
  double rel_tol = 1e-12;
  double abs_tol = 1e-15;
  int max_subdivisions = 2048;  ///< >= 16
};

/// Raised when an adaptive rule cannot reach the requested tolerance
/// within its subdivision budget.
class QuadratureError : public std::runtime_error {
 public:
  explicit QuadratureError(const std::string& what) : std::runtime_error(what) {}
};

/// Adaptive Gauss-Kronrod integration of f over the finite interval [a,b].
/// Throws QuadratureError if the error estimate stays above
/// max(abs_tol, rel_tol*|I|) after exhausting the subdivision budget.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureSpec& spec = {});

/// 1/sin(pi*delta); rejects delta outside (0,1) where the interference
/// closed forms lose meaning.
double csc_pi(double delta);

/// Phi(X, m) = integral of dt/(1+t^m) over [0, X], for m > 1, X >= 0.
/// For X > 1 the tail is folded back through t -> 1/t so every quadrature
/// runs on a compact subinterval of [0,1]; Phi(inf, m) = (pi/m)csc(pi/m).
double unit_fraction_integral(double X, double m, const QuadratureSpec& spec = {});

/// H1(w, R, delta) = integral of dt/(1+t^(1/delta)) over [0, R^2 / w^delta].
/// At delta = 1/2 this equals arctan(R^2 / sqrt(w)).
double h1(double w, double R, double delta, const QuadratureSpec& spec = {});

/// H2(v, delta) = integral of dt/(1+t^(1/delta)) over [v^(-delta), inf).
/// At delta = 1/2 this equals arctan(sqrt(v)). The infinite limit is removed
/// by the substitution t -> 1/t followed by a power substitution that keeps
/// the integrand bounded for every delta in (0,1).
double h2(double v, double delta, const QuadratureSpec& spec = {});

struct IncompleteGammas {
  double lower;  ///< gamma(a, x)
  double upper;  ///< Gamma(a, x)
};

/// Lower and upper incomplete gamma functions; lower + upper = Gamma(a).
IncompleteGammas incomplete_gammas(double a, double x);

}  // namespace hetnet
