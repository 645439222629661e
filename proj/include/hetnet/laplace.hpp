#pragma once

#include "hetnet/scenario.hpp"
#include "hetnet/special_functions.hpp"

namespace hetnet {

// Interference Laplace transforms, each evaluated at a Laplace variable
// s > 0 and mapping into (0,1]. All are pure functions of immutable
// parameter records and safe for concurrent callers.

/// LT of macro-tier interference seen by an FU:
/// exp(-pi^2 delta lambda_B zeta (s chi P_B)^delta csc(pi delta)).
double lt_macro_to_fu(double s, double zeta, const NetworkParams& net);

/// LT of intra-cluster interference for an FU at the cluster center, with
/// the cluster's FAPs split over n_share channels and thinned by cognition:
/// exp(-(c_tilde / R^2) (s chi P_F)^delta H1(s chi P_F, R, delta)) with
/// c_tilde = (c/n_share) exp((lambda_m/mu) pi r_m^2). Decreasing in r_m.
double lt_intra_cluster(double s, double r_m, const NetworkParams& net,
                        const TrafficParams& traffic, int n_share,
                        const QuadratureSpec& spec = {});

/// LT of inter-cluster interference; structurally the macro-tier transform
/// with density lambda_F c / n_share and power chi P_F.
double lt_inter_cluster(double s, const NetworkParams& net,
                        const TrafficParams& traffic, int n_share);

/// Double integral over (parent position outside the exclusion disc) x
/// (offset in the cluster disc) of 1/(1 + |x-y|^alpha / w), the exponent
/// kernel of the FAP-to-MU transform. Evaluated in polar coordinates with
/// the inner disc integral reduced to one dimension by circular symmetry;
/// the outer integral is truncated where its analytic tail bound drops
/// below 1e-9 of the accumulated value and the bound is added back.
/// Equals pi^2 delta csc(pi delta) w^delta at r_m = 0.
double fap_interference_integral(double w, double r_m, double R, double alpha,
                                 const QuadratureSpec& spec = {});

/// LT of interference from co-channel cluster FAPs at an MU, with an
/// exclusion hole of radius r_m around the user. Increasing in r_m;
/// matches the closed inter-cluster form at r_m = 0.
double lt_fap_to_mu(double s, double r_m, const NetworkParams& net,
                    const TrafficParams& traffic, int n_share,
                    const QuadratureSpec& spec = {});

/// LT of interference from co-channel MBSs outside the serving distance r:
/// exp(-pi lambda_B zeta (s P_B)^delta H2(s P_B / r^(2/delta), delta)).
double lt_mbs_to_mu(double s, double r, double zeta, const NetworkParams& net,
                    const QuadratureSpec& spec = {});

struct InterferenceMoments {
  double first;
  double second;
};

/// First and second moments of intra-cluster interference for a user at
/// distance |y| from the cluster center, with interferers farther than the
/// guard radius epsilon. The moments diverge as epsilon -> 0 for alpha >= 2,
/// so epsilon must be strictly positive.
InterferenceMoments intra_cluster_moments(double y_norm, double epsilon,
                                          const NetworkParams& net,
                                          const TrafficParams& traffic,
                                          int n_share, double r_m = 0.0,
                                          const QuadratureSpec& spec = {});

/// Arc angle (radians) of the circle of radius u, centered at distance rho
/// from the origin, lying inside the disc of radius disc_r at the origin.
double arc_inside_disc(double u, double rho, double disc_r);

}  // namespace hetnet
