#ifndef SYNCNET_LYAPUNOV_HPP
#define SYNCNET_LYAPUNOV_HPP

#include <Eigen/Dense>

#include "syncnet/errors.hpp"

namespace syncnet {

// P together with the Q it was solved against and the achieved residual
// |P Am + Am^T P + Q|_F. P is exactly symmetric by construction.
struct LyapunovCertificate {
  Eigen::MatrixXd P;
  Eigen::MatrixXd Q;
  double residual = 0.0;
};

// Outcome of the b^T P Am^{-1} b sign test required by the optimal
// modification term.
struct SignCondition {
  double value = 0.0;
  bool holds = false;  // strictly negative
};

// Solves P Am + Am^T P = -Q for Hurwitz Am and symmetric Q > 0 via the
// complex-Schur reduction (triangular back-substitution column by column).
// Residual must come out at or below 1e-8 * |Q|_F or the solve is rejected.
LyapunovCertificate solve_lyapunov(const Eigen::MatrixXd& A_m,
                                   const Eigen::MatrixXd& Q);

// Evaluates b^T P Am^{-1} b and whether it is strictly negative.
SignCondition check_sign_condition(const Eigen::VectorXd& b,
                                   const LyapunovCertificate& cert,
                                   const Eigen::MatrixXd& A_m);

}  // namespace syncnet

#endif  // SYNCNET_LYAPUNOV_HPP
