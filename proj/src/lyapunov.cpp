#include "syncnet/lyapunov.hpp"

#include <complex>

#include <Eigen/Eigenvalues>

#include "syncnet/dynamics.hpp"

namespace syncnet {

namespace {

void require_symmetric_pd(const Eigen::MatrixXd& Q) {
  if (Q.rows() != Q.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "Q must be square");
  }
  if ((Q - Q.transpose()).norm() > 1e-12 * (1.0 + Q.norm())) {
    throw Error(ErrorCode::NotPositiveDefinite, "Q is not symmetric");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(Q);
  if (eig.eigenvalues().minCoeff() <= 0.0) {
    throw Error(ErrorCode::NotPositiveDefinite,
                "Q has a non-positive eigenvalue");
  }
}

}  // namespace

LyapunovCertificate solve_lyapunov(const Eigen::MatrixXd& A_m,
                                   const Eigen::MatrixXd& Q) {
  if (A_m.rows() != A_m.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "Am must be square");
  }
  if (!is_hurwitz(A_m)) {
    throw Error(ErrorCode::NotHurwitz, "Lyapunov equation needs Hurwitz Am");
  }
  require_symmetric_pd(Q);
  if (Q.rows() != A_m.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "Q size must match Am");
  }

  using ComplexMatrix = Eigen::MatrixXcd;
  const int n = static_cast<int>(A_m.rows());

  // Am = U T U^H reduces the equation to Y T + T^H Y = -U^H Q U with
  // Y = U^H P U; each column then needs one lower-triangular solve.
  Eigen::ComplexSchur<Eigen::MatrixXd> schur(A_m);
  if (schur.info() != Eigen::Success) {
    throw Error(ErrorCode::SolveFailed, "Schur decomposition failed");
  }
  const ComplexMatrix U = schur.matrixU();
  const ComplexMatrix T = schur.matrixT();
  const ComplexMatrix Qt = U.adjoint() * Q * U;

  ComplexMatrix Y(n, n);
  const ComplexMatrix Th = T.adjoint();  // lower triangular
  for (int k = 0; k < n; ++k) {
    Eigen::VectorXcd rhs = -Qt.col(k);
    for (int j = 0; j < k; ++j) rhs -= T(j, k) * Y.col(j);
    ComplexMatrix M = Th;
    M.diagonal().array() += T(k, k);
    Y.col(k) =
        M.triangularView<Eigen::Lower>().solve(rhs);
  }

  LyapunovCertificate cert;
  cert.Q = Q;
  cert.P = (U * Y * U.adjoint()).real();
  cert.P = 0.5 * (cert.P + cert.P.transpose().eval());  // exact symmetry
  cert.residual = (cert.P * A_m + A_m.transpose() * cert.P + Q).norm();

  if (!(cert.residual <= 1e-8 * Q.norm())) {
    throw Error(ErrorCode::SolveFailed,
                "Lyapunov residual " + std::to_string(cert.residual) +
                    " exceeds tolerance");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(cert.P);
  if (eig.eigenvalues().minCoeff() <= 0.0) {
    throw Error(ErrorCode::SolveFailed, "solved P is not positive definite");
  }
  return cert;
}

SignCondition check_sign_condition(const Eigen::VectorXd& b,
                                   const LyapunovCertificate& cert,
                                   const Eigen::MatrixXd& A_m) {
  if (b.size() != A_m.rows() || cert.P.rows() != A_m.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "sign condition dimension mismatch");
  }
  Eigen::FullPivLU<Eigen::MatrixXd> lu(A_m);
  if (!lu.isInvertible()) {
    throw Error(ErrorCode::SingularAm, "Am is singular");
  }
  SignCondition out;
  out.value = b.dot(cert.P * lu.solve(b));
  out.holds = out.value < 0.0;
  return out;
}

}  // namespace syncnet
