#include "syncnet/dynamics.hpp"

#include <cmath>
#include <string>

namespace syncnet {

Uncertainty zero_uncertainty() { return Uncertainty{}; }

Uncertainty sinusoidal_uncertainty(double amplitude) {
  if (amplitude == 0.0) return zero_uncertainty();
  Uncertainty u;
  u.bound = std::abs(amplitude);
  u.fn = [amplitude](const Eigen::VectorXd& x) {
    if (x.size() < 3) {
      throw Error(ErrorCode::DimensionMismatch,
                  "sinusoidal uncertainty needs at least 3 state components");
    }
    return amplitude * std::sin(x(2));
  };
  return u;
}

double ReferenceSignal::operator()(double t) const {
  switch (kind) {
    case SignalKind::Constant: return amplitude;
    case SignalKind::Sinusoid: return amplitude * std::sin(omega * t);
  }
  return 0.0;
}

ReferenceSignal ReferenceSignal::constant(double value) {
  return ReferenceSignal{SignalKind::Constant, value, 0.0};
}

ReferenceSignal ReferenceSignal::sinusoid(double amplitude, double omega) {
  return ReferenceSignal{SignalKind::Sinusoid, amplitude, omega};
}

bool is_hurwitz(const Eigen::MatrixXd& A, double tol) {
  Eigen::EigenSolver<Eigen::MatrixXd> eig(A, /*computeEigenvectors=*/false);
  return eig.eigenvalues().real().maxCoeff() < -tol;
}

ReferenceModel::ReferenceModel(Eigen::MatrixXd A_m, Eigen::VectorXd b_m,
                               ReferenceSignal signal)
    : A_m_(std::move(A_m)), b_m_(std::move(b_m)), signal_(signal) {
  if (A_m_.rows() != A_m_.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "Am must be square");
  }
  if (b_m_.size() != A_m_.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "bm size must match Am");
  }
  if (!is_hurwitz(A_m_)) {
    throw Error(ErrorCode::NotHurwitz,
                "reference matrix has an eigenvalue with real part >= -1e-10");
  }
}

AgentModel make_vehicle_model(double tau) {
  if (tau == 0.0) {
    throw Error(ErrorCode::ZeroTau, "vehicle time lag tau must be nonzero");
  }
  Eigen::MatrixXd A(3, 3);
  A << 0, 1, 0,
       0, 0, 1,
       0, 0, -1.0 / tau;
  Eigen::VectorXd b(3);
  b << 0, 0, 1.0 / tau;
  return AgentModel{A, b, zero_uncertainty()};
}

ReferenceModel make_pole_placed_reference(const std::vector<double>& poles,
                                          ReferenceSignal signal) {
  const int n = static_cast<int>(poles.size());
  if (n < 1) {
    throw Error(ErrorCode::InvalidScenario, "pole list is empty");
  }
  // Expand prod (s - p_i) into monic coefficients c0 + c1 s + ... + s^n.
  std::vector<double> coeff(n + 1, 0.0);
  coeff[0] = 1.0;
  int degree = 0;
  for (double p : poles) {
    for (int k = degree + 1; k >= 1; --k) coeff[k] = coeff[k - 1] - p * coeff[k];
    coeff[0] *= -p;
    ++degree;
  }
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i + 1 < n; ++i) A(i, i + 1) = 1.0;
  for (int j = 0; j < n; ++j) A(n - 1, j) = -coeff[j];
  Eigen::VectorXd b = Eigen::VectorXd::Zero(n);
  b(n - 1) = 1.0;
  return ReferenceModel(A, b, signal);
}

Eigen::VectorXd eval_agent(const AgentModel& model, const Eigen::VectorXd& x,
                           double u) {
  if (x.size() != model.state_dim()) {
    throw Error(ErrorCode::DimensionMismatch,
                "state size " + std::to_string(x.size()) + " vs model dim " +
                    std::to_string(model.state_dim()));
  }
  Eigen::VectorXd dx = model.A * x;
  if (model.uncertainty.is_zero()) {
    dx += model.b * u;
  } else {
    const double f = model.uncertainty(x);
    dx += (model.b + f * model.b.normalized()) * u;
  }
  return dx;
}

Eigen::VectorXd eval_reference(const ReferenceModel& ref,
                               const Eigen::VectorXd& x_m, double t) {
  if (x_m.size() != ref.state_dim()) {
    throw Error(ErrorCode::DimensionMismatch, "reference state size mismatch");
  }
  return ref.A() * x_m + ref.b() * ref.r(t);
}

namespace {

// Shared least-squares core: find k, k_r with  A_to = A_from + b k^T and
// b_to = b k_r, reporting the stacked Frobenius residual.
MatchedGains match_through(const Eigen::MatrixXd& A_to,
                           const Eigen::VectorXd& b_to,
                           const Eigen::MatrixXd& A_from,
                           const Eigen::VectorXd& b) {
  if (A_to.rows() != A_from.rows() || b_to.size() != b.size() ||
      A_to.rows() != b.size()) {
    throw Error(ErrorCode::DimensionMismatch, "matching solve dimension mismatch");
  }
  const double btb = b.squaredNorm();
  if (btb == 0.0) {
    throw Error(ErrorCode::InvalidScenario, "input vector b is zero");
  }
  MatchedGains out;
  const Eigen::MatrixXd delta = A_to - A_from;
  out.k = delta.transpose() * b / btb;          // k^T = b^+ (A_to - A_from)
  out.k_r = b.dot(b_to) / btb;
  const double res_a = (delta - b * out.k.transpose()).norm();
  const double res_b = (b_to - b * out.k_r).norm();
  out.residual = std::sqrt(res_a * res_a + res_b * res_b);
  out.exact = out.residual <= 1e-9;
  return out;
}

}  // namespace

MatchedGains solve_feedback_matching(const ReferenceModel& ref,
                                     const AgentModel& agent) {
  return match_through(ref.A(), ref.b(), agent.A, agent.b);
}

MatchedGains solve_coupling_matching(const AgentModel& agent_i,
                                     const AgentModel& agent_j) {
  return match_through(agent_i.A, agent_i.b, agent_j.A, agent_j.b);
}

}  // namespace syncnet
