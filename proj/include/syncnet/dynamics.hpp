#ifndef SYNCNET_DYNAMICS_HPP
#define SYNCNET_DYNAMICS_HPP

#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "syncnet/errors.hpp"

namespace syncnet {

// Bounded state-dependent input disturbance. Only bounded primitives are
// exposed so every AgentModel stays bounded on compact sets.
struct Uncertainty {
  std::function<double(const Eigen::VectorXd&)> fn;
  double bound = 0.0;  // sup |f| over all states

  double operator()(const Eigen::VectorXd& x) const { return fn ? fn(x) : 0.0; }
  bool is_zero() const { return !fn; }
};

Uncertainty zero_uncertainty();

// f(x) = amplitude * sin(x3), acting on the third state component.
Uncertainty sinusoidal_uncertainty(double amplitude);

// Single-input LTI agent with an input-channel disturbance:
//   xdot = A x + (b + f(x) * b/|b|) u
// The disturbance is injected along the normalized input direction so a
// scalar f perturbs the input channel without changing its direction.
struct AgentModel {
  Eigen::MatrixXd A;
  Eigen::VectorXd b;
  Uncertainty uncertainty;

  int state_dim() const { return static_cast<int>(A.rows()); }
};

enum class SignalKind { Constant, Sinusoid };

// r(t) generator: constant value, or amplitude * sin(omega t).
struct ReferenceSignal {
  SignalKind kind = SignalKind::Constant;
  double amplitude = 0.0;
  double omega = 1.0;

  double operator()(double t) const;

  static ReferenceSignal constant(double value);
  static ReferenceSignal sinusoid(double amplitude, double omega);
};

// Hurwitz reference model xm_dot = Am xm + bm r(t). Construction rejects
// any Am with an eigenvalue real part >= -1e-10.
class ReferenceModel {
 public:
  ReferenceModel(Eigen::MatrixXd A_m, Eigen::VectorXd b_m, ReferenceSignal signal);

  const Eigen::MatrixXd& A() const { return A_m_; }
  const Eigen::VectorXd& b() const { return b_m_; }
  const ReferenceSignal& signal() const { return signal_; }
  double r(double t) const { return signal_(t); }
  int state_dim() const { return static_cast<int>(A_m_.rows()); }

 private:
  Eigen::MatrixXd A_m_;
  Eigen::VectorXd b_m_;
  ReferenceSignal signal_;
};

// Result of a matching-condition solve. `exact` when the stacked residual
// is at or below 1e-9; approximate solutions are returned with their
// residual rather than rejected.
struct MatchedGains {
  Eigen::VectorXd k;   // state-feedback / coupling vector
  double k_r = 0.0;    // input scaling
  double residual = 0.0;
  bool exact = false;
};

bool is_hurwitz(const Eigen::MatrixXd& A, double tol = 1e-10);

// Third-order vehicle model with power-train lag tau:
//   A = [[0,1,0],[0,0,1],[0,0,-1/tau]], b = [0,0,1/tau]^T
AgentModel make_vehicle_model(double tau);

// Companion-form Hurwitz matrix with the given poles (real, negative),
// paired with bm = e_n. Used to synthesize reference models for the
// vehicle family.
ReferenceModel make_pole_placed_reference(const std::vector<double>& poles,
                                          ReferenceSignal signal);

Eigen::VectorXd eval_agent(const AgentModel& model, const Eigen::VectorXd& x,
                           double u);
Eigen::VectorXd eval_reference(const ReferenceModel& ref,
                               const Eigen::VectorXd& x_m, double t);

// Least-squares solve of Am = Ai + bi k^T, bm = bi k_r.
MatchedGains solve_feedback_matching(const ReferenceModel& ref,
                                     const AgentModel& agent);

// Least-squares solve of Ai = Aj + bj k^T, bi = bj k_r.
MatchedGains solve_coupling_matching(const AgentModel& agent_i,
                                     const AgentModel& agent_j);

}  // namespace syncnet

#endif  // SYNCNET_DYNAMICS_HPP
