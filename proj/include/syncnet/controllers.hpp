#ifndef SYNCNET_CONTROLLERS_HPP
#define SYNCNET_CONTROLLERS_HPP

#include <vector>

#include <Eigen/Dense>

#include "syncnet/dynamics.hpp"
#include "syncnet/errors.hpp"
#include "syncnet/lyapunov.hpp"

namespace syncnet {

enum class Protocol { Aocm, Nn, InputEstimation };

// Bounded basis for the optimal-modification and input-estimation
// protocols. ConstSin3 is [1, sin(x3)] so the bundled sinusoidal input
// disturbance is exactly representable; ConstOnly is the m=1 fallback for
// low-dimensional test systems.
struct Basis {
  enum class Kind { ConstOnly, ConstSin3 };
  Kind kind = Kind::ConstSin3;

  int dim() const { return kind == Kind::ConstOnly ? 1 : 2; }
  double phi_max() const;
  Eigen::VectorXd eval(const Eigen::VectorXd& x) const;

  static Basis const_only() { return Basis{Kind::ConstOnly}; }
  static Basis const_sin3() { return Basis{Kind::ConstSin3}; }
};

// One in-neighbor as seen by a follower at a single instant. `u` is the
// neighbor's current input (the reference signal when the neighbor is the
// leader); `input_available` is false while the edge's input link is down.
struct NeighborSample {
  Eigen::VectorXd x;
  double u = 0.0;
  double weight = 1.0;
  bool input_available = true;
};

// Per-agent constants shared by every law evaluation.
struct ControllerContext {
  double gamma = 1.0;
  double v = 0.0;          // optimal-modification constant (aocm / ie)
  double sign_kr = 1.0;    // sign of the feedback matching scalar k*_ri
  Eigen::MatrixXd P;
  Eigen::VectorXd b_m;
  Eigen::VectorXd b_i;
  double c_i = 0.0;        // b_i^T P Am^{-1} b_i (strictly negative for aocm/ie)
};

// Weighted disagreement Xi = sum_j a_ij (x_i - x_j) and abar = sum_j a_ij.
struct Disagreement {
  Eigen::VectorXd xi;
  double abar = 0.0;
};
Disagreement weighted_disagreement(const Eigen::VectorXd& x_i,
                                   const std::vector<NeighborSample>& neighbors);

// ---------------------------------------------------------------------------
// Optimal-modification protocol
// ---------------------------------------------------------------------------

// Adaptive parameters of one agent. Coupling gains are stored per in-edge
// (same order as the neighbor list) so unevenly weighted or heterogeneous
// parents adapt independently.
struct AocmState {
  std::vector<Eigen::VectorXd> k_edge;   // k_ij, one n-vector per in-edge
  std::vector<double> k_r_edge;          // k_rij feedforward scalars
  Eigen::VectorXd k_m;                   // gain on the disagreement Xi
  Eigen::VectorXd theta;                 // basis weights

  static AocmState zeros(int state_dim, int n_edges, int basis_dim);
};

// u_i = [ sum_j a_ij (k_ij^T x_j + k_rij u_j) + k_m^T Xi - theta^T phi(x_i) ] / abar
double aocm_control(const AocmState& state, const ControllerContext& ctx,
                    const Basis& basis, const Eigen::VectorXd& x_i,
                    const std::vector<NeighborSample>& neighbors);

// Time derivatives of every adaptive parameter:
//   kdot_ij  = -sign(k*_ri) gamma (b_m^T P Xi) x_j
//   kdot_m   = -sign(k*_ri) gamma (b_m^T P Xi) Xi
//   kdot_rij = -sign(k*_ri) gamma (b_m^T P Xi) u_j
//   thetadot =  gamma [ (Xi^T P b_i) phi + v c_i (phi^T theta) phi ]
// Feedforward adaptation freezes on edges whose input link is down.
AocmState aocm_update(const AocmState& state, const ControllerContext& ctx,
                      const Basis& basis, const Eigen::VectorXd& x_i,
                      const std::vector<NeighborSample>& neighbors);

// ---------------------------------------------------------------------------
// Neural-network protocol
// ---------------------------------------------------------------------------

struct NnConfig {
  int width = 5;          // hidden units m
  double steepness = 1.0; // sigmoid constant a
  Eigen::VectorXd v_bias; // length m
  unsigned long long seed = 1;
};

struct NnState {
  std::vector<Eigen::VectorXd> k_edge;
  std::vector<double> k_r_edge;
  Eigen::VectorXd k_m;
  Eigen::VectorXd theta;  // length m+1 (bias channel first)
  Eigen::MatrixXd W;      // (n+1) x m inner weights

  static NnState zeros(int state_dim, int n_edges, const NnConfig& cfg);
};

// Deterministic small-weight initialization, entries in [-0.1, 0.1].
Eigen::MatrixXd nn_initial_weights(int state_dim, const NnConfig& cfg);

// phi(W^T xbar) = [1, sigma(W^T xbar)^T]^T with xbar = [1, x^T]^T and
// sigma(z) = 1 / (1 + exp(-a z)) elementwise.
Eigen::VectorXd nn_basis(const Eigen::MatrixXd& W, const Eigen::VectorXd& x,
                         double steepness);

double nn_control(const NnState& state, const ControllerContext& ctx,
                  const NnConfig& cfg, const Eigen::VectorXd& x_i,
                  const std::vector<NeighborSample>& neighbors);

// k-gain derivatives as in the optimal-modification laws; the network
// weights move by
//   thetadot = gamma (Xi^T P b_i) phi(W^T xbar)
//   Wdot     = gamma (Xi^T P b_i) xbar (v_bias .* sigma)^T
NnState nn_update(const NnState& state, const ControllerContext& ctx,
                  const NnConfig& cfg, const Eigen::VectorXd& x_i,
                  const std::vector<NeighborSample>& neighbors);

// ---------------------------------------------------------------------------
// Input-estimation protocol
// ---------------------------------------------------------------------------

// Replaces the u_j feedforward with per-edge estimates u_hat; neighbor
// inputs are never read, only neighbor states.
struct IeState {
  std::vector<Eigen::VectorXd> k_edge;
  std::vector<double> u_hat_edge;
  Eigen::VectorXd k_m;
  Eigen::VectorXd theta;

  static IeState zeros(int state_dim, int n_edges, int basis_dim);
};

// u_i = [ sum_j a_ij (k_ij^T x_j + u_hat_ji) + k_m^T Xi - theta^T phi(x_i) ] / abar
double ie_control(const IeState& state, const ControllerContext& ctx,
                  const Basis& basis, const Eigen::VectorXd& x_i,
                  const std::vector<NeighborSample>& neighbors);

// u_hat_dot_ji = -sign(k*_ri) gamma b_m^T P Xi; remaining laws as aocm
// minus the feedforward gain.
IeState ie_update(const IeState& state, const ControllerContext& ctx,
                  const Basis& basis, const Eigen::VectorXd& x_i,
                  const std::vector<NeighborSample>& neighbors);

// ---------------------------------------------------------------------------

// Current representation error theta^T phi(x) - f(x); diagnostic only.
double epsilon_diagnostic(const Eigen::VectorXd& theta, const Basis& basis,
                          const Eigen::VectorXd& x, const Uncertainty& f);

}  // namespace syncnet

#endif  // SYNCNET_CONTROLLERS_HPP
