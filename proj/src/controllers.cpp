#include "syncnet/controllers.hpp"

#include <cmath>
#include <random>

namespace syncnet {

double Basis::phi_max() const {
  // |[1]| = 1, |[1, sin x3]| <= sqrt(2)
  return kind == Kind::ConstOnly ? 1.0 : std::sqrt(2.0);
}

Eigen::VectorXd Basis::eval(const Eigen::VectorXd& x) const {
  if (kind == Kind::ConstOnly) {
    return Eigen::VectorXd::Ones(1);
  }
  if (x.size() < 3) {
    throw Error(ErrorCode::DimensionMismatch,
                "sin(x3) basis needs at least 3 state components");
  }
  Eigen::VectorXd phi(2);
  phi << 1.0, std::sin(x(2));
  return phi;
}

Disagreement weighted_disagreement(const Eigen::VectorXd& x_i,
                                   const std::vector<NeighborSample>& neighbors) {
  if (neighbors.empty()) {
    throw Error(ErrorCode::NoNeighbors, "agent has no in-neighbors");
  }
  Disagreement d;
  d.xi = Eigen::VectorXd::Zero(x_i.size());
  for (const NeighborSample& nb : neighbors) {
    if (nb.x.size() != x_i.size()) {
      throw Error(ErrorCode::DimensionMismatch, "neighbor state size mismatch");
    }
    d.xi += nb.weight * (x_i - nb.x);
    d.abar += nb.weight;
  }
  if (!(d.abar > 0.0)) {
    throw Error(ErrorCode::InvalidWeight, "in-neighbor weights sum to zero");
  }
  return d;
}

namespace {

void require_edge_count(size_t gains, size_t neighbors) {
  if (gains != neighbors) {
    throw Error(ErrorCode::DimensionMismatch,
                "per-edge gain count does not match neighbor count");
  }
}

}  // namespace

// --------------------------- optimal modification ---------------------------

AocmState AocmState::zeros(int state_dim, int n_edges, int basis_dim) {
  AocmState s;
  s.k_edge.assign(n_edges, Eigen::VectorXd::Zero(state_dim));
  s.k_r_edge.assign(n_edges, 0.0);
  s.k_m = Eigen::VectorXd::Zero(state_dim);
  s.theta = Eigen::VectorXd::Zero(basis_dim);
  return s;
}

double aocm_control(const AocmState& state, const ControllerContext& ctx,
                    const Basis& basis, const Eigen::VectorXd& x_i,
                    const std::vector<NeighborSample>& neighbors) {
  require_edge_count(state.k_edge.size(), neighbors.size());
  const Disagreement d = weighted_disagreement(x_i, neighbors);
  double acc = state.k_m.dot(d.xi) - state.theta.dot(basis.eval(x_i));
  for (size_t e = 0; e < neighbors.size(); ++e) {
    const NeighborSample& nb = neighbors[e];
    acc += nb.weight * state.k_edge[e].dot(nb.x);
    if (nb.input_available) {
      acc += nb.weight * state.k_r_edge[e] * nb.u;
    }
  }
  return acc / d.abar;
}

AocmState aocm_update(const AocmState& state, const ControllerContext& ctx,
                      const Basis& basis, const Eigen::VectorXd& x_i,
                      const std::vector<NeighborSample>& neighbors) {
  require_edge_count(state.k_edge.size(), neighbors.size());
  const Disagreement d = weighted_disagreement(x_i, neighbors);
  const double drive = ctx.b_m.dot(ctx.P * d.xi);        // b_m^T P Xi
  const double lead = -ctx.sign_kr * ctx.gamma * drive;

  AocmState dot;
  dot.k_edge.reserve(neighbors.size());
  dot.k_r_edge.reserve(neighbors.size());
  for (const NeighborSample& nb : neighbors) {
    dot.k_edge.push_back(lead * nb.x);
    dot.k_r_edge.push_back(nb.input_available ? lead * nb.u : 0.0);
  }
  dot.k_m = lead * d.xi;

  const Eigen::VectorXd phi = basis.eval(x_i);
  const double s = d.xi.dot(ctx.P * ctx.b_i);             // Xi^T P b_i
  dot.theta = ctx.gamma * (s + ctx.v * ctx.c_i * phi.dot(state.theta)) * phi;
  return dot;
}

// ------------------------------ neural network ------------------------------

NnState NnState::zeros(int state_dim, int n_edges, const NnConfig& cfg) {
  NnState s;
  s.k_edge.assign(n_edges, Eigen::VectorXd::Zero(state_dim));
  s.k_r_edge.assign(n_edges, 0.0);
  s.k_m = Eigen::VectorXd::Zero(state_dim);
  s.theta = Eigen::VectorXd::Zero(cfg.width + 1);
  s.W = nn_initial_weights(state_dim, cfg);
  return s;
}

Eigen::MatrixXd nn_initial_weights(int state_dim, const NnConfig& cfg) {
  // mt19937_64 output mapped to [-0.1, 0.1] directly; the standard leaves
  // uniform_real_distribution implementation-defined, this does not.
  std::mt19937_64 rng(cfg.seed);
  Eigen::MatrixXd W(state_dim + 1, cfg.width);
  for (int r = 0; r < W.rows(); ++r) {
    for (int c = 0; c < W.cols(); ++c) {
      const double unit = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      W(r, c) = -0.1 + 0.2 * unit;
    }
  }
  return W;
}

namespace {

Eigen::VectorXd augmented_state(const Eigen::VectorXd& x) {
  Eigen::VectorXd xbar(x.size() + 1);
  xbar(0) = 1.0;
  xbar.tail(x.size()) = x;
  return xbar;
}

Eigen::VectorXd sigmoid(const Eigen::VectorXd& z, double steepness) {
  return (1.0 + (-steepness * z.array()).exp()).inverse().matrix();
}

}  // namespace

Eigen::VectorXd nn_basis(const Eigen::MatrixXd& W, const Eigen::VectorXd& x,
                         double steepness) {
  if (W.rows() != x.size() + 1) {
    throw Error(ErrorCode::DimensionMismatch, "W rows must equal state dim + 1");
  }
  const Eigen::VectorXd sig = sigmoid(W.transpose() * augmented_state(x), steepness);
  Eigen::VectorXd phi(sig.size() + 1);
  phi(0) = 1.0;
  phi.tail(sig.size()) = sig;
  return phi;
}

double nn_control(const NnState& state, const ControllerContext& ctx,
                  const NnConfig& cfg, const Eigen::VectorXd& x_i,
                  const std::vector<NeighborSample>& neighbors) {
  require_edge_count(state.k_edge.size(), neighbors.size());
  const Disagreement d = weighted_disagreement(x_i, neighbors);
  double acc = state.k_m.dot(d.xi) -
               state.theta.dot(nn_basis(state.W, x_i, cfg.steepness));
  for (size_t e = 0; e < neighbors.size(); ++e) {
    const NeighborSample& nb = neighbors[e];
    acc += nb.weight * state.k_edge[e].dot(nb.x);
    if (nb.input_available) {
      acc += nb.weight * state.k_r_edge[e] * nb.u;
    }
  }
  return acc / d.abar;
}

NnState nn_update(const NnState& state, const ControllerContext& ctx,
                  const NnConfig& cfg, const Eigen::VectorXd& x_i,
                  const std::vector<NeighborSample>& neighbors) {
  require_edge_count(state.k_edge.size(), neighbors.size());
  const Disagreement d = weighted_disagreement(x_i, neighbors);
  const double lead = -ctx.sign_kr * ctx.gamma * ctx.b_m.dot(ctx.P * d.xi);

  NnState dot;
  dot.k_edge.reserve(neighbors.size());
  dot.k_r_edge.reserve(neighbors.size());
  for (const NeighborSample& nb : neighbors) {
    dot.k_edge.push_back(lead * nb.x);
    dot.k_r_edge.push_back(nb.input_available ? lead * nb.u : 0.0);
  }
  dot.k_m = lead * d.xi;

  const double s = d.xi.dot(ctx.P * ctx.b_i);
  const Eigen::VectorXd xbar = augmented_state(x_i);
  const Eigen::VectorXd sig = sigmoid(state.W.transpose() * xbar, cfg.steepness);
  dot.theta = ctx.gamma * s * nn_basis(state.W, x_i, cfg.steepness);
  dot.W = ctx.gamma * s * xbar * (cfg.v_bias.array() * sig.array()).matrix().transpose();
  return dot;
}

// ----------------------------- input estimation -----------------------------

IeState IeState::zeros(int state_dim, int n_edges, int basis_dim) {
  IeState s;
  s.k_edge.assign(n_edges, Eigen::VectorXd::Zero(state_dim));
  s.u_hat_edge.assign(n_edges, 0.0);
  s.k_m = Eigen::VectorXd::Zero(state_dim);
  s.theta = Eigen::VectorXd::Zero(basis_dim);
  return s;
}

double ie_control(const IeState& state, const ControllerContext& ctx,
                  const Basis& basis, const Eigen::VectorXd& x_i,
                  const std::vector<NeighborSample>& neighbors) {
  require_edge_count(state.k_edge.size(), neighbors.size());
  const Disagreement d = weighted_disagreement(x_i, neighbors);
  double acc = state.k_m.dot(d.xi) - state.theta.dot(basis.eval(x_i));
  for (size_t e = 0; e < neighbors.size(); ++e) {
    const NeighborSample& nb = neighbors[e];
    acc += nb.weight * (state.k_edge[e].dot(nb.x) + state.u_hat_edge[e]);
  }
  return acc / d.abar;
}

IeState ie_update(const IeState& state, const ControllerContext& ctx,
                  const Basis& basis, const Eigen::VectorXd& x_i,
                  const std::vector<NeighborSample>& neighbors) {
  require_edge_count(state.k_edge.size(), neighbors.size());
  const Disagreement d = weighted_disagreement(x_i, neighbors);
  const double lead = -ctx.sign_kr * ctx.gamma * ctx.b_m.dot(ctx.P * d.xi);

  IeState dot;
  dot.k_edge.reserve(neighbors.size());
  for (const NeighborSample& nb : neighbors) {
    dot.k_edge.push_back(lead * nb.x);
  }
  dot.u_hat_edge.assign(neighbors.size(), lead);
  dot.k_m = lead * d.xi;

  const Eigen::VectorXd phi = basis.eval(x_i);
  const double s = d.xi.dot(ctx.P * ctx.b_i);
  dot.theta = ctx.gamma * (s + ctx.v * ctx.c_i * phi.dot(state.theta)) * phi;
  return dot;
}

double epsilon_diagnostic(const Eigen::VectorXd& theta, const Basis& basis,
                          const Eigen::VectorXd& x, const Uncertainty& f) {
  return theta.dot(basis.eval(x)) - f(x);
}

}  // namespace syncnet
