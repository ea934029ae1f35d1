#include "syncnet/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace syncnet {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::UnreachableAgent: return "UnreachableAgent";
    case ErrorCode::InvalidWeight: return "InvalidWeight";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::ZeroTau: return "ZeroTau";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotHurwitz: return "NotHurwitz";
    case ErrorCode::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorCode::SolveFailed: return "SolveFailed";
    case ErrorCode::SingularAm: return "SingularAm";
    case ErrorCode::NoNeighbors: return "NoNeighbors";
    case ErrorCode::SignConditionViolated: return "SignConditionViolated";
    case ErrorCode::NonFiniteState: return "NonFiniteState";
    case ErrorCode::Diverged: return "Diverged";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidScenario: return "InvalidScenario";
  }
  return "UnknownError";
}

CommGraph::CommGraph(int n_followers, std::vector<Edge> edges)
    : n_followers_(n_followers), edges_(std::move(edges)) {
  if (n_followers_ < 1) {
    throw Error(ErrorCode::InvalidScenario, "graph needs at least one follower");
  }
  validate_edges();
  in_edges_.assign(n_nodes(), {});
  for (const Edge& e : edges_) {
    in_edges_[e.to].push_back(e);
  }
  check_acyclic();
  check_reachable();
  build_topological_order();
}

void CommGraph::validate_edges() const {
  for (const Edge& e : edges_) {
    if (e.from < 0 || e.from > n_followers_ || e.to < 0 || e.to > n_followers_) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "edge endpoint outside 0.." + std::to_string(n_followers_));
    }
    if (e.from == e.to) {
      throw Error(ErrorCode::SelfLoop,
                  "self-loop at node " + std::to_string(e.from));
    }
    if (!(e.weight > 0.0)) {
      throw Error(ErrorCode::InvalidWeight,
                  "edge " + std::to_string(e.from) + "->" + std::to_string(e.to) +
                      " has non-positive weight");
    }
    if (e.to == 0) {
      throw Error(ErrorCode::InvalidScenario,
                  "leader node 0 cannot have incoming edges");
    }
  }
}

void CommGraph::check_acyclic() const {
  // Iterative DFS with colors: 0 unvisited, 1 on stack, 2 done.
  std::vector<std::vector<int>> out(n_nodes());
  for (const Edge& e : edges_) out[e.from].push_back(e.to);

  std::vector<int> color(n_nodes(), 0);
  for (int root = 0; root < n_nodes(); ++root) {
    if (color[root] != 0) continue;
    std::vector<std::pair<int, size_t>> stack{{root, 0}};
    color[root] = 1;
    while (!stack.empty()) {
      auto& [node, next] = stack.back();
      if (next < out[node].size()) {
        int child = out[node][next++];
        if (color[child] == 1) {
          throw Error(ErrorCode::CycleDetected,
                      "cycle through node " + std::to_string(child));
        }
        if (color[child] == 0) {
          color[child] = 1;
          stack.emplace_back(child, 0);
        }
      } else {
        color[node] = 2;
        stack.pop_back();
      }
    }
  }
}

void CommGraph::check_reachable() const {
  std::vector<std::vector<int>> out(n_nodes());
  for (const Edge& e : edges_) out[e.from].push_back(e.to);

  std::vector<bool> seen(n_nodes(), false);
  std::deque<int> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    int node = queue.front();
    queue.pop_front();
    for (int child : out[node]) {
      if (!seen[child]) {
        seen[child] = true;
        queue.push_back(child);
      }
    }
  }
  for (int i = 1; i <= n_followers_; ++i) {
    if (!seen[i]) {
      throw Error(ErrorCode::UnreachableAgent,
                  "no directed path from leader to agent " + std::to_string(i));
    }
  }
}

void CommGraph::build_topological_order() {
  std::vector<int> indeg(n_nodes(), 0);
  std::vector<std::vector<int>> out(n_nodes());
  for (const Edge& e : edges_) {
    out[e.from].push_back(e.to);
    ++indeg[e.to];
  }
  // Kahn's algorithm with an index-ordered frontier keeps the order
  // deterministic across runs.
  std::vector<int> frontier;
  for (int i = 0; i < n_nodes(); ++i) {
    if (indeg[i] == 0) frontier.push_back(i);
  }
  std::sort(frontier.begin(), frontier.end());
  topo_order_.reserve(n_nodes());
  while (!frontier.empty()) {
    int node = frontier.front();
    frontier.erase(frontier.begin());
    topo_order_.push_back(node);
    for (int child : out[node]) {
      if (--indeg[child] == 0) {
        frontier.insert(std::upper_bound(frontier.begin(), frontier.end(), child),
                        child);
      }
    }
  }
}

const std::vector<Edge>& CommGraph::in_edges(int i) const {
  if (i < 1 || i > n_followers_) {
    throw Error(ErrorCode::IndexOutOfRange,
                "follower index " + std::to_string(i) + " outside 1.." +
                    std::to_string(n_followers_));
  }
  return in_edges_[i];
}

double CommGraph::weight(int to, int from) const {
  for (const Edge& e : in_edges_[to]) {
    if (e.from == from) return e.weight;
  }
  return 0.0;
}

double CommGraph::in_neighbor_sum(int i) const {
  double sum = 0.0;
  for (const Edge& e : in_edges(i)) sum += e.weight;
  return sum;
}

Eigen::MatrixXd CommGraph::laplacian() const {
  const int m = n_nodes();
  Eigen::MatrixXd adj = Eigen::MatrixXd::Zero(m, m);
  for (const Edge& e : edges_) adj(e.to, e.from) = e.weight;
  Eigen::MatrixXd lap = -adj;
  for (int i = 0; i < m; ++i) lap(i, i) = adj.row(i).sum();
  return lap;
}

}  // namespace syncnet
