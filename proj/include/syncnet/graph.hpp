#ifndef SYNCNET_GRAPH_HPP
#define SYNCNET_GRAPH_HPP

#include <vector>

#include <Eigen/Dense>

#include "syncnet/errors.hpp"

namespace syncnet {

struct Edge {
  int from = 0;       // source node (0 = leader / reference)
  int to = 0;         // destination follower
  double weight = 1.0;
};

// Leader-rooted directed communication topology. Node 0 is always the
// reference model; followers are 1..N. Construction validates that the
// graph is acyclic, every follower is reachable from node 0, all weights
// are strictly positive and there are no self-loops. Immutable afterwards.
class CommGraph {
 public:
  CommGraph(int n_followers, std::vector<Edge> edges);

  int n_followers() const { return n_followers_; }
  int n_nodes() const { return n_followers_ + 1; }
  const std::vector<Edge>& edges() const { return edges_; }

  // In-edges of follower i (1..N), each pointing at its parent j.
  const std::vector<Edge>& in_edges(int i) const;

  // a_ij adjacency weight of edge j -> i, 0 when absent.
  double weight(int to, int from) const;

  // Sum of incoming weights of follower i (leader counted when connected).
  double in_neighbor_sum(int i) const;

  // L = D - A over all N+1 nodes, D = diag(row sums of A).
  Eigen::MatrixXd laplacian() const;

  // Node ordering with every parent before its children; starts at node 0.
  const std::vector<int>& topological_order() const { return topo_order_; }

 private:
  int n_followers_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Edge>> in_edges_;   // indexed by destination node
  std::vector<int> topo_order_;

  void validate_edges() const;
  void check_acyclic() const;
  void check_reachable() const;
  void build_topological_order();
};

inline CommGraph build_graph(int n_followers, std::vector<Edge> edges) {
  return CommGraph(n_followers, std::move(edges));
}

}  // namespace syncnet

#endif  // SYNCNET_GRAPH_HPP
