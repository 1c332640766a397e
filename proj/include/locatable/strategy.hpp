#pragma once

#include <vector>

#include "locatable/vertex_set.hpp"

namespace locatable {

/// Adaptive probing plan. Nodes are stored flat; nodes[0] is the root and a
/// branch child of kLeaf marks a located robber. An empty tree is the plan
/// for a single-vertex graph, where no probe is needed.
struct CopStrategyTree {
  static constexpr int kLeaf = -1;

  struct Branch {
    int distance = 0;
    int child = kLeaf;
    bool operator==(const Branch&) const = default;
  };

  struct Node {
    VertexSet belief;
    int probe = 0;
    /// Sorted by distance.
    std::vector<Branch> children;
    bool operator==(const Node&) const = default;
  };

  std::vector<Node> nodes;

  bool empty() const { return nodes.empty(); }
  bool operator==(const CopStrategyTree&) const = default;
};

/// A family of belief sets the robber can keep returning to: from each member,
/// against every probe, some response leaves him on a superset of a member.
struct RobberCertificate {
  std::vector<VertexSet> family;
  /// Optional certificate-label -> graph-vertex map, for certificates written
  /// against a different labelling than the graph's.
  std::vector<int> relabel;

  bool operator==(const RobberCertificate&) const = default;
};

}  // namespace locatable
