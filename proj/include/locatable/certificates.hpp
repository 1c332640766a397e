#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "locatable/errors.hpp"
#include "locatable/graph.hpp"
#include "locatable/strategy.hpp"

// Verifiers here recompute every consistent set and successor from the graph
// directly; they share nothing with the solver beyond graph-core.

namespace locatable {

class EmptyFamily : public Error {
 public:
  EmptyFamily() : Error("robber certificate has no members") {}
};

struct CopVerification {
  bool valid = false;
  /// Longest root-leaf path, i.e. the certified capture-time bound.
  int depth = 0;
  /// Distances answered along the path to the failing node.
  std::vector<int> path;
  std::string reason;
};

struct RobberVerification {
  bool valid = false;
  int member = -1;
  int probe = -1;
  std::string reason;
};

namespace detail {

struct CopChecker {
  const Graph& g;
  const CopStrategyTree& t;
  std::vector<int> path;
  CopVerification fail;
  int visits = 0;

  /// Depth of the subtree, or -1 after recording a failure.
  int check(int id, VertexSet expected) {
    if (id < 0 || id >= static_cast<int>(t.nodes.size()))
      throw MalformedTree("node index " + std::to_string(id) + " out of range");
    // A finite tree is never deeper than its node count.
    if (static_cast<int>(path.size()) > static_cast<int>(t.nodes.size()))
      throw MalformedTree("cycle in strategy tree");
    if (++visits > 50'000'000) throw MalformedTree("strategy tree too large");
    const auto& node = t.nodes[id];
    if (node.belief != expected) return failure("node belief " + to_string(node.belief) + " != " + to_string(expected));
    const int p = node.probe;
    if (p < 0 || p >= g.order()) throw MalformedTree("probe " + std::to_string(p) + " out of range");

    std::vector<int> wanted;
    for (int v : node.belief) {
      int d = g.distance(p, v);
      if (std::ranges::find(wanted, d) == wanted.end()) wanted.push_back(d);
    }
    std::ranges::sort(wanted);
    for (const auto& b : node.children)
      if (std::ranges::find(wanted, b.distance) == wanted.end())
        return failure("unexpected distance " + std::to_string(b.distance) + " at probe " + std::to_string(p));

    int depth = 0;
    for (int d : wanted) {
      const CopStrategyTree::Branch* branch = nullptr;
      int count = 0;
      for (const auto& b : node.children)
        if (b.distance == d) {
          branch = &b;
          ++count;
        }
      if (!branch) return failure("uncovered distance " + std::to_string(d) + " at probe " + std::to_string(p));
      if (count > 1) throw MalformedTree("distance " + std::to_string(d) + " listed twice");
      VertexSet c;
      for (int v : node.belief)
        if (g.distance(p, v) == d) c.insert(v);
      path.push_back(d);
      if (c.size() == 1) {
        if (branch->child != CopStrategyTree::kLeaf)
          return failure("robber already located at distance " + std::to_string(d) + " but tree continues");
        depth = std::max(depth, 1);
      } else {
        if (branch->child == CopStrategyTree::kLeaf)
          return failure("leaf at distance " + std::to_string(d) + " with " + std::to_string(c.size()) +
                         " candidates " + to_string(c));
        VertexSet m;
        for (int v : c) m |= g.closed_neighbors(v);
        m.erase(p);
        int sub = check(branch->child, m);
        if (sub < 0) return -1;
        depth = std::max(depth, 1 + sub);
      }
      path.pop_back();
    }
    return depth;
  }

  int failure(std::string why) {
    fail.valid = false;
    fail.path = path;
    fail.reason = std::move(why);
    return -1;
  }
};

}  // namespace detail

/// Checks that the tree locates the robber from full uncertainty against every
/// answer. Throws MalformedTree on dangling or cyclic links.
inline CopVerification verify_cop_strategy(const Graph& g, const CopStrategyTree& t) {
  if (t.empty()) {
    if (g.order() == 1) return {true, 0, {}, {}};
    return {false, 0, {}, "empty tree for a graph with more than one vertex"};
  }
  detail::CopChecker checker{g, t, {}, {}};
  int depth = checker.check(0, g.vertices());
  if (depth < 0) return checker.fail;
  return {true, depth, {}, {}};
}

/// Applies a certificate's relabel map (identity when absent).
inline std::vector<VertexSet> relabelled_family(const Graph& g, const RobberCertificate& c) {
  if (c.relabel.empty()) return c.family;
  for (int v : c.relabel)
    if (v < 0 || v >= g.order()) throw InvalidParameter("relabel target out of range");
  std::vector<VertexSet> out;
  for (VertexSet s : c.family) {
    VertexSet m;
    for (int v : s) {
      if (v >= static_cast<int>(c.relabel.size())) throw InvalidParameter("relabel map too short");
      m.insert(c.relabel[v]);
    }
    out.push_back(m);
  }
  return out;
}

/// Valid iff from every member, against every probe, some answer with at
/// least two consistent vertices lets the robber reach a superset of a member.
inline RobberVerification verify_robber_certificate(const Graph& g, const RobberCertificate& c) {
  if (c.family.empty()) throw EmptyFamily();
  const auto family = relabelled_family(g, c);
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (!family[i].subset_of(g.vertices()))
      return {false, static_cast<int>(i), -1, "member contains a vertex outside the graph"};
    if (family[i].size() < 2) return {false, static_cast<int>(i), -1, "member has fewer than two vertices"};
  }
  for (std::size_t i = 0; i < family.size(); ++i) {
    const VertexSet a = family[i];
    for (int p = 0; p < g.order(); ++p) {
      bool survives = false;
      for (int d = 0; d < g.order() && !survives; ++d) {
        VertexSet cset;
        for (int v : a)
          if (g.distance(p, v) == d) cset.insert(v);
        if (cset.size() < 2) continue;
        VertexSet m;
        for (int v : cset) m |= g.closed_neighbors(v);
        m.erase(p);
        for (VertexSet b : family)
          if (b.subset_of(m)) {
            survives = true;
            break;
          }
      }
      if (!survives)
        return {false, static_cast<int>(i), p, "every answer to probe " + std::to_string(p) +
                                                   " locates the robber or leaves the family"};
    }
  }
  return {true, -1, -1, {}};
}

enum class PaperCertificate { DoubleNet, K33Minus };

/// Robber families written down for the canonical double_net and k33_minus.
inline RobberCertificate paper_certificate(PaperCertificate which) {
  RobberCertificate cert;
  if (which == PaperCertificate::DoubleNet) {
    // Triangle 0,1,2; leaves[x] hang off triangle vertex x.
    const VertexSet triangle{0, 1, 2};
    const VertexSet leaves[3] = {{3, 4}, {5, 6}, {7, 8}};
    const VertexSet all = VertexSet::range(9);
    cert.family.push_back(triangle);
    // T_x: the other two triangle vertices with their leaves.
    for (int x = 0; x < 3; ++x) {
      VertexSet s;
      for (int y = 0; y < 3; ++y)
        if (y != x) s |= VertexSet::single(y) | leaves[y];
      cert.family.push_back(s);
    }
    // T_{x,y}: everything except y and the leaves of x.
    for (int x = 0; x < 3; ++x)
      for (int y = 0; y < 3; ++y)
        if (x != y) cert.family.push_back(all - VertexSet::single(y) - leaves[x]);
  } else {
    const VertexSet all = VertexSet::range(6);
    for (int z = 0; z < 6; ++z) cert.family.push_back(all - VertexSet::single(z));
    cert.family.push_back(all - VertexSet{0, 3});
  }
  return cert;
}

}  // namespace locatable
