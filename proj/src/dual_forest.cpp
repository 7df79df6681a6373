#include "hoctop/dual_forest.hpp"

#include <algorithm>

#include "hoctop/errors.hpp"

namespace hoctop {

DualForest::DualForest(std::size_t triangles) : nodes_(triangles + 1) {
  for (NodeId v = 0; v < nodes_.size(); ++v) nodes_[v] = ForestNode{v, 0, 0.0};
  nodes_[kExternalNode].birth = kInfiniteScale;
}

DualForest DualForest::init(const Triangulation& tri) {
  const auto triangles = tri.triangles();
  DualForest forest(triangles.size());
  for (FaceId f = 0; f < triangles.size(); ++f) {
    const auto [a, b, c] = tri.corners(f);
    if (is_acute(a, b, c)) forest.nodes_[node_of(f)].birth = circumradius(a, b, c);
  }
  return forest;
}

NodeId DualForest::find_root(NodeId v) const {
  while (nodes_[v].parent != v) v = nodes_[v].parent;
  return v;
}

NodeId DualForest::find_root(NodeId v, std::size_t& steps) const {
  steps = 0;
  while (nodes_[v].parent != v) {
    v = nodes_[v].parent;
    ++steps;
  }
  return v;
}

void DualForest::link_gray_to_white(NodeId gray, NodeId white_root) {
  expects(nodes_[gray].parent == gray && nodes_[gray].birth == 0.0, "gray node must be a gray root");
  expects(nodes_[white_root].parent == white_root && nodes_[white_root].birth > 0.0,
          "white node must be a white root");
  nodes_[gray].parent = white_root;
  nodes_[gray].birth = nodes_[white_root].birth;
  nodes_[white_root].weight += 1;
  ++links_;
}

void DualForest::link_two_gray(NodeId u, NodeId v, double alpha) {
  expects(u != v, "cannot link a node to itself");
  expects(nodes_[u].parent == u && nodes_[v].parent == v, "gray nodes must be roots");
  expects(nodes_[u].birth == 0.0 && nodes_[v].birth == 0.0, "both nodes must be gray");
  expects(nodes_[u].weight == 0 && nodes_[v].weight == 0, "gray nodes must be singletons");
  nodes_[v].parent = u;
  nodes_[u].birth = alpha;
  nodes_[v].birth = alpha;
  nodes_[u].weight = 1;
  nodes_[v].weight = 0;
  ++links_;
}

PersistencePair DualForest::merge_white(NodeId root_u, NodeId root_v, double alpha) {
  expects(root_u != root_v, "merging a tree with itself");
  ForestNode& u = nodes_[root_u];
  ForestNode& v = nodes_[root_v];
  expects(u.parent == root_u && v.parent == root_v, "merge expects roots");
  expects(u.birth > 0.0 && v.birth > 0.0, "merge expects white roots");

  const PersistencePair pair{alpha, std::min(u.birth, v.birth)};
  const double elder = std::max(u.birth, v.birth);
  if (u.weight > v.weight) {
    v.parent = root_u;
    u.weight += v.weight + 1;
    u.birth = elder;
  } else {
    u.parent = root_v;
    v.weight += u.weight + 1;
    v.birth = elder;
  }
  ++links_;
  return pair;
}

SweepEvent process_edge(DualForest& forest, const Triangulation& tri, EdgeId edge, SweepStats* stats) {
  const Edge& e = tri.edges()[edge];
  const double alpha = 0.5 * e.length;
  NodeId u = node_of(e.faces[0]);
  NodeId v = node_of(e.faces[1]);

  std::size_t steps_u = 0, steps_v = 0;
  NodeId ru = forest.find_root(u, steps_u);
  NodeId rv = forest.find_root(v, steps_v);
  if (stats) {
    stats->find_queries += 2;
    stats->max_find_steps = std::max({stats->max_find_steps, steps_u, steps_v});
  }

  SweepEvent event{SweepCase::SameRegion, edge, alpha, u, v, std::nullopt};
  if (ru == rv) {
    // nothing to link
  } else if (forest.is_gray(ru) != forest.is_gray(rv)) {
    if (!forest.is_gray(ru)) {
      std::swap(u, v);
      std::swap(ru, rv);
    }
    expects(ru == u, "a gray node is always its own root");
    forest.link_gray_to_white(u, rv);
    event = {SweepCase::GrayWhite, edge, alpha, u, v, std::nullopt};
  } else if (forest.is_gray(ru)) {
    forest.link_two_gray(ru, rv, alpha);
    event = {SweepCase::TwoGray, edge, alpha, u, v, std::nullopt};
  } else {
    const PersistencePair pair = forest.merge_white(ru, rv, alpha);
    event = {SweepCase::WhiteWhite, edge, alpha, u, v, pair};
  }
  if (stats) ++stats->case_counts[static_cast<std::size_t>(event.kind) - 1];
  return event;
}

SweepResult sweep(const Triangulation& tri, std::span<const EdgeId> order, const SweepOptions& options) {
  SweepResult result;
  result.triangles = tri.triangles().size();
  DualForest forest = DualForest::init(tri);

  std::size_t next = 0;
  while (forest.links_added() < result.triangles) {
    expects(next < order.size(), "edges exhausted before the forest became a tree");
    SweepEvent event = process_edge(forest, tri, order[next++], &result.stats);
    if (event.pair) result.pairs_in_sweep_order.push_back(*event.pair);
    if (options.record_trace) result.trace.push_back(event);
  }
  result.links = forest.links_added();
  result.edges_processed = next;
  result.diagram = Diagram(result.pairs_in_sweep_order);
  return result;
}

Diagram run_hoctop(const Cloud& cloud) {
  const Triangulation tri = triangulate(cloud);
  const std::vector<EdgeId> order = edges_sorted_desc(tri);
  return sweep(tri, order).diagram;
}

}  // namespace hoctop
