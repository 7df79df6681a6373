#pragma once

// Descending sweep over Delaunay edges that tracks the regions of the plane
// outside the shrinking alpha-complex. Each triangle (and the unbounded
// region) is a node of a union-find forest; a white tree is a region whose
// enclosing contour still exists, a gray node is a triangle still filled.
// Merging two white trees kills the younger hole (elder rule).

#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "hoctop/delaunay.hpp"
#include "hoctop/diagram.hpp"

namespace hoctop {

using NodeId = std::uint32_t;

/// Birth scale of the unbounded region; compares above every finite scale.
inline constexpr double kInfiniteScale = std::numeric_limits<double>::infinity();

/// Node 0 is the unbounded region; triangle f is node f + 1.
inline constexpr NodeId kExternalNode = 0;

constexpr NodeId node_of(FaceId face) noexcept {
  return face == kExternalFace ? kExternalNode : face + 1;
}

struct ForestNode {
  NodeId parent;
  std::uint32_t weight;  // number of nodes below this one in its tree
  double birth;          // 0 while gray
};

class DualForest {
 public:
  /// Isolated gray nodes for every triangle, except acute triangles, which
  /// start white with their circumradius, and the unbounded region.
  static DualForest init(const Triangulation& tri);

  /// `triangles` gray nodes plus the unbounded region; used by tests.
  explicit DualForest(std::size_t triangles);

  std::size_t size() const noexcept { return nodes_.size(); }
  const ForestNode& node(NodeId v) const { return nodes_[v]; }
  std::size_t links_added() const noexcept { return links_; }
  bool is_gray(NodeId v) const { return nodes_[v].birth == 0.0; }

  void set_birth(NodeId v, double birth) { nodes_[v].birth = birth; }

  NodeId find_root(NodeId v) const;
  /// Same as find_root; `steps` receives the number of parent links followed.
  NodeId find_root(NodeId v, std::size_t& steps) const;

  /// Gray singleton `gray` joins the white tree rooted at `white_root`.
  void link_gray_to_white(NodeId gray, NodeId white_root);

  /// Two gray singletons form a new white tree born at `alpha`; u is the root.
  void link_two_gray(NodeId u, NodeId v, double alpha);

  /// Two distinct white roots merge at `alpha`. Returns (alpha, younger birth).
  /// The heavier root (ties: `root_v`) becomes the parent and keeps the older
  /// birth.
  PersistencePair merge_white(NodeId root_u, NodeId root_v, double alpha);

 private:
  std::vector<ForestNode> nodes_;
  std::size_t links_ = 0;
};

enum class SweepCase : std::uint8_t {
  SameRegion = 1,  // both sides already in one tree: nothing changes
  GrayWhite = 2,   // a filled triangle empties into a white region
  TwoGray = 3,     // two right triangles on a shared hypotenuse empty together
  WhiteWhite = 4,  // two white regions merge; the younger hole dies
};

struct SweepEvent {
  SweepCase kind;
  EdgeId edge;
  double alpha;
  NodeId u;  // node on faces[0] side (the gray one for GrayWhite)
  NodeId v;
  std::optional<PersistencePair> pair;
};

struct SweepStats {
  std::size_t max_find_steps = 0;
  std::size_t find_queries = 0;
  std::array<std::size_t, 4> case_counts{};
};

/// Processes one edge at scale half its length. Edges must arrive in the order
/// produced by edges_sorted_desc.
SweepEvent process_edge(DualForest& forest, const Triangulation& tri, EdgeId edge,
                        SweepStats* stats = nullptr);

struct SweepOptions {
  bool record_trace = false;
};

struct SweepResult {
  Diagram diagram;
  std::vector<PersistencePair> pairs_in_sweep_order;
  std::size_t triangles = 0;
  std::size_t links = 0;
  std::size_t edges_processed = 0;
  SweepStats stats;
  std::vector<SweepEvent> trace;
};

/// Runs the sweep until the forest is a single tree.
SweepResult sweep(const Triangulation& tri, std::span<const EdgeId> order,
                  const SweepOptions& options = {});

/// Triangulate, sort and sweep: the 1-dimensional persistence diagram of the
/// alpha-offsets of `cloud`.
Diagram run_hoctop(const Cloud& cloud);

}  // namespace hoctop
