#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "kcut/graph.hpp"

namespace kcut {

enum class TrimMode { Safe, Compact };

const char* to_string(TrimMode mode);
TrimMode parse_trim_mode(const std::string& text);

struct KernelOptions {
  TrimMode mode = TrimMode::Safe;
  int enum_cap = 20;
  // Compact absorption runs max-flow checks; larger parts keep trimmed
  // vertices as singletons.
  int compact_check_cap = 400;
};

enum class NodeKind { Split, Trimmed, Core, TrimmedLeaf };

struct ForestNode {
  int id = 0;
  int parent = -1;
  int depth = 0;
  NodeKind kind = NodeKind::Core;
  VertexSet vertices;  // original ids
  std::vector<int> children;
  int split = -1;  // index into Kernel::splits for Split nodes
};

struct ForestSplit {
  int id = 0;
  int node = 0;
  int depth = 0;
  Capacity value = 0;  // cut value in the certificate of the piece
  VertexSet vertices_a;  // original ids
  VertexSet vertices_b;
  VertexSet side_a;  // supernodes
  VertexSet side_b;
};

struct Kernel {
  int part_id = 0;
  Capacity theta = 0;
  TrimMode mode = TrimMode::Safe;
  VertexSet part;             // original vertices of the part
  Graph local;                // G[part] with vertices in part order
  std::vector<EdgeId> local_to_parent_edge;
  MultiGraph graph;           // supernodes; origins hold original ids
  std::vector<int> supernode_of;  // by position in part
  std::vector<ForestNode> nodes;
  std::vector<ForestSplit> splits;
  int absorbed = 0;           // trimmed vertices merged into cores (compact mode)

  int position(Vertex v) const;  // index of v in part, or -1
  int supernode(Vertex v) const { return supernode_of[position(v)]; }
  int size(int x) const { return graph.size(x); }
};

// Kernelizes G[part] at threshold theta.
Kernel kt_decompose(const Graph& g, const VertexSet& part, Capacity theta, const KernelOptions& opt = {},
                    int part_id = 0);
// Whole graph as the part.
Kernel kt_decompose(const Graph& c, Capacity theta, const KernelOptions& opt = {});

struct CutOrCertificate {
  bool certified = false;
  std::optional<CutSide> cut;  // sides in q's vertex ids, value in q
};

CutOrCertificate cut_or_certificate(const Graph& q, Capacity theta, int enum_cap = 20);

class KernelView {
 public:
  KernelView() = default;
  explicit KernelView(std::shared_ptr<const Kernel> kernel);
  KernelView(std::shared_ptr<const Kernel> kernel, VertexSet active);

  const Kernel& kernel() const { return *kernel_; }
  const std::shared_ptr<const Kernel>& kernel_ptr() const { return kernel_; }
  const VertexSet& active() const { return active_; }
  int num_active() const { return static_cast<int>(active_.size()); }
  bool is_active(int x) const;
  VertexSet vertices() const;  // original ids
  int total_size() const;
  // Capacity between side and active minus side, inside the view.
  Capacity kernel_cut_value(const VertexSet& side) const;

 private:
  std::shared_ptr<const Kernel> kernel_;
  VertexSet active_;
};

KernelView restrict_view(const KernelView& parent, const VertexSet& child_vertices);

// Cut of G[view vertices] induced by the supernode side; edges are edge ids of
// the graph the kernel was built from.
CutSide lift_border(const KernelView& view, const VertexSet& kernel_side);

struct KernelSizeReport {
  int total = 0;
  std::vector<int> per_view;
};

KernelSizeReport kernel_size_report(const std::vector<KernelView>& views);

}  // namespace kcut
