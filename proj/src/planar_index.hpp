#pragma once

// Internal port bookkeeping over a PlanarDiagram: vertex numbering
// (classical first, then virtual), arc endpoints, and the planar face
// permutation on darts.

#include <map>
#include <string>
#include <vector>

#include "twistlink/diagram.hpp"

namespace twistlink::detail {

struct Port {
  int vertex = -1;
  int slot = -1;

  friend bool operator==(const Port&, const Port&) = default;
  friend auto operator<=>(const Port&, const Port&) = default;
};

class PlanarIndex {
 public:
  /// Requires every non-loop label to occur once as tail and once as head.
  explicit PlanarIndex(const PlanarDiagram& d);

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  const PlanarVertex& vertex(int v) const { return *vertices_[v]; }
  bool is_classical(int v) const { return v < classical_count_; }
  int vertex_index(const std::string& id) const;

  const End& end(Port p) const { return vertices_[p.vertex]->slots[p.slot]; }
  Port tail(const std::string& edge) const { return tail_.at(edge); }
  Port head(const std::string& edge) const { return head_.at(edge); }
  bool has_edge(const std::string& edge) const { return tail_.count(edge) != 0; }
  /// The port at the far end of the arc attached at p.
  Port across(Port p) const;

  const std::map<std::string, Port>& tails() const { return tail_; }

  int dart(Port p) const { return p.vertex * 4 + p.slot; }
  Port port(int dart) const { return {dart / 4, dart % 4}; }
  /// Face permutation: travel along the arc, then turn to the next
  /// counterclockwise slot. The orbit of a dart is the face on the right of
  /// the arc traversed away from that dart.
  int face_next(int dart) const;

  /// Face id per dart, numbered in order of the smallest dart.
  std::vector<int> face_of_darts(int* face_count) const;
  /// Connected component id per vertex.
  std::vector<int> vertex_components(int* count) const;

 private:
  std::vector<const PlanarVertex*> vertices_;
  int classical_count_ = 0;
  std::map<std::string, int> vertex_index_;
  std::map<std::string, Port> tail_;
  std::map<std::string, Port> head_;
};

}  // namespace twistlink::detail
