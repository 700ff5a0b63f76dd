#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "twistlink/diagram.hpp"

namespace twistlink {

/// Sides of an edge as seen from its tail: left is side 0, right is side 1.
/// On an edge of odd parity the face on the left at the tail leaves on the
/// right at the head.
struct FaceGerm {
  int edge = -1;
  int side = 0;
  bool forward = true;  // traversed tail to head

  friend bool operator==(const FaceGerm&, const FaceGerm&) = default;
};

struct FaceSet {
  std::vector<std::vector<FaceGerm>> faces;
  /// (edge, tail side) -> face index.
  std::map<std::pair<int, int>, int> face_of;

  std::size_t size() const { return faces.size(); }
};

FaceSet faces(const AbstractLink& a);

/// Face colors (0/1) such that the two sides of every edge differ, or
/// nullopt when none exists.
std::optional<std::vector<int>> two_colorable(const AbstractLink& a);
std::optional<std::vector<int>> two_colorable(const AbstractLink& a, const FaceSet& f);

struct CarrierComponent {
  int vertices = 0;
  int edges = 0;
  int faces = 0;
  int euler_genus = 0;
  bool orientable = true;
};

struct CarrierSummary {
  std::vector<CarrierComponent> components;
  int total_euler_genus = 0;
  bool orientable = true;
};

/// Per connected component of the abstract link, in order of smallest edge
/// index. A loop counts as one vertex and one edge.
CarrierSummary carrier(const AbstractLink& a);

}  // namespace twistlink
