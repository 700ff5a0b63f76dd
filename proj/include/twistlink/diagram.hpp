#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace twistlink {

// Slot conventions shared by planar and abstract crossings. Slots are listed
// counterclockwise. At a classical crossing slot0 is the incoming end of the
// under-strand and slot2 its outgoing end; the over-strand uses slots 1 and 3.
// At a virtual crossing the strands are (0,2) and (1,3), slots 0 and 1 are
// incoming and slots 2 and 3 outgoing.

/// One end of a planar arc at a crossing slot. `out` marks the arc's tail.
struct End {
  std::string edge;
  bool out = false;

  friend bool operator==(const End&, const End&) = default;
};

struct PlanarVertex {
  std::string id;
  std::array<End, 4> slots;

  friend bool operator==(const PlanarVertex&, const PlanarVertex&) = default;
};

/// A twisted link diagram drawn in the plane: classical and virtual 4-valent
/// vertices with rotation, crossing-free loop components, and bar counts.
struct PlanarDiagram {
  std::vector<PlanarVertex> classical;
  std::vector<PlanarVertex> virtuals;
  std::vector<std::string> loops;
  /// Edge label -> bar count; labels without bars are absent.
  std::map<std::string, int> bars;

  int bar_count(const std::string& edge) const;
  std::size_t vertex_count() const { return classical.size() + virtuals.size(); }

  /// Same labels, same crossings and slots, same loops and bars; order of
  /// the crossing and loop lists is ignored.
  friend bool operator==(const PlanarDiagram& a, const PlanarDiagram& b);
};

class TldError : public std::runtime_error {
 public:
  TldError(int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

PlanarDiagram parse_tld(std::string_view text);
std::string serialize_tld(const PlanarDiagram& d);

struct Violation {
  std::string code;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool valid() const { return violations.empty(); }
};

ValidationReport validate(const PlanarDiagram& d);

/// Throws std::invalid_argument with the first violation when d is invalid.
void require_valid(const PlanarDiagram& d);

struct ComponentMap {
  int count = 0;
  std::map<std::string, int> component_of;  // edge label -> component index
};

/// Link components traced through classical and virtual crossings.
ComponentMap components(const PlanarDiagram& d);

// ---------------------------------------------------------------------------

struct EdgeEnd {
  int crossing = -1;
  int slot = -1;

  friend bool operator==(const EdgeEnd&, const EdgeEnd&) = default;
};

struct AbstractCrossing {
  std::string id;
  std::array<int, 4> edge{};  // edge index at each slot
  int sign = 1;
};

struct AbstractEdge {
  std::string label;
  EdgeEnd tail;  // crossing == -1 for a loop
  EdgeEnd head;
  int parity = 0;

  bool is_loop() const { return tail.crossing < 0; }
};

/// The stable core of a diagram: classical crossings joined by edges that
/// carry only bar parity.
struct AbstractLink {
  std::vector<AbstractCrossing> crossings;
  std::vector<AbstractEdge> edges;

  bool slot_is_out(int crossing, int slot) const;
  int over_in_slot(int crossing) const { return crossings[crossing].sign > 0 ? 3 : 1; }
  int over_out_slot(int crossing) const { return crossings[crossing].sign > 0 ? 1 : 3; }
  std::size_t loop_count() const;
};

/// Deletes virtual crossings, fuses the arcs they interrupt and reduces bar
/// counts to parity. Requires a structurally sound diagram; the planarity
/// check is not needed.
AbstractLink project_abstract(const PlanarDiagram& d);

/// Builds an abstract link from a TLD text containing only X, O and B lines,
/// with no planarity requirement. Bars are reduced to parity.
AbstractLink abstract_from_tld(std::string_view text);

/// Sign recomputed from the rotation: +1 iff the over-strand enters at slot3.
int crossing_sign(const PlanarVertex& v);

int writhe(const AbstractLink& a);

/// Number of link components of an abstract link.
int link_components(const AbstractLink& a);

}  // namespace twistlink
