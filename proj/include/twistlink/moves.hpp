#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "twistlink/diagram.hpp"

namespace twistlink {

enum class MoveTag { R1, R2, R3, V1, V2, V3, V4, T1, T2, T3 };
enum class Direction { expand, reduce };

std::string to_string(MoveTag t);
std::string to_string(Direction d);
MoveTag parse_move_tag(std::string_view s);

/// One applicable rewrite. Anchors are vertex identifiers and edge labels;
/// params carry sides, chirality and bar positions for expansions.
///
/// Text form: "TAG direction anchor... [: param...]", e.g. "R2 expand a c : 0 1 0 1 0".
///
/// Parameter lists by move:
///   R1 expand  [edge]          : side under pos   (side 0 = curl on the left)
///   V1 expand  [edge]          : side pos
///   R2 expand  [e f]           : e_side f_side over pos_e pos_f
///   V2 expand  [e f]           : e_side f_side pos_e pos_f
///   T1         [vertex edge]   (edge = the arc the bar leaves)
///   T2         [edge]
///   T3 expand  [vertex]        : axis
///   T3 reduce  [X' Va Vb]      : axis
/// Reductions of R1/V1/R2/V2/R3/V3/V4 anchor the vertices and inner arcs.
/// R3, V3 and V4 are their own inverses and are listed as "reduce".
struct MoveSite {
  MoveTag tag = MoveTag::R1;
  Direction direction = Direction::reduce;
  std::vector<std::string> anchors;
  std::vector<int> params;

  std::string to_string() const;
  static MoveSite parse(std::string_view text);

  friend bool operator==(const MoveSite&, const MoveSite&) = default;
  friend auto operator<=>(const MoveSite&, const MoveSite&) = default;
};

class StaleSite : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// All reduction sites and a generating family of expansion sites, sorted by
/// text form. An empty filter means every tag.
std::vector<MoveSite> find_moves(const PlanarDiagram& d, const std::set<MoveTag>& tags = {});

/// Throws StaleSite when `site` is not applicable to d.
PlanarDiagram apply_move(const PlanarDiagram& d, const MoveSite& site);

struct WalkCaps {
  int max_classical = 8;
  int max_virtual = 16;
  int max_bars = 12;
};

PlanarDiagram random_walk(const PlanarDiagram& d, std::uint64_t seed, int steps, const WalkCaps& caps = {},
                          std::vector<MoveSite>* trace = nullptr);

/// Crossings in a row, arcs as semicircles above it, one virtual crossing per
/// arc intersection and one bar on each odd edge.
PlanarDiagram realize(const AbstractLink& a);

class SizeCapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

constexpr std::size_t kCanonicalCrossingCap = 16;

/// Equal codes iff the abstract links are isomorphic. Throws SizeCapExceeded
/// above kCanonicalCrossingCap crossings.
std::string canonical_code(const AbstractLink& a);
/// Equal codes iff the planar diagrams agree up to relabeling.
std::string canonical_code(const PlanarDiagram& d);

struct SearchOptions {
  int depth = 6;
  std::size_t max_frontier = 200000;
  /// Expansion caps; negative values mean "largest endpoint plus one"
  /// (plus two for bars, which T2 adds in pairs).
  int max_classical = -1;
  int max_virtual = -1;
  int max_bars = -1;
};

class SearchExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bidirectional breadth-first search. Returns a move sequence that turns d1
/// into a diagram with the canonical code of d2, or nullopt when none exists
/// within the depth bound.
std::optional<std::vector<MoveSite>> equiv_search(const PlanarDiagram& d1, const PlanarDiagram& d2,
                                                  const SearchOptions& opts = {});

}  // namespace twistlink
