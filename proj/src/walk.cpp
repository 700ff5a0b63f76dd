#include <algorithm>
#include <map>
#include <random>

#include <array>

#include "twistlink/moves.hpp"

namespace twistlink {

namespace {

int total_bars(const PlanarDiagram& d) {
  int n = 0;
  for (const auto& [l, b] : d.bars) n += b;
  return n;
}

int vertex_cap(int requested, std::size_t a, std::size_t b) {
  return requested >= 0 ? requested : static_cast<int>(std::max(a, b)) + 1;
}

bool within_caps(const PlanarDiagram& d, const MoveSite& s, const WalkCaps& caps) {
  if (s.direction == Direction::reduce) return true;
  int dc = 0, dv = 0, db = 0;
  switch (s.tag) {
    case MoveTag::R1: dc = 1; break;
    case MoveTag::R2: dc = 2; break;
    case MoveTag::V1: dv = 1; break;
    case MoveTag::V2: dv = 2; break;
    case MoveTag::T2: db = 2; break;
    case MoveTag::T3: dv = 2; break;
    default: break;
  }
  return static_cast<int>(d.classical.size()) + dc <= caps.max_classical &&
         static_cast<int>(d.virtuals.size()) + dv <= caps.max_virtual && total_bars(d) + db <= caps.max_bars;
}

}  // namespace

PlanarDiagram random_walk(const PlanarDiagram& d, std::uint64_t seed, int steps, const WalkCaps& caps,
                          std::vector<MoveSite>* trace) {
  std::mt19937_64 rng(seed);
  PlanarDiagram cur = d;
  for (int step = 0; step < steps; ++step) {
    // Sites grouped by direction, then by tag.
    std::map<Direction, std::map<MoveTag, std::vector<MoveSite>>> by;
    for (auto& s : find_moves(cur))
      if (within_caps(cur, s, caps)) by[s.direction][s.tag].push_back(std::move(s));
    if (by.empty()) break;

    Direction dir = std::bernoulli_distribution(0.5)(rng) ? Direction::expand : Direction::reduce;
    if (!by.count(dir)) dir = by.begin()->first;
    auto& tags = by[dir];
    auto it = tags.begin();
    std::advance(it, std::uniform_int_distribution<std::size_t>(0, tags.size() - 1)(rng));
    auto& sites = it->second;
    const MoveSite& site = sites[std::uniform_int_distribution<std::size_t>(0, sites.size() - 1)(rng)];
    cur = apply_move(cur, site);
    if (trace) trace->push_back(site);
  }
  return cur;
}

namespace {

struct Visit {
  PlanarDiagram diagram;
  std::string parent;  // code of the node this one was reached from
  MoveSite site;       // applied to the parent
  int depth = 0;
};

using VisitMap = std::map<std::string, Visit>;

/// Replays a backward chain from `cur` (whose code is `code`) to the root of
/// `back`, finding at each step a site that undoes the recorded move.
void replay_backward(PlanarDiagram cur, std::string code, const VisitMap& back, std::vector<MoveSite>& out) {
  while (!back.at(code).parent.empty()) {
    const std::string& target = back.at(code).parent;
    bool found = false;
    for (const auto& s : find_moves(cur)) {
      PlanarDiagram next = apply_move(cur, s);
      if (canonical_code(next) == target) {
        out.push_back(s);
        cur = std::move(next);
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("no inverse move for " + back.at(code).site.to_string());
    code = target;
  }
}

}  // namespace

std::optional<std::vector<MoveSite>> equiv_search(const PlanarDiagram& d1, const PlanarDiagram& d2,
                                                  const SearchOptions& opts) {
  require_valid(d1);
  require_valid(d2);
  auto bars = [](const PlanarDiagram& d) { return static_cast<std::size_t>(total_bars(d)); };
  const WalkCaps caps{vertex_cap(opts.max_classical, d1.classical.size(), d2.classical.size()),
                      vertex_cap(opts.max_virtual, d1.virtuals.size(), d2.virtuals.size()),
                      vertex_cap(opts.max_bars, bars(d1), bars(d2)) + 1};

  const std::string c1 = canonical_code(d1), c2 = canonical_code(d2);
  if (c1 == c2) return std::vector<MoveSite>{};

  std::array<VisitMap, 2> seen;
  std::array<std::vector<std::string>, 2> frontier{std::vector{c1}, std::vector{c2}};
  seen[0].emplace(c1, Visit{d1, "", {}, 0});
  seen[1].emplace(c2, Visit{d2, "", {}, 0});

  for (int layers = 0; layers < opts.depth; ++layers) {
    const int side = frontier[0].size() <= frontier[1].size() ? 0 : 1;
    std::vector<std::string> next;
    std::vector<std::string> meets;
    for (const auto& code : frontier[side]) {
      const Visit node = seen[side].at(code);
      for (const auto& s : find_moves(node.diagram)) {
        if (!within_caps(node.diagram, s, caps)) continue;
        PlanarDiagram child = apply_move(node.diagram, s);
        std::string cc = canonical_code(child);
        if (seen[side].count(cc)) continue;
        seen[side].emplace(cc, Visit{std::move(child), code, s, node.depth + 1});
        if (seen[1 - side].count(cc)) meets.push_back(cc);
        next.push_back(std::move(cc));
        if (seen[side].size() > opts.max_frontier)
          throw SearchExhausted("search exhausted after " + std::to_string(seen[side].size()) + " diagrams");
      }
    }
    if (!meets.empty()) {
      const std::string meet = *std::min_element(meets.begin(), meets.end());
      // Forward half: the recorded sites, replayed from d1.
      std::vector<std::string> chain;
      for (std::string c = meet; !seen[0].at(c).parent.empty(); c = seen[0].at(c).parent) chain.push_back(c);
      std::reverse(chain.begin(), chain.end());
      std::vector<MoveSite> path;
      for (const auto& c : chain) path.push_back(seen[0].at(c).site);
      replay_backward(seen[0].at(meet).diagram, meet, seen[1], path);
      return path;
    }
    std::sort(next.begin(), next.end());
    frontier[side] = std::move(next);
  }
  return std::nullopt;
}

}  // namespace twistlink
