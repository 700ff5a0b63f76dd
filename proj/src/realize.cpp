#include <algorithm>
#include <set>

#include <boost/multiprecision/cpp_int.hpp>

#include "twistlink/moves.hpp"

namespace twistlink {

namespace {

using Rational = boost::multiprecision::cpp_rational;

struct Arc {
  int edge;
  int from, to;  // point indices of the tail and head ends
  int lo() const { return std::min(from, to); }
  int hi() const { return std::max(from, to); }
  bool rightward() const { return from < to; }
};

struct Meeting {
  int p, q;  // arcs, with p's span starting left of q's
  Rational x;
};

/// Points on the baseline: crossing i owns 4i..4i+3, legs left to right are
/// slots 3, 2, 1, 0. Positions are perturbed with `spread` to break ties.
Rational position(int point, int spread) {
  if (spread == 0) return point;
  return Rational(point) + Rational(point * point, 97 * spread);
}

std::vector<Meeting> meetings(const std::vector<Arc>& arcs, int spread) {
  std::vector<Meeting> out;
  for (size_t i = 0; i < arcs.size(); ++i)
    for (size_t j = 0; j < arcs.size(); ++j) {
      const Arc &p = arcs[i], &q = arcs[j];
      if (!(p.lo() < q.lo() && q.lo() < p.hi() && p.hi() < q.hi())) continue;
      const Rational a = position(p.lo(), spread), b = position(p.hi(), spread);
      const Rational c = position(q.lo(), spread), d = position(q.hi(), spread);
      out.push_back({static_cast<int>(i), static_cast<int>(j), (c * d - a * b) / ((c + d) - (a + b))});
    }
  return out;
}

bool has_ties(const std::vector<Meeting>& ms) {
  for (size_t i = 0; i < ms.size(); ++i)
    for (size_t j = i + 1; j < ms.size(); ++j) {
      const auto &m = ms[i], &n = ms[j];
      const bool shared = m.p == n.p || m.p == n.q || m.q == n.p || m.q == n.q;
      if (shared && m.x == n.x) return true;
    }
  return false;
}

}  // namespace

PlanarDiagram realize(const AbstractLink& a) {
  PlanarDiagram d;
  std::set<std::string> labels, ids;
  for (const auto& e : a.edges) labels.insert(e.label);
  for (const auto& c : a.crossings) ids.insert(c.id);

  std::vector<Arc> arcs;
  for (int i = 0; i < static_cast<int>(a.edges.size()); ++i) {
    const auto& e = a.edges[i];
    if (e.is_loop()) {
      d.loops.push_back(e.label);
      if (e.parity) d.bars[e.label] = 1;
      continue;
    }
    arcs.push_back({i, 4 * e.tail.crossing + 3 - e.tail.slot, 4 * e.head.crossing + 3 - e.head.slot});
  }

  int spread = 0;
  std::vector<Meeting> ms = meetings(arcs, spread);
  while (has_ties(ms)) ms = meetings(arcs, ++spread);

  // Virtual crossings in a fixed order; each arc lists its meetings in travel order.
  std::vector<std::vector<int>> along(arcs.size());
  for (int k = 0; k < static_cast<int>(ms.size()); ++k) {
    along[ms[k].p].push_back(k);
    along[ms[k].q].push_back(k);
  }
  for (size_t i = 0; i < arcs.size(); ++i)
    std::sort(along[i].begin(), along[i].end(), [&](int x, int y) {
      return arcs[i].rightward() ? ms[x].x < ms[y].x : ms[x].x > ms[y].x;
    });

  auto fresh = [](std::set<std::string>& used, const std::string& base) {
    for (int k = 1;; ++k) {
      std::string s = base + std::to_string(k);
      if (used.insert(s).second) return s;
    }
  };
  std::vector<std::string> vid(ms.size());
  for (auto& v : vid) v = fresh(ids, "v");

  // Per virtual crossing: ends at the directions vP, vQ, -vP, -vQ, which
  // are counterclockwise for p left of q, both traversed left to right.
  std::vector<std::array<End, 4>> vends(ms.size());
  std::vector<std::array<End, 4>> xends(a.crossings.size());
  for (size_t i = 0; i < arcs.size(); ++i) {
    const Arc& arc = arcs[i];
    const auto& edge = a.edges[arc.edge];
    std::string label = edge.label;
    if (edge.parity) d.bars[label] = 1;
    xends[edge.tail.crossing][edge.tail.slot] = {label, true};
    for (int k : along[i]) {
      const bool is_p = ms[k].p == static_cast<int>(i);
      const int fwd = is_p ? 0 : 1;  // direction index of this arc's rightward tangent
      const int in_dir = arc.rightward() ? fwd + 2 : fwd;
      vends[k][in_dir] = {label, false};
      label = fresh(labels, edge.label + "x");
      vends[k][(in_dir + 2) % 4] = {label, true};
    }
    xends[edge.head.crossing][edge.head.slot] = {label, false};
  }

  for (size_t c = 0; c < a.crossings.size(); ++c) d.classical.push_back({a.crossings[c].id, xends[c]});
  for (size_t k = 0; k < ms.size(); ++k) {
    const auto& e = vends[k];
    for (int r = 0; r < 4; ++r) {
      if (e[r].out || e[(r + 1) % 4].out) continue;
      PlanarVertex v{vid[k], {}};
      for (int s = 0; s < 4; ++s) v.slots[s] = e[(r + s) % 4];
      d.virtuals.push_back(std::move(v));
      break;
    }
  }
  require_valid(d);
  return d;
}

}  // namespace twistlink
