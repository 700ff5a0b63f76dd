#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "planar_index.hpp"
#include "twistlink/moves.hpp"

namespace twistlink {

namespace {

/// Port graph shared by both code flavours: `far(v, s)` is the port across
/// the arc at (v, s) and `label(v)` / `arc(v, s)` describe what the code
/// records about a vertex and an arc end.
struct PortGraph {
  int n = 0;
  std::function<std::pair<int, int>(int, int)> far;
  std::function<std::string(int)> label;
  std::function<std::string(int, int)> arc;
};

std::string code_from(const PortGraph& g, int start, std::vector<int>& order) {
  std::vector<int> num(g.n, -1);
  order.assign(1, start);
  num[start] = 0;
  std::string code;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const int v = order[i];
    code += g.label(v) + "[";
    for (int s = 0; s < 4; ++s) {
      auto [w, t] = g.far(v, s);
      if (num[w] < 0) {
        num[w] = static_cast<int>(order.size());
        order.push_back(w);
      }
      code += std::to_string(num[w]) + "." + std::to_string(t) + g.arc(v, s) + (s < 3 ? "," : "");
    }
    code += "]";
  }
  return code;
}

std::string graph_code(const PortGraph& g, std::vector<std::string> loop_codes) {
  std::vector<bool> done(g.n, false);
  std::vector<std::string> comps;
  for (int v = 0; v < g.n; ++v) {
    if (done[v]) continue;
    std::vector<int> order;
    std::string best = code_from(g, v, order);
    for (int w : order) done[w] = true;
    const std::vector<int> members = order;
    for (int w : members) {
      std::string c = code_from(g, w, order);
      if (c < best) best = std::move(c);
    }
    comps.push_back(std::move(best));
  }
  std::sort(comps.begin(), comps.end());
  std::sort(loop_codes.begin(), loop_codes.end());
  std::string out = std::to_string(g.n) + ";" + std::to_string(loop_codes.size()) + ";";
  for (const auto& l : loop_codes) out += "O" + l + ";";
  for (const auto& c : comps) out += c + ";";
  return out;
}

}  // namespace

std::string canonical_code(const AbstractLink& a) {
  if (a.crossings.size() > kCanonicalCrossingCap)
    throw SizeCapExceeded("size cap exceeded: " + std::to_string(a.crossings.size()) + " crossings, at most " +
                          std::to_string(kCanonicalCrossingCap) + " allowed");
  PortGraph g;
  g.n = static_cast<int>(a.crossings.size());
  std::vector<std::array<std::pair<int, int>, 4>> far(g.n);
  for (const auto& e : a.edges) {
    if (e.is_loop()) continue;
    far[e.tail.crossing][e.tail.slot] = {e.head.crossing, e.head.slot};
    far[e.head.crossing][e.head.slot] = {e.tail.crossing, e.tail.slot};
  }
  g.far = [&](int v, int s) { return far[v][s]; };
  g.label = [&](int v) { return std::string(a.crossings[v].sign > 0 ? "+" : "-"); };
  g.arc = [&](int v, int s) {
    const auto& e = a.edges[a.crossings[v].edge[s]];
    return std::string(e.parity ? "'" : "");
  };
  std::vector<std::string> loops;
  for (const auto& e : a.edges)
    if (e.is_loop()) loops.push_back(std::to_string(e.parity));
  return graph_code(g, loops);
}

std::string canonical_code(const PlanarDiagram& d) {
  detail::PlanarIndex idx(d);
  PortGraph g;
  g.n = idx.vertex_count();
  g.far = [&](int v, int s) {
    auto p = idx.across({v, s});
    return std::pair{p.vertex, p.slot};
  };
  g.label = [&](int v) {
    if (!idx.is_classical(v)) return std::string("V");
    return std::string(crossing_sign(idx.vertex(v)) > 0 ? "X+" : "X-");
  };
  g.arc = [&](int v, int s) {
    const End& e = idx.vertex(v).slots[s];
    const int b = d.bar_count(e.edge);
    return std::string(e.out ? ">" : "<") + (b ? "b" + std::to_string(b) : "");
  };
  std::vector<std::string> loops;
  for (const auto& l : d.loops) loops.push_back(std::to_string(d.bar_count(l)));
  return graph_code(g, loops);
}

}  // namespace twistlink
