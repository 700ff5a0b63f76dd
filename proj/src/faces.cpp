#include "twistlink/faces.hpp"

#include <deque>

#include "union_find.hpp"

namespace twistlink {

namespace {

int corner(int crossing, int k) { return crossing * 4 + ((k % 4) + 4) % 4; }

/// Corner ids at the tail and the head for the germ (edge, side).
std::pair<int, int> germ_corners(const AbstractEdge& e, int side) {
  const int t = e.tail.crossing, ts = e.tail.slot, h = e.head.crossing, hs = e.head.slot;
  const bool left_at_head = (side == 0) == (e.parity == 0);
  return {corner(t, side == 0 ? ts : ts - 1), corner(h, left_at_head ? hs - 1 : hs)};
}

}  // namespace

FaceSet faces(const AbstractLink& a) {
  FaceSet fs;
  // Incidences per corner: (edge, side, at_head).
  struct Inc {
    int edge, side;
    bool at_head;
  };
  std::vector<std::vector<Inc>> at(a.crossings.size() * 4);
  for (int i = 0; i < static_cast<int>(a.edges.size()); ++i) {
    const auto& e = a.edges[i];
    if (e.is_loop()) continue;
    for (int side = 0; side < 2; ++side) {
      auto [ct, ch] = germ_corners(e, side);
      at[ct].push_back({i, side, false});
      at[ch].push_back({i, side, true});
    }
  }

  for (int i = 0; i < static_cast<int>(a.edges.size()); ++i) {
    const auto& e = a.edges[i];
    if (e.is_loop()) {
      if (e.parity == 0) {
        for (int side = 0; side < 2; ++side) {
          fs.face_of[{i, side}] = static_cast<int>(fs.faces.size());
          fs.faces.push_back({{i, side, true}});
        }
      } else {
        fs.face_of[{i, 0}] = fs.face_of[{i, 1}] = static_cast<int>(fs.faces.size());
        fs.faces.push_back({{i, 0, true}, {i, 1, true}});
      }
      continue;
    }
    for (int side = 0; side < 2; ++side) {
      if (fs.face_of.count({i, side})) continue;
      const int id = static_cast<int>(fs.faces.size());
      std::vector<FaceGerm> cycle;
      int edge = i, s = side;
      bool forward = true;
      while (!fs.face_of.count({edge, s})) {
        fs.face_of[{edge, s}] = id;
        cycle.push_back({edge, s, forward});
        auto [ct, ch] = germ_corners(a.edges[edge], s);
        const int c = forward ? ch : ct;
        const bool arrived_at_head = forward;
        // Leave the corner through its other incidence.
        const auto& inc = at[c];
        const Inc* next = nullptr;
        for (const auto& x : inc) {
          if (x.edge == edge && x.side == s && x.at_head == arrived_at_head) continue;
          next = &x;
        }
        edge = next->edge;
        s = next->side;
        forward = !next->at_head;
      }
      fs.faces.push_back(std::move(cycle));
    }
  }
  return fs;
}

std::optional<std::vector<int>> two_colorable(const AbstractLink& a, const FaceSet& f) {
  std::vector<std::vector<int>> adj(f.size());
  for (int i = 0; i < static_cast<int>(a.edges.size()); ++i) {
    const int x = f.face_of.at({i, 0}), y = f.face_of.at({i, 1});
    if (x == y) return std::nullopt;
    adj[x].push_back(y);
    adj[y].push_back(x);
  }
  std::vector<int> color(f.size(), -1);
  for (int s = 0; s < static_cast<int>(f.size()); ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int v : adj[u]) {
        if (color[v] < 0) {
          color[v] = color[u] ^ 1;
          queue.push_back(v);
        } else if (color[v] == color[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

std::optional<std::vector<int>> two_colorable(const AbstractLink& a) {
  return two_colorable(a, faces(a));
}

CarrierSummary carrier(const AbstractLink& a) {
  const int nc = static_cast<int>(a.crossings.size());
  const int ne = static_cast<int>(a.edges.size());
  // Nodes: crossings, then one per loop edge.
  detail::UnionFind uf(nc + ne);
  auto node_of_edge = [&](int i) {
    return a.edges[i].is_loop() ? nc + i : a.edges[i].tail.crossing;
  };
  for (int i = 0; i < ne; ++i)
    if (!a.edges[i].is_loop()) uf.unite(a.edges[i].tail.crossing, a.edges[i].head.crossing);

  std::map<int, int> comp_index;
  for (int i = 0; i < ne; ++i)
    comp_index.emplace(uf.find(node_of_edge(i)), static_cast<int>(comp_index.size()));
  // Crossings with no edges cannot exist in a consistent link, but keep the
  // numbering total anyway.
  for (int c = 0; c < nc; ++c) comp_index.emplace(uf.find(c), static_cast<int>(comp_index.size()));

  CarrierSummary out;
  out.components.resize(comp_index.size());
  for (int c = 0; c < nc; ++c) out.components[comp_index[uf.find(c)]].vertices++;
  for (int i = 0; i < ne; ++i) {
    auto& comp = out.components[comp_index[uf.find(node_of_edge(i))]];
    comp.edges++;
    if (a.edges[i].is_loop()) {
      comp.vertices++;
      if (a.edges[i].parity) comp.orientable = false;
    }
  }
  auto fs = faces(a);
  for (const auto& face : fs.faces)
    out.components[comp_index[uf.find(node_of_edge(face.front().edge))]].faces++;

  // Orientation potentials on crossings: parity(e) = o(tail) xor o(head).
  std::vector<int> pot(nc, -1);
  std::vector<std::vector<std::pair<int, int>>> adj(nc);
  for (const auto& e : a.edges) {
    if (e.is_loop()) continue;
    adj[e.tail.crossing].push_back({e.head.crossing, e.parity});
    adj[e.head.crossing].push_back({e.tail.crossing, e.parity});
  }
  for (int s = 0; s < nc; ++s) {
    if (pot[s] >= 0) continue;
    pot[s] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (auto [v, p] : adj[u]) {
        if (pot[v] < 0) {
          pot[v] = pot[u] ^ p;
          queue.push_back(v);
        } else if (pot[v] != (pot[u] ^ p)) {
          out.components[comp_index[uf.find(u)]].orientable = false;
        }
      }
    }
  }

  for (auto& comp : out.components) {
    comp.euler_genus = 2 - (comp.vertices - comp.edges + comp.faces);
    out.total_euler_genus += comp.euler_genus;
    out.orientable = out.orientable && comp.orientable;
  }
  return out;
}

}  // namespace twistlink
