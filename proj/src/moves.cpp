#include "twistlink/moves.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "local_edit.hpp"
#include "planar_index.hpp"

namespace twistlink {

using detail::Editor;
using detail::PlanarIndex;
using detail::Port;

namespace {

const char* const kTagNames[] = {"R1", "R2", "R3", "V1", "V2", "V3", "V4", "T1", "T2", "T3"};

bool is_odd(int slot) { return slot % 2 != 0; }

/// Faces of the planar map as dart cycles.
std::vector<std::vector<int>> face_cycles(const PlanarIndex& idx) {
  int n = 0;
  auto face = idx.face_of_darts(&n);
  std::vector<std::vector<int>> cycles(n);
  std::vector<bool> seen(face.size(), false);
  for (int d = 0; d < static_cast<int>(face.size()); ++d) {
    if (seen[d]) continue;
    for (int x = d; !seen[x]; x = idx.face_next(x)) {
      seen[x] = true;
      cycles[face[d]].push_back(x);
    }
  }
  return cycles;
}

struct Triangle {
  std::array<Port, 3> darts;  // corner i sits at darts[i]
  std::array<std::string, 3> arcs;  // arc i joins corner i to corner i+1
};

/// Every label of a crossing-carrying arc and every loop, sorted.
std::vector<std::string> all_arcs(const PlanarDiagram& d, const PlanarIndex& idx) {
  std::vector<std::string> out;
  for (const auto& [label, p] : idx.tails()) out.push_back(label);
  for (const auto& l : d.loops) out.push_back(l);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> sorted(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}

void find_reductions(const PlanarDiagram& d, const PlanarIndex& idx, std::vector<MoveSite>& out) {
  auto id = [&](int v) { return idx.vertex(v).id; };
  std::set<int> curled;  // a figure-eight vertex has two monogons but one move
  for (const auto& cyc : face_cycles(idx)) {
    if (cyc.size() == 1) {
      Port p = idx.port(cyc[0]);
      const std::string& arc = idx.end(p).edge;
      if (d.bar_count(arc) != 0 || !curled.insert(p.vertex).second) continue;
      out.push_back({idx.is_classical(p.vertex) ? MoveTag::R1 : MoveTag::V1, Direction::reduce,
                     {id(p.vertex), arc}, {}});
    } else if (cyc.size() == 2) {
      Port p = idx.port(cyc[0]), q = idx.port(cyc[1]);
      if (p.vertex == q.vertex) continue;
      if (idx.is_classical(p.vertex) != idx.is_classical(q.vertex)) continue;
      const std::string& alpha = idx.end(p).edge;
      const std::string& beta = idx.end(q).edge;
      if (alpha == beta || d.bar_count(alpha) || d.bar_count(beta)) continue;
      const bool classical = idx.is_classical(p.vertex);
      if (classical) {
        // The strand along alpha must pass on the same level at both ends.
        Port far = idx.across(p);
        if (is_odd(p.slot) != is_odd(far.slot)) continue;
      }
      auto verts = sorted({id(p.vertex), id(q.vertex)});
      auto arcs = sorted({alpha, beta});
      out.push_back({classical ? MoveTag::R2 : MoveTag::V2, Direction::reduce,
                     {verts[0], verts[1], arcs[0], arcs[1]}, {}});
    } else if (cyc.size() == 3) {
      std::array<Port, 3> darts{idx.port(cyc[0]), idx.port(cyc[1]), idx.port(cyc[2])};
      if (darts[0].vertex == darts[1].vertex || darts[1].vertex == darts[2].vertex ||
          darts[0].vertex == darts[2].vertex)
        continue;
      std::vector<std::string> arcs;
      bool bare = true;
      for (const auto& p : darts) {
        arcs.push_back(idx.end(p).edge);
        bare = bare && d.bar_count(arcs.back()) == 0;
      }
      if (!bare) continue;
      int classical = 0;
      for (const auto& p : darts) classical += idx.is_classical(p.vertex);
      MoveTag tag;
      if (classical == 3) {
        // Arc i lies on strand i. Corner i+1 is where strands i and i+1 cross;
        // arc i enters it at slot darts[i+1].slot - 1. Count how often each
        // strand is on top: a cyclic pattern has every strand on top once.
        std::array<int, 3> over{};
        for (int i = 0; i < 3; ++i) {
          const Port c = darts[(i + 1) % 3];
          over[is_odd(c.slot - 1 + 4) ? i : (i + 1) % 3]++;
        }
        if (over[0] == 1 && over[1] == 1 && over[2] == 1) continue;
        tag = MoveTag::R3;
      } else if (classical == 0) {
        tag = MoveTag::V3;
      } else if (classical == 1) {
        tag = MoveTag::V4;
      } else {
        continue;  // two classical and one virtual: forbidden
      }
      auto verts = sorted({id(darts[0].vertex), id(darts[1].vertex), id(darts[2].vertex)});
      arcs = sorted(arcs);
      out.push_back({tag, Direction::reduce, {verts[0], verts[1], verts[2], arcs[0], arcs[1], arcs[2]}, {}});
    }
  }
}

void find_bar_moves(const PlanarDiagram& d, const PlanarIndex& idx, std::vector<MoveSite>& out) {
  for (int v = 0; v < idx.vertex_count(); ++v) {
    if (idx.is_classical(v)) continue;
    const auto& vx = idx.vertex(v);
    for (int i = 0; i < 2; ++i) {
      const std::string& p = vx.slots[i].edge;
      const std::string& q = vx.slots[i + 2].edge;
      if (p == q) continue;
      if (d.bar_count(p) > 0) out.push_back({MoveTag::T1, Direction::expand, {vx.id, p}, {}});
      if (d.bar_count(q) > 0) out.push_back({MoveTag::T1, Direction::reduce, {vx.id, q}, {}});
    }
  }
  for (const auto& arc : all_arcs(d, idx)) {
    out.push_back({MoveTag::T2, Direction::expand, {arc}, {}});
    if (d.bar_count(arc) >= 2) out.push_back({MoveTag::T2, Direction::reduce, {arc}, {}});
  }
}

void find_t3(const PlanarDiagram& d, const PlanarIndex& idx, std::vector<MoveSite>& out) {
  int nfaces = 0;
  auto face = idx.face_of_darts(&nfaces);
  std::vector<int> face_size(nfaces, 0);
  for (int f : face) face_size[f]++;

  for (int v = 0; v < idx.vertex_count(); ++v) {
    if (!idx.is_classical(v)) continue;
    const auto& x = idx.vertex(v);
    std::map<std::string, int> ends;
    for (const auto& e : x.slots) ends[e.edge]++;
    bool enough = true;
    for (const auto& [label, n] : ends) enough = enough && d.bar_count(label) >= n;
    if (enough)
      for (int axis = 0; axis < 2; ++axis) out.push_back({MoveTag::T3, Direction::expand, {x.id}, {axis}});

    // Bigons against two distinct virtual crossings on opposite sides.
    for (int q = 0; q < 2; ++q) {
      auto bigon_partner = [&](int k) -> int {
        const int dart = idx.dart({v, (k + 1) % 4});
        if (face_size[face[dart]] != 2) return -1;
        Port far = idx.port(idx.face_next(dart));
        if (far.vertex == v || idx.is_classical(far.vertex)) return -1;
        return far.vertex;
      };
      const int va = bigon_partner(q), vb = bigon_partner(q + 2);
      if (va < 0 || vb < 0 || va == vb) continue;
      bool bare = true;
      for (const auto& e : x.slots) bare = bare && d.bar_count(e.edge) == 0;
      if (!bare) continue;
      out.push_back({MoveTag::T3, Direction::reduce, {x.id, idx.vertex(va).id, idx.vertex(vb).id}, {q}});
    }
  }
}

void find_expansions(const PlanarDiagram& d, const PlanarIndex& idx, const std::set<MoveTag>& tags,
                     std::vector<MoveSite>& out) {
  auto want = [&](MoveTag t) { return tags.empty() || tags.count(t); };
  const auto arcs = all_arcs(d, idx);
  for (const auto& e : arcs) {
    const bool loop = !idx.has_edge(e);
    const int max_pos = loop ? 0 : d.bar_count(e);
    for (int side = 0; side < 2; ++side)
      for (int pos = 0; pos <= max_pos; ++pos) {
        if (want(MoveTag::V1)) out.push_back({MoveTag::V1, Direction::expand, {e}, {side, pos}});
        if (want(MoveTag::R1))
          for (int under = 0; under < 2; ++under)
            out.push_back({MoveTag::R1, Direction::expand, {e}, {side, under, pos}});
      }
  }
  if (!want(MoveTag::R2) && !want(MoveTag::V2)) return;

  int nfaces = 0;
  auto face = idx.face_of_darts(&nfaces);
  int ncomp = 0;
  auto comp = idx.vertex_components(&ncomp);
  // Face on a side of an arc (0 left, 1 right) and its component; loops
  // get unique negative ids.
  auto side_face = [&](const std::string& e, int side) {
    return side == 0 ? face[idx.dart(idx.head(e))] : face[idx.dart(idx.tail(e))];
  };
  for (size_t i = 0; i < arcs.size(); ++i) {
    for (size_t j = i; j < arcs.size(); ++j) {
      const auto &e = arcs[i], &f = arcs[j];
      const bool el = !idx.has_edge(e), fl = !idx.has_edge(f);
      const bool self = i == j;
      const bool same_component = !el && !fl && comp[idx.tail(e).vertex] == comp[idx.tail(f).vertex];
      for (int es = 0; es < 2; ++es)
        for (int fs = 0; fs < 2; ++fs) {
          if (same_component && side_face(e, es) != side_face(f, fs)) continue;
          if (self && el && es != fs) continue;  // a loop separates its two sides
          // Two stretches of one arc: pe bars before the finger, pf before
          // the crossed stretch.
          const int pe_max = el ? 0 : d.bar_count(e);
          for (int pe = 0; pe <= pe_max; ++pe)
            for (int pf = self ? pe : 0; pf <= (fl && !self ? 0 : d.bar_count(f)); ++pf) {
              if (want(MoveTag::V2)) out.push_back({MoveTag::V2, Direction::expand, {e, f}, {es, fs, pe, pf}});
              if (want(MoveTag::R2))
                for (int over = 0; over < 2; ++over)
                  out.push_back({MoveTag::R2, Direction::expand, {e, f}, {es, fs, over, pe, pf}});
            }
        }
    }
  }
}

// ---------------------------------------------------------------------------
// Rewrites

/// Ends listed counterclockwise at the compass points E, N, W, S.
using Compass = std::array<End, 4>;

void expand_curl(Editor& ed, const MoveSite& s) {
  const std::string& e = s.anchors[0];
  const int side = s.params[0];
  const bool classical = s.tag == MoveTag::R1;
  const int under = classical ? s.params[1] : 0;
  const int pos = s.params[classical ? 2 : 1];

  const std::string curl = ed.fresh_label();
  std::string rest;
  if (ed.is_loop(e)) {
    ed.remove_loop(e);
    rest = e;
  } else {
    rest = ed.fresh_label();
    ed.split_bars(e, rest, pos);
    ed.rename_end(e, false, rest);
  }
  Compass c;
  if (side == 0) {
    c = {End{curl, true}, End{curl, false}, End{e, false}, End{rest, true}};
  } else {
    c = {End{curl, true}, End{rest, true}, End{e, false}, End{curl, false}};
  }
  if (classical) {
    const int under_in = under == 0 ? 2 : (side == 0 ? 1 : 3);
    ed.add_classical(ed.fresh_vertex_id(true), c, under_in);
  } else {
    ed.add_virtual(ed.fresh_vertex_id(false), c);
  }
}

void expand_bigon(Editor& ed, const MoveSite& s) {
  const std::string e = s.anchors[0];
  std::string f = s.anchors[1];
  const bool classical = s.tag == MoveTag::R2;
  const int es = s.params[0], fs = s.params[1];
  const int over = classical ? s.params[2] : 0;
  const int pe = s.params[classical ? 3 : 2], pf = s.params[classical ? 4 : 3];

  const int sf = fs == 0 ? 1 : -1;  // the face lies north of f
  const int te = es == 0 ? 1 : -1;
  const int de = -sf * te;          // e's travel direction along the x axis
  const int toward_face = sf > 0 ? 1 : 3, away = sf > 0 ? 3 : 1;

  const std::string finger = ed.fresh_label();
  const std::string fmid = ed.fresh_label();
  std::string e2, f2;
  if (e == f) {
    // One arc crossing itself: e, finger, e2 = f, fmid, f2 in travel order.
    e2 = ed.fresh_label();
    f = e2;
    if (ed.is_loop(e)) {
      ed.remove_loop(e);
      ed.split_bars(e, e2, ed.bars(e) - pf);
      f2 = e;
    } else {
      f2 = ed.fresh_label();
      ed.split_bars(e, f2, pf);
      ed.split_bars(e, e2, pe);
      ed.rename_end(e, false, f2);
    }
  } else if (ed.is_loop(e)) {
    ed.remove_loop(e);
    e2 = e;
  } else {
    e2 = ed.fresh_label();
    ed.split_bars(e, e2, pe);
    ed.rename_end(e, false, e2);
  }
  if (ed.is_loop(f)) {
    ed.remove_loop(f);
    f2 = f;
  } else if (f != e2) {
    f2 = ed.fresh_label();
    ed.split_bars(f, f2, pf);
    ed.rename_end(f, false, f2);
  }

  // u holds e's descent, w its return; f meets the vertex at x = -1 first.
  const bool u_first = de > 0;
  Compass u, w;
  u[toward_face] = {e, false};
  u[away] = {finger, true};
  u[2] = {u_first ? f : fmid, false};
  u[0] = {u_first ? fmid : f2, true};
  w[away] = {finger, false};
  w[toward_face] = {e2, true};
  w[2] = {u_first ? fmid : f, false};
  w[0] = {u_first ? f2 : fmid, true};
  if (classical) {
    ed.add_classical(ed.fresh_vertex_id(true), u, over == 0 ? 2 : toward_face);
    ed.add_classical(ed.fresh_vertex_id(true), w, over == 0 ? 2 : away);
  } else {
    ed.add_virtual(ed.fresh_vertex_id(false), u);
    ed.add_virtual(ed.fresh_vertex_id(false), w);
  }
}

void apply_triangle(Editor& ed, const PlanarDiagram& d, const MoveSite& s) {
  PlanarIndex idx(d);
  const std::vector<std::string> verts(s.anchors.begin(), s.anchors.begin() + 3);
  for (const auto& cyc : face_cycles(idx)) {
    if (cyc.size() != 3) continue;
    std::array<Port, 3> darts{idx.port(cyc[0]), idx.port(cyc[1]), idx.port(cyc[2])};
    std::vector<std::string> ids, arcs;
    for (const auto& p : darts) {
      ids.push_back(idx.vertex(p.vertex).id);
      arcs.push_back(idx.end(p).edge);
    }
    if (sorted(ids) != verts || sorted(arcs) != std::vector<std::string>(s.anchors.begin() + 3, s.anchors.end()))
      continue;
    // Arc i runs between (v, pv) = darts[i] and (w, pw) = (darts[i+1], slot - 1).
    std::map<std::pair<std::string, int>, std::string> assign;
    auto old_label = [&](const std::string& id, int slot) {
      return idx.vertex(idx.vertex_index(id)).slots[slot % 4].edge;
    };
    for (int i = 0; i < 3; ++i) {
      const std::string& v = ids[i];
      const int pv = darts[i].slot;
      const std::string& w = ids[(i + 1) % 3];
      const int pw = (darts[(i + 1) % 3].slot + 3) % 4;
      const std::string& arc = arcs[i];
      assign[{w, pw}] = old_label(v, pv + 2);
      assign[{v, pv}] = old_label(w, pw + 2);
      assign[{v, (pv + 2) % 4}] = arc;
      assign[{w, (pw + 2) % 4}] = arc;
    }
    for (const auto& [key, label] : assign) ed.set_label(key.first, key.second, label);
    return;
  }
  throw StaleSite("triangle not found");
}

void t3_expand(Editor& ed, const MoveSite& s) {
  const std::string xid = s.anchors[0];
  const int q = s.params[0];
  const PlanarVertex x = *ed.vertex(xid);
  auto partner = [&](int k) { return ((k - q) % 2 == 0) ? (k + 1) % 4 : (k + 3) % 4; };

  for (const auto& e : x.slots) ed.add_bars(e.edge, -1);
  std::array<std::string, 4> inner;
  for (auto& l : inner) l = ed.fresh_label();

  // X' keeps the port positions; port k leads through a virtual crossing to
  // the arc that sat at partner(k).
  Compass xp;
  int under_in = -1;
  for (int k = 0; k < 4; ++k) {
    const bool out = x.slots[partner(k)].out;
    xp[k] = {inner[k], out};
    const bool was_over = is_odd(partner(k));
    if (was_over && !out) under_in = k;
  }
  ed.remove_vertex(xid);
  ed.add_classical(xid, xp, under_in);

  for (int pair = 0; pair < 2; ++pair) {
    const int a = (q + 2 * pair) % 4, b = (a + 1) % 4;
    // Counterclockwise: outer b, inner b, inner a, outer a.
    Compass v{x.slots[b], End{inner[b], !xp[b].out}, End{inner[a], !xp[a].out}, x.slots[a]};
    ed.add_virtual(ed.fresh_vertex_id(false), v);
  }
}

void t3_reduce(Editor& ed, const PlanarDiagram& d, const MoveSite& s) {
  PlanarIndex idx(d);
  const std::string xid = s.anchors[0];
  const int q = s.params[0];
  const int xv = idx.vertex_index(xid);
  const PlanarVertex xp = idx.vertex(xv);
  auto partner = [&](int k) { return ((k - q) % 2 == 0) ? (k + 1) % 4 : (k + 3) % 4; };

  // Outer continuation of the strand leaving X' at port k.
  std::array<End, 4> outer;
  for (int k = 0; k < 4; ++k) {
    Port far = idx.across({xv, k});
    outer[k] = idx.vertex(far.vertex).slots[(far.slot + 2) % 4];
  }
  Compass x;
  int under_in = -1;
  for (int m = 0; m < 4; ++m) {
    x[m] = outer[partner(m)];
    const bool under = is_odd(partner(m));  // over at X' becomes under at X
    if (under && !x[m].out) under_in = m;
  }
  ed.remove_vertex(s.anchors[1]);
  ed.remove_vertex(s.anchors[2]);
  ed.remove_vertex(xid);
  for (const auto& e : xp.slots) ed.forget_bars(e.edge);
  ed.add_classical(xid, x, under_in);
  for (const auto& e : x) ed.add_bars(e.edge, 1);
}

}  // namespace

std::string to_string(MoveTag t) { return kTagNames[static_cast<int>(t)]; }
std::string to_string(Direction d) { return d == Direction::expand ? "expand" : "reduce"; }

MoveTag parse_move_tag(std::string_view s) {
  for (int i = 0; i < 10; ++i)
    if (s == kTagNames[i]) return static_cast<MoveTag>(i);
  throw std::invalid_argument("unknown move tag '" + std::string(s) + "'");
}

std::string MoveSite::to_string() const {
  std::string out = twistlink::to_string(tag) + " " + twistlink::to_string(direction);
  for (const auto& a : anchors) out += " " + a;
  if (!params.empty()) {
    out += " :";
    for (int p : params) out += " " + std::to_string(p);
  }
  return out;
}

MoveSite MoveSite::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string tag, dir, tok;
  if (!(in >> tag >> dir)) throw std::invalid_argument("move site needs a tag and a direction");
  MoveSite s;
  s.tag = parse_move_tag(tag);
  if (dir == "expand") {
    s.direction = Direction::expand;
  } else if (dir == "reduce") {
    s.direction = Direction::reduce;
  } else {
    throw std::invalid_argument("direction must be 'expand' or 'reduce'");
  }
  bool params = false;
  while (in >> tok) {
    if (tok == ":") {
      params = true;
    } else if (params) {
      try {
        s.params.push_back(std::stoi(tok));
      } catch (const std::exception&) {
        throw std::invalid_argument("bad move parameter '" + tok + "'");
      }
    } else {
      s.anchors.push_back(tok);
    }
  }
  return s;
}

std::vector<MoveSite> find_moves(const PlanarDiagram& d, const std::set<MoveTag>& tags) {
  require_valid(d);
  PlanarIndex idx(d);
  std::vector<MoveSite> all;
  find_reductions(d, idx, all);
  find_bar_moves(d, idx, all);
  find_t3(d, idx, all);
  find_expansions(d, idx, tags, all);
  std::vector<MoveSite> out;
  for (auto& s : all)
    if (tags.empty() || tags.count(s.tag)) out.push_back(std::move(s));
  std::sort(out.begin(), out.end(), [](const MoveSite& a, const MoveSite& b) { return a.to_string() < b.to_string(); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PlanarDiagram apply_move(const PlanarDiagram& d, const MoveSite& site) {
  auto sites = find_moves(d, {site.tag});
  if (std::find(sites.begin(), sites.end(), site) == sites.end())
    throw StaleSite("move site not applicable: " + site.to_string());

  Editor ed(d);
  const bool expand = site.direction == Direction::expand;
  switch (site.tag) {
    case MoveTag::R1:
    case MoveTag::V1:
      if (expand) {
        expand_curl(ed, site);
      } else {
        ed.splice(site.anchors[0]);
      }
      break;
    case MoveTag::R2:
    case MoveTag::V2:
      if (expand) {
        expand_bigon(ed, site);
      } else {
        ed.splice(site.anchors[0]);
        ed.splice(site.anchors[1]);
      }
      break;
    case MoveTag::R3:
    case MoveTag::V3:
    case MoveTag::V4:
      apply_triangle(ed, d, site);
      break;
    case MoveTag::T1: {
      const PlanarVertex& v = *ed.vertex(site.anchors[0]);
      const std::string& arc = site.anchors[1];
      for (int i = 0; i < 4; ++i) {
        if (v.slots[i].edge != arc || v.slots[i].out == expand) continue;
        const std::string other = v.slots[(i + 2) % 4].edge;
        ed.add_bars(arc, -1);
        ed.add_bars(other, 1);
        break;
      }
      break;
    }
    case MoveTag::T2:
      ed.add_bars(site.anchors[0], expand ? 2 : -2);
      break;
    case MoveTag::T3:
      if (expand) {
        t3_expand(ed, site);
      } else {
        t3_reduce(ed, d, site);
      }
      break;
  }
  PlanarDiagram out = ed.result();
  auto report = validate(out);
  if (!report.valid())
    throw std::logic_error("move " + site.to_string() + " produced an invalid diagram: " +
                           report.violations.front().message);
  return out;
}

}  // namespace twistlink
