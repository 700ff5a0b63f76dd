#include "twistlink/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "planar_index.hpp"
#include "union_find.hpp"

namespace twistlink {

namespace detail {

PlanarIndex::PlanarIndex(const PlanarDiagram& d) {
  for (const auto& v : d.classical) vertices_.push_back(&v);
  classical_count_ = static_cast<int>(vertices_.size());
  for (const auto& v : d.virtuals) vertices_.push_back(&v);
  for (int v = 0; v < vertex_count(); ++v) {
    vertex_index_[vertices_[v]->id] = v;
    for (int s = 0; s < 4; ++s) {
      const End& e = vertices_[v]->slots[s];
      auto& table = e.out ? tail_ : head_;
      if (!table.emplace(e.edge, Port{v, s}).second)
        throw std::invalid_argument("edge multiplicity: edge '" + e.edge + "'");
    }
  }
  for (const auto& [label, p] : tail_)
    if (!head_.count(label)) throw std::invalid_argument("edge multiplicity: edge '" + label + "'");
  for (const auto& [label, p] : head_)
    if (!tail_.count(label)) throw std::invalid_argument("edge multiplicity: edge '" + label + "'");
}

int PlanarIndex::vertex_index(const std::string& id) const {
  auto it = vertex_index_.find(id);
  return it == vertex_index_.end() ? -1 : it->second;
}

Port PlanarIndex::across(Port p) const {
  const End& e = end(p);
  return e.out ? head_.at(e.edge) : tail_.at(e.edge);
}

int PlanarIndex::face_next(int d) const {
  Port q = across(port(d));
  return dart({q.vertex, (q.slot + 1) % 4});
}

std::vector<int> PlanarIndex::face_of_darts(int* face_count) const {
  std::vector<int> face(vertex_count() * 4, -1);
  int n = 0;
  for (int d = 0; d < static_cast<int>(face.size()); ++d) {
    if (face[d] >= 0) continue;
    for (int x = d; face[x] < 0; x = face_next(x)) face[x] = n;
    ++n;
  }
  if (face_count) *face_count = n;
  return face;
}

std::vector<int> PlanarIndex::vertex_components(int* count) const {
  UnionFind uf(vertex_count());
  for (const auto& [label, t] : tail_) uf.unite(t.vertex, head_.at(label).vertex);
  std::vector<int> comp(vertex_count(), -1);
  std::map<int, int> ids;
  for (int v = 0; v < vertex_count(); ++v) {
    auto [it, fresh] = ids.emplace(uf.find(v), static_cast<int>(ids.size()));
    comp[v] = it->second;
  }
  if (count) *count = static_cast<int>(ids.size());
  return comp;
}

}  // namespace detail

using detail::PlanarIndex;
using detail::Port;

int PlanarDiagram::bar_count(const std::string& edge) const {
  auto it = bars.find(edge);
  return it == bars.end() ? 0 : it->second;
}

bool operator==(const PlanarDiagram& a, const PlanarDiagram& b) {
  auto by_id = [](std::vector<PlanarVertex> v) {
    std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.id < y.id; });
    return v;
  };
  auto sorted = [](std::vector<std::string> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  auto nonzero = [](const std::map<std::string, int>& m) {
    std::map<std::string, int> r;
    for (const auto& [k, c] : m)
      if (c != 0) r.emplace(k, c);
    return r;
  };
  return by_id(a.classical) == by_id(b.classical) && by_id(a.virtuals) == by_id(b.virtuals) &&
         sorted(a.loops) == sorted(b.loops) && nonzero(a.bars) == nonzero(b.bars);
}

// ---------------------------------------------------------------------------
// TLD text format

namespace {

bool is_token(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isalnum(c) != 0; });
}

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

End parse_end(const std::string& tok, int line) {
  static const std::string kMinus = "\xE2\x88\x92";  // U+2212
  End e;
  std::string label;
  if (!tok.empty() && tok[0] == '+') {
    e.out = true;
    label = tok.substr(1);
  } else if (!tok.empty() && tok[0] == '-') {
    label = tok.substr(1);
  } else if (tok.rfind(kMinus, 0) == 0) {
    label = tok.substr(kMinus.size());
  } else {
    throw TldError(line, "syntax error: expected signed edge label, got '" + tok + "'");
  }
  if (!is_token(label)) throw TldError(line, "syntax error: bad edge label '" + tok + "'");
  e.edge = label;
  return e;
}

}  // namespace

PlanarDiagram parse_tld(std::string_view text) {
  PlanarDiagram d;
  std::map<std::string, int> id_line;
  std::map<std::string, int> label_line;
  std::map<std::string, std::pair<int, int>> dir_count;  // label -> (outs, ins)
  std::map<std::string, int> loop_line;
  std::map<std::string, int> bar_line;

  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    auto toks = split_ws(raw);
    if (toks.empty()) continue;
    const std::string& kind = toks[0];
    if (kind == "X" || kind == "V") {
      if (toks.size() != 6)
        throw TldError(line_no, "syntax error: crossing line needs an id and four ends");
      if (!is_token(toks[1])) throw TldError(line_no, "syntax error: bad identifier '" + toks[1] + "'");
      if (!id_line.emplace(toks[1], line_no).second)
        throw TldError(line_no, "duplicate crossing identifier '" + toks[1] + "'");
      PlanarVertex v;
      v.id = toks[1];
      for (int s = 0; s < 4; ++s) {
        v.slots[s] = parse_end(toks[2 + s], line_no);
        label_line.try_emplace(v.slots[s].edge, line_no);
        auto& c = dir_count[v.slots[s].edge];
        (v.slots[s].out ? c.first : c.second)++;
      }
      (kind == "X" ? d.classical : d.virtuals).push_back(std::move(v));
    } else if (kind == "O") {
      if (toks.size() != 2 || !is_token(toks[1]))
        throw TldError(line_no, "syntax error: loop line is 'O <edge>'");
      if (!loop_line.emplace(toks[1], line_no).second)
        throw TldError(line_no, "edge multiplicity: loop '" + toks[1] + "' listed twice");
      d.loops.push_back(toks[1]);
    } else if (kind == "B") {
      if (toks.size() != 3 || !is_token(toks[1]))
        throw TldError(line_no, "syntax error: bar line is 'B <edge> <count>'");
      int count = 0;
      try {
        size_t used = 0;
        count = std::stoi(toks[2], &used);
        if (used != toks[2].size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw TldError(line_no, "syntax error: bad bar count '" + toks[2] + "'");
      }
      if (count < 0) throw TldError(line_no, "syntax error: negative bar count");
      if (!bar_line.emplace(toks[1], line_no).second)
        throw TldError(line_no, "duplicate bar line for edge '" + toks[1] + "'");
      if (count > 0) d.bars[toks[1]] = count;
    } else {
      throw TldError(line_no, "syntax error: unknown line kind '" + kind + "'");
    }
  }

  for (const auto& [label, c] : dir_count) {
    if (loop_line.count(label))
      throw TldError(loop_line[label], "edge multiplicity: loop '" + label + "' also used at a crossing");
    if (c.first + c.second != 2)
      throw TldError(label_line[label], "edge multiplicity: edge '" + label + "' occurs " +
                                            std::to_string(c.first + c.second) + " times");
    if (c.first != 1)
      throw TldError(label_line[label],
                     "edge direction: edge '" + label + "' needs one '+' end and one '-' end");
  }
  for (const auto& [label, line] : bar_line)
    if (!dir_count.count(label) && !loop_line.count(label))
      throw TldError(line, "unknown edge '" + label + "' in bar line");
  return d;
}

std::string serialize_tld(const PlanarDiagram& d) {
  std::ostringstream out;
  auto emit = [&](char kind, std::vector<PlanarVertex> vs) {
    std::sort(vs.begin(), vs.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    for (const auto& v : vs) {
      out << kind << ' ' << v.id;
      for (const auto& e : v.slots) out << ' ' << (e.out ? '+' : '-') << e.edge;
      out << '\n';
    }
  };
  emit('X', d.classical);
  emit('V', d.virtuals);
  auto loops = d.loops;
  std::sort(loops.begin(), loops.end());
  for (const auto& l : loops) out << "O " << l << '\n';
  for (const auto& [label, c] : d.bars)
    if (c != 0) out << "B " << label << ' ' << c << '\n';
  return out.str();
}

// ---------------------------------------------------------------------------
// Validation

ValidationReport validate(const PlanarDiagram& d) {
  ValidationReport r;
  auto add = [&](std::string code, std::string msg) {
    r.violations.push_back({std::move(code), std::move(msg)});
  };

  std::set<std::string> ids;
  for (const auto* list : {&d.classical, &d.virtuals})
    for (const auto& v : *list)
      if (!ids.insert(v.id).second) add("duplicate_id", "duplicate crossing identifier '" + v.id + "'");

  std::map<std::string, std::pair<int, int>> dir_count;
  for (const auto* list : {&d.classical, &d.virtuals})
    for (const auto& v : *list)
      for (const auto& e : v.slots) (e.out ? dir_count[e.edge].first : dir_count[e.edge].second)++;

  bool arity_ok = true;
  for (const auto& [label, c] : dir_count) {
    if (c.first != 1 || c.second != 1) {
      arity_ok = false;
      add("edge_multiplicity", "edge multiplicity: edge '" + label + "' has " +
                                   std::to_string(c.first) + " tail(s) and " +
                                   std::to_string(c.second) + " head(s)");
    }
  }
  std::set<std::string> loop_set;
  for (const auto& l : d.loops) {
    if (!loop_set.insert(l).second) add("edge_multiplicity", "edge multiplicity: loop '" + l + "' listed twice");
    if (dir_count.count(l)) {
      arity_ok = false;
      add("loop_in_crossing", "loop '" + l + "' also appears at a crossing");
    }
  }
  for (const auto& [label, c] : d.bars) {
    if (c < 0) add("negative_bars", "edge '" + label + "' has a negative bar count");
    if (!dir_count.count(label) && !loop_set.count(label))
      add("bar_unknown_edge", "bars on unknown edge '" + label + "'");
  }

  for (const auto& v : d.classical) {
    const auto& s = v.slots;
    if (s[0].out || !s[2].out || s[1].out == s[3].out)
      add("slot_direction", "classical crossing '" + v.id +
                                "' must have slot0 incoming, slot2 outgoing and exactly one "
                                "incoming over-strand end");
  }
  for (const auto& v : d.virtuals) {
    const auto& s = v.slots;
    if (s[0].out || s[1].out || !s[2].out || !s[3].out)
      add("slot_direction",
          "virtual crossing '" + v.id + "' must have slots 0,1 incoming and slots 2,3 outgoing");
  }

  if (arity_ok && ids.size() == d.vertex_count()) {
    PlanarIndex idx(d);
    int faces = 0;
    auto face = idx.face_of_darts(&faces);
    int ncomp = 0;
    auto comp = idx.vertex_components(&ncomp);
    std::vector<int> V(ncomp), E(ncomp);
    std::vector<std::set<int>> F(ncomp);
    for (int v = 0; v < idx.vertex_count(); ++v) {
      V[comp[v]]++;
      for (int s = 0; s < 4; ++s) {
        if (idx.vertex(v).slots[s].out) E[comp[v]]++;
        F[comp[v]].insert(face[idx.dart({v, s})]);
      }
    }
    for (int c = 0; c < ncomp; ++c) {
      const long chi = V[c] - E[c] + static_cast<long>(F[c].size());
      if (chi != 2) {
        std::string witness;
        for (int v = 0; v < idx.vertex_count() && witness.empty(); ++v)
          if (comp[v] == c) witness = idx.vertex(v).id;
        add("euler_check_failed", "Euler check failed at the component containing '" + witness +
                                      "': V-E+F = " + std::to_string(chi));
      }
    }
  }
  return r;
}

void require_valid(const PlanarDiagram& d) {
  auto r = validate(d);
  if (!r.valid()) throw std::invalid_argument(r.violations.front().message);
}

ComponentMap components(const PlanarDiagram& d) {
  std::vector<std::string> labels;
  for (const auto* list : {&d.classical, &d.virtuals})
    for (const auto& v : *list)
      for (const auto& e : v.slots)
        if (e.out) labels.push_back(e.edge);
  for (const auto& l : d.loops) labels.push_back(l);
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  std::map<std::string, int> pos;
  for (size_t i = 0; i < labels.size(); ++i) pos[labels[i]] = static_cast<int>(i);

  detail::UnionFind uf(static_cast<int>(labels.size()));
  for (const auto* list : {&d.classical, &d.virtuals})
    for (const auto& v : *list)
      for (int s = 0; s < 2; ++s) uf.unite(pos.at(v.slots[s].edge), pos.at(v.slots[s + 2].edge));

  ComponentMap cm;
  std::map<int, int> ids;
  for (const auto& l : labels) {
    auto [it, fresh] = ids.emplace(uf.find(pos[l]), static_cast<int>(ids.size()));
    cm.component_of[l] = it->second;
  }
  cm.count = static_cast<int>(ids.size());
  return cm;
}

// ---------------------------------------------------------------------------
// Abstract links

bool AbstractLink::slot_is_out(int crossing, int slot) const {
  const auto& e = edges[crossings[crossing].edge[slot]];
  return e.tail.crossing == crossing && e.tail.slot == slot;
}

std::size_t AbstractLink::loop_count() const {
  return static_cast<std::size_t>(
      std::count_if(edges.begin(), edges.end(), [](const auto& e) { return e.is_loop(); }));
}

int crossing_sign(const PlanarVertex& v) { return v.slots[3].out ? -1 : 1; }

AbstractLink project_abstract(const PlanarDiagram& d) {
  PlanarIndex idx(d);
  AbstractLink a;

  std::vector<int> order(d.classical.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return d.classical[x].id < d.classical[y].id; });
  std::map<int, int> crossing_of_vertex;
  for (int v : order) {
    crossing_of_vertex[v] = static_cast<int>(a.crossings.size());
    AbstractCrossing c;
    c.id = d.classical[v].id;
    c.sign = crossing_sign(d.classical[v]);
    a.crossings.push_back(c);
  }

  std::set<std::string> visited;
  std::vector<AbstractEdge> edges;
  for (int v : order) {
    for (int s = 0; s < 4; ++s) {
      const End& start = d.classical[v].slots[s];
      if (!start.out) continue;
      AbstractEdge e;
      e.label = start.edge;
      e.tail = {crossing_of_vertex[v], s};
      int bars = 0;
      std::string label = start.edge;
      for (;;) {
        visited.insert(label);
        bars += d.bar_count(label);
        Port h = idx.head(label);
        if (idx.is_classical(h.vertex)) {
          e.head = {crossing_of_vertex[h.vertex], h.slot};
          break;
        }
        label = idx.vertex(h.vertex).slots[(h.slot + 2) % 4].edge;
      }
      e.parity = bars & 1;
      edges.push_back(e);
    }
  }
  // Closed strands that meet only virtual crossings become loops.
  for (const auto& [label, t] : idx.tails()) {
    if (visited.count(label)) continue;
    std::string smallest = label;
    int bars = 0;
    std::string cur = label;
    do {
      visited.insert(cur);
      smallest = std::min(smallest, cur);
      bars += d.bar_count(cur);
      Port h = idx.head(cur);
      cur = idx.vertex(h.vertex).slots[(h.slot + 2) % 4].edge;
    } while (cur != label);
    AbstractEdge e;
    e.label = smallest;
    e.parity = bars & 1;
    edges.push_back(e);
  }
  for (const auto& l : d.loops) {
    AbstractEdge e;
    e.label = l;
    e.parity = d.bar_count(l) & 1;
    edges.push_back(e);
  }

  std::sort(edges.begin(), edges.end(), [](const auto& x, const auto& y) { return x.label < y.label; });
  a.edges = std::move(edges);
  for (int i = 0; i < static_cast<int>(a.edges.size()); ++i) {
    const auto& e = a.edges[i];
    if (e.is_loop()) continue;
    a.crossings[e.tail.crossing].edge[e.tail.slot] = i;
    a.crossings[e.head.crossing].edge[e.head.slot] = i;
  }
  return a;
}

AbstractLink abstract_from_tld(std::string_view text) {
  PlanarDiagram d = parse_tld(text);
  if (!d.virtuals.empty()) throw std::invalid_argument("abstract link text may not contain virtual crossings");
  for (const auto& v : d.classical) {
    const auto& s = v.slots;
    if (s[0].out || !s[2].out || s[1].out == s[3].out)
      throw std::invalid_argument("crossing '" + v.id + "' violates the slot convention");
  }
  return project_abstract(d);
}

int writhe(const AbstractLink& a) {
  int w = 0;
  for (const auto& c : a.crossings) w += c.sign;
  return w;
}

int link_components(const AbstractLink& a) {
  detail::UnionFind uf(static_cast<int>(a.edges.size()));
  for (const auto& c : a.crossings) {
    uf.unite(c.edge[0], c.edge[2]);
    uf.unite(c.edge[1], c.edge[3]);
  }
  std::set<int> roots;
  for (int i = 0; i < uf.size(); ++i) roots.insert(uf.find(i));
  return static_cast<int>(roots.size());
}

}  // namespace twistlink
