#include "local_edit.hpp"

#include <algorithm>
#include <stdexcept>

namespace twistlink::detail {

Editor::Editor(const PlanarDiagram& d) : d_(d) {
  for (const auto* list : {&d_.classical, &d_.virtuals})
    for (const auto& v : *list) {
      ids_.insert(v.id);
      for (const auto& e : v.slots) labels_.insert(e.edge);
    }
  for (const auto& l : d_.loops) labels_.insert(l);
  for (const auto& [l, n] : d_.bars) labels_.insert(l);
}

std::string Editor::fresh_label() {
  std::string s;
  do s = "e" + std::to_string(next_label_++);
  while (labels_.count(s));
  labels_.insert(s);
  return s;
}

std::string Editor::fresh_vertex_id(bool classical) {
  std::string s;
  do s = (classical ? "c" : "v") + std::to_string(next_id_++);
  while (ids_.count(s));
  ids_.insert(s);
  return s;
}

bool Editor::is_loop(const std::string& label) const {
  return std::find(d_.loops.begin(), d_.loops.end(), label) != d_.loops.end();
}

void Editor::remove_loop(const std::string& label) {
  d_.loops.erase(std::find(d_.loops.begin(), d_.loops.end(), label));
}

PlanarVertex* Editor::vertex(const std::string& id) {
  for (auto* list : {&d_.classical, &d_.virtuals})
    for (auto& v : *list)
      if (v.id == id) return &v;
  throw std::out_of_range("no vertex '" + id + "'");
}

void Editor::remove_vertex(const std::string& id) {
  for (auto* list : {&d_.classical, &d_.virtuals}) {
    auto it = std::find_if(list->begin(), list->end(), [&](const PlanarVertex& v) { return v.id == id; });
    if (it != list->end()) {
      list->erase(it);
      return;
    }
  }
  throw std::out_of_range("no vertex '" + id + "'");
}

void Editor::set_label(const std::string& id, int slot, const std::string& label) {
  vertex(id)->slots[slot].edge = label;
}

void Editor::rename_end(const std::string& label, bool out, const std::string& to) {
  for (auto* list : {&d_.classical, &d_.virtuals})
    for (auto& v : *list)
      for (auto& e : v.slots)
        if (e.edge == label && e.out == out) {
          e.edge = to;
          return;
        }
  throw std::logic_error("end of '" + label + "' not found");
}

void Editor::add_classical(const std::string& id, const std::array<End, 4>& ccw, int under_in) {
  PlanarVertex v{id, {}};
  for (int k = 0; k < 4; ++k) v.slots[k] = ccw[(under_in + k) % 4];
  ids_.insert(id);
  d_.classical.push_back(std::move(v));
}

void Editor::add_virtual(const std::string& id, const std::array<End, 4>& ccw) {
  for (int r = 0; r < 4; ++r) {
    if (ccw[r].out || ccw[(r + 1) % 4].out) continue;
    PlanarVertex v{id, {}};
    for (int k = 0; k < 4; ++k) v.slots[k] = ccw[(r + k) % 4];
    ids_.insert(id);
    d_.virtuals.push_back(std::move(v));
    return;
  }
  throw std::logic_error("virtual crossing without adjacent incoming ends");
}

void Editor::add_bars(const std::string& label, int delta) {
  int& n = d_.bars[label];
  n += delta;
  if (n < 0) throw std::logic_error("negative bar count on '" + label + "'");
  if (n == 0) d_.bars.erase(label);
}

void Editor::split_bars(const std::string& from, const std::string& to, int keep) {
  const int n = d_.bar_count(from);
  d_.bars.erase(from);
  if (keep > 0) d_.bars[from] = keep;
  if (n - keep > 0) d_.bars[to] = n - keep;
}

void Editor::splice(const std::string& id) {
  PlanarVertex v = *vertex(id);
  remove_vertex(id);
  for (int i = 0; i < 2; ++i) {
    const int a = v.slots[i].out ? i + 2 : i;  // incoming end of the strand
    const int b = (a + 2) % 4;
    const std::string p = v.slots[a].edge, q = v.slots[b].edge;
    v.slots[a].edge.clear();
    v.slots[b].edge.clear();
    if (p == q) {
      d_.loops.push_back(p);
      continue;
    }
    // The head of q moves onto p, possibly on the other strand of v.
    const int other_in = v.slots[1 - i].out ? 3 - i : 1 - i;
    if (v.slots[other_in].edge == q) {
      v.slots[other_in].edge = p;
    } else {
      rename_end(q, false, p);
    }
    const int nq = d_.bar_count(q);
    d_.bars.erase(q);
    if (nq) d_.bars[p] += nq;
  }
}

}  // namespace twistlink::detail
