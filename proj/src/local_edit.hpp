#pragma once

// Mutable view of a PlanarDiagram used by the move rewrites.

#include <array>
#include <set>
#include <string>

#include "twistlink/diagram.hpp"

namespace twistlink::detail {

class Editor {
 public:
  explicit Editor(const PlanarDiagram& d);

  PlanarDiagram result() const { return d_; }

  std::string fresh_label();
  std::string fresh_vertex_id(bool classical);

  bool is_loop(const std::string& label) const;
  void remove_loop(const std::string& label);

  PlanarVertex* vertex(const std::string& id);
  void remove_vertex(const std::string& id);
  void set_label(const std::string& id, int slot, const std::string& label);
  /// Relabels the end {label, out} wherever it sits.
  void rename_end(const std::string& label, bool out, const std::string& to);

  /// Ends given counterclockwise; rotated so that `under_in` becomes slot0.
  void add_classical(const std::string& id, const std::array<End, 4>& ccw, int under_in);
  /// Ends given counterclockwise; rotated so that both incoming ends lead.
  void add_virtual(const std::string& id, const std::array<End, 4>& ccw);

  int bars(const std::string& label) const { return d_.bar_count(label); }
  void add_bars(const std::string& label, int delta);
  void forget_bars(const std::string& label) { d_.bars.erase(label); }
  /// Keeps `keep` bars on `from` and moves the rest to `to`.
  void split_bars(const std::string& from, const std::string& to, int keep);

  /// Deletes a vertex and joins the arcs meeting along each strand.
  void splice(const std::string& id);

 private:
  PlanarDiagram d_;
  std::set<std::string> labels_;
  std::set<std::string> ids_;
  int next_label_ = 1;
  int next_id_ = 1;
};

}  // namespace twistlink::detail
