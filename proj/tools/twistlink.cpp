#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "twistlink/bracket.hpp"
#include "twistlink/faces.hpp"
#include "twistlink/group.hpp"
#include "twistlink/moves.hpp"

using namespace twistlink;
using nlohmann::ordered_json;

namespace {

/// Input or domain failure; reported on stderr with exit status 1.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

PlanarDiagram load(const std::string& path) {
  PlanarDiagram d = parse_tld(read_file(path));
  auto report = validate(d);
  if (!report.valid()) throw DomainError(path + ": " + report.violations.front().message);
  return d;
}

void write_out(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw DomainError("cannot write '" + path + "'");
  out << text;
}

ordered_json integer_json(const Integer& c) {
  if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max())
    return c.convert_to<long long>();
  return c.str();
}

/// Polynomials as [a exponent, M exponent, coefficient] triples.
ordered_json poly_json(const LaurentBipoly& p) {
  ordered_json out = ordered_json::array();
  for (const auto& [k, c] : p.terms()) out.push_back({k.first, k.second, integer_json(c)});
  return out;
}

ordered_json envelope(const std::string& command) { return {{"schema", "twistlink/1"}, {"command", command}}; }

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  for (std::string tok; std::getline(ss, tok, ',');) {
    try {
      out.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw CLI::ValidationError("--homs", "expected a comma-separated list of degrees");
    }
  }
  return out;
}

std::set<MoveTag> parse_tags(const std::string& s) {
  std::set<MoveTag> out;
  std::stringstream ss(s);
  for (std::string tok; std::getline(ss, tok, ',');) {
    try {
      out.insert(parse_move_tag(tok));
    } catch (const std::invalid_argument& e) {
      throw CLI::ValidationError("--tags", e.what());
    }
  }
  return out;
}

std::string abel_text(const std::vector<Integer>& f) {
  if (f.empty()) return "trivial";
  std::string out;
  for (size_t i = 0; i < f.size(); ++i) out += (i ? " + " : "") + (f[i] == 0 ? std::string("Z") : "Z/" + f[i].str());
  return out;
}

// ---------------------------------------------------------------------------

int cmd_validate(const std::string& file, bool json) {
  PlanarDiagram d = parse_tld(read_file(file));
  auto report = validate(d);
  if (json) {
    auto j = envelope("validate");
    j["valid"] = report.valid();
    j["violations"] = ordered_json::array();
    for (const auto& v : report.violations) j["violations"].push_back({{"code", v.code}, {"message", v.message}});
    std::cout << j.dump(2) << "\n";
  } else if (report.valid()) {
    std::cout << "valid\n";
  }
  for (const auto& v : report.violations) std::cerr << file << ": " << v.code << ": " << v.message << "\n";
  return report.valid() ? 0 : 1;
}

int cmd_invariants(const std::string& file, bool json) {
  auto a = project_abstract(load(file));
  const int comps = link_components(a);
  auto fs = faces(a);
  auto coloring = two_colorable(a, fs);
  auto car = carrier(a);
  auto br = bracket(a);
  auto tj = twisted_jones(a);
  auto vj = jones(a);
  const bool kamada = vj && kamada_check(*vj, comps);

  if (json) {
    auto j = envelope("invariants");
    j["components"] = comps;
    j["writhe"] = writhe(a);
    j["euler_genus"] = ordered_json::array();
    j["orientable"] = ordered_json::array();
    for (const auto& c : car.components) {
      j["euler_genus"].push_back(c.euler_genus);
      j["orientable"].push_back(c.orientable);
    }
    j["total_euler_genus"] = car.total_euler_genus;
    j["faces"] = fs.size();
    j["two_colorable"] = coloring.has_value();
    j["coloring"] = coloring ? ordered_json(*coloring) : ordered_json(nullptr);
    j["bracket"] = poly_json(br);
    j["twisted_jones"] = poly_json(tj);
    j["jones"] = vj ? poly_json(*vj) : ordered_json(nullptr);
    j["kamada"] = kamada;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "components: " << comps << "\n"
            << "writhe: " << writhe(a) << "\n"
            << "euler genus:";
  for (const auto& c : car.components) std::cout << " " << c.euler_genus << (c.orientable ? "" : "*");
  std::cout << " (total " << car.total_euler_genus << ", " << (car.orientable ? "orientable" : "non-orientable")
            << ")\n"
            << "faces: " << fs.size() << "\n"
            << "two-colorable: " << (coloring ? "yes" : "no") << "\n"
            << "bracket: " << br.to_string() << "\n"
            << "twisted jones: " << tj.to_string() << "\n"
            << "jones: " << (vj ? vj->to_string() : "none") << "\n"
            << "kamada: " << (kamada ? "yes" : "no") << "\n";
  return 0;
}

int cmd_group(const std::string& file, const std::string& level, int budget, const std::string& homs, int cap,
              bool json) {
  auto a = project_abstract(load(file));
  const std::vector<int> degrees = homs.empty() ? std::vector<int>{} : parse_int_list(homs);
  for (int n : degrees)
    if (n < 1 || n > 5) throw CLI::ValidationError("--homs", "degrees must lie in 1..5");

  std::vector<std::string> levels = level.empty() ? std::vector<std::string>{"twisted", "upper", "lower"}
                                                  : std::vector<std::string>{level};
  auto j = envelope("group");
  j["levels"] = ordered_json::array();
  for (const auto& lv : levels) {
    GroupPresentation raw = lv == "twisted" ? twisted_group(a)
                            : lv == "upper" ? virtual_group(a, Level::upper)
                                            : virtual_group(a, Level::lower);
    GroupPresentation simple = tietze_simplify(raw, budget);
    auto abel = abelianization(simple);
    std::vector<std::uint64_t> counts;
    for (int n : degrees) {
      if (simple.generators > cap)
        throw DomainError(lv + " group has " + std::to_string(simple.generators) +
                          " generators after simplification; raise --hom-cap");
      counts.push_back(count_homs(simple, n, HomOptions{cap}));
    }
    if (json) {
      ordered_json g{{"level", lv},
                     {"generators", raw.generators},
                     {"relators", raw.relators.size()},
                     {"simplified", {{"generators", simple.names}, {"relators", simple.relators}}},
                     {"budget_exhausted", simple.budget_exhausted},
                     {"abelianization", ordered_json::array()},
                     {"homs", ordered_json::object()}};
      for (const auto& f : abel) g["abelianization"].push_back(integer_json(f));
      for (size_t i = 0; i < degrees.size(); ++i) g["homs"]["S" + std::to_string(degrees[i])] = counts[i];
      j["levels"].push_back(g);
    } else {
      std::cout << lv << ": " << raw.generators << " generators, " << raw.relators.size() << " relators\n"
                << "  simplified: " << simple.to_string() << (simple.budget_exhausted ? " (budget exhausted)" : "")
                << "\n"
                << "  abelianization: " << abel_text(abel) << "\n";
      for (size_t i = 0; i < degrees.size(); ++i)
        std::cout << "  homs to S" << degrees[i] << ": " << counts[i] << "\n";
    }
  }
  if (json) std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_moves_list(const std::string& file, const std::string& tags, bool json) {
  auto sites = find_moves(load(file), tags.empty() ? std::set<MoveTag>{} : parse_tags(tags));
  if (json) {
    auto j = envelope("moves-list");
    j["sites"] = ordered_json::array();
    for (const auto& s : sites) j["sites"].push_back(s.to_string());
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& s : sites) std::cout << s.to_string() << "\n";
  }
  return 0;
}

int cmd_moves_apply(const std::string& file, const std::vector<std::string>& sites, const std::string& replay,
                    const std::string& out) {
  std::vector<std::string> lines = sites;
  if (!replay.empty()) {
    std::stringstream ss(read_file(replay));
    for (std::string line; std::getline(ss, line);)
      if (line.find_first_not_of(" \t\r") != std::string::npos && line[0] != '#') lines.push_back(line);
  }
  if (lines.empty()) throw CLI::ValidationError("moves-apply", "give --site or --replay");
  PlanarDiagram d = load(file);
  for (const auto& line : lines) {
    MoveSite s;
    try {
      s = MoveSite::parse(line);
    } catch (const std::invalid_argument& e) {
      throw CLI::ValidationError("--site", e.what());
    }
    d = apply_move(d, s);
  }
  write_out(out, serialize_tld(d));
  return 0;
}

int cmd_walk(const std::string& file, std::uint64_t seed, int steps, int max_crossings, bool json) {
  WalkCaps caps;
  if (max_crossings >= 0) caps.max_classical = max_crossings;
  std::vector<MoveSite> trace;
  PlanarDiagram d = random_walk(load(file), seed, steps, caps, &trace);
  if (json) {
    auto j = envelope("walk");
    j["seed"] = seed;
    j["steps"] = steps;
    j["trace"] = ordered_json::array();
    for (const auto& s : trace) j["trace"].push_back(s.to_string());
    j["diagram"] = serialize_tld(d);
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& s : trace) std::cout << "# " << s.to_string() << "\n";
    std::cout << serialize_tld(d);
  }
  return 0;
}

int cmd_realize(const std::string& file, const std::string& out) {
  const std::string text = read_file(file);
  PlanarDiagram d = parse_tld(text);
  // Abstract input needs no planar embedding; V lines mean a planar diagram.
  AbstractLink a = d.virtuals.empty() ? abstract_from_tld(text) : project_abstract(load(file));
  write_out(out, serialize_tld(realize(a)));
  return 0;
}

int cmd_equiv(const std::string& f1, const std::string& f2, int depth, bool json) {
  SearchOptions opts;
  opts.depth = depth;
  auto path = equiv_search(load(f1), load(f2), opts);
  if (json) {
    auto j = envelope("equiv");
    j["depth"] = depth;
    j["found"] = path.has_value();
    j["moves"] = ordered_json::array();
    if (path)
      for (const auto& s : *path) j["moves"].push_back(s.to_string());
    std::cout << j.dump(2) << "\n";
  } else if (path) {
    for (const auto& s : *path) std::cout << s.to_string() << "\n";
  } else {
    std::cout << "# no connecting sequence within depth " << depth << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Twisted link diagrams: validation, invariants, groups and moves."};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  app.add_flag("--json", json, "Emit JSON");

  std::string file, file2, out, level, homs, tags, replay;
  std::vector<std::string> sites;
  int budget = 10000, cap = 6, steps = 0, max_crossings = -1, depth = 6;
  std::uint64_t seed = 0;

  auto* validate_cmd = app.add_subcommand("validate", "Check a diagram file");
  validate_cmd->add_option("file", file)->required();

  auto* inv = app.add_subcommand("invariants", "Polynomials, carrier surface and coloring");
  inv->add_option("file", file)->required();

  auto* grp = app.add_subcommand("group", "Twisted and virtual link groups");
  grp->add_option("file", file)->required();
  grp->add_option("--level", level)->check(CLI::IsMember({"upper", "lower", "twisted"}));
  grp->add_option("--simplify-budget", budget)->check(CLI::PositiveNumber);
  grp->add_option("--homs", homs, "Comma-separated symmetric group degrees");
  grp->add_option("--hom-cap", cap, "Largest generator count for hom counting")->check(CLI::Range(1, 16));

  auto* ml = app.add_subcommand("moves-list", "List move sites");
  ml->add_option("file", file)->required();
  ml->add_option("--tags", tags, "Comma-separated move tags");

  auto* ma = app.add_subcommand("moves-apply", "Apply move sites in order");
  ma->add_option("file", file)->required();
  ma->add_option("--site", sites, "Move site, e.g. \"T2 expand a\"");
  ma->add_option("--replay", replay, "File with one move site per line");
  ma->add_option("--out", out);

  auto* wk = app.add_subcommand("walk", "Seeded random walk of moves");
  wk->add_option("file", file)->required();
  wk->add_option("--seed", seed)->required();
  wk->add_option("--steps", steps)->required()->check(CLI::NonNegativeNumber);
  wk->add_option("--max-crossings", max_crossings)->check(CLI::NonNegativeNumber);

  auto* rl = app.add_subcommand("realize", "Planar diagram for an abstract link");
  rl->add_option("file", file)->required();
  rl->add_option("--out", out);

  auto* eq = app.add_subcommand("equiv", "Bounded search for a connecting move sequence");
  eq->add_option("file1", file)->required();
  eq->add_option("file2", file2)->required();
  eq->add_option("--depth", depth)->required()->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*validate_cmd) return cmd_validate(file, json);
    if (*inv) return cmd_invariants(file, json);
    if (*grp) return cmd_group(file, level, budget, homs, cap, json);
    if (*ml) return cmd_moves_list(file, tags, json);
    if (*ma) return cmd_moves_apply(file, sites, replay, out);
    if (*wk) return cmd_walk(file, seed, steps, max_crossings, json);
    if (*rl) return cmd_realize(file, out);
    if (*eq) return cmd_equiv(file, file2, depth, json);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
