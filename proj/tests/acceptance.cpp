// Acceptance run: one PASS/FAIL line per criterion.
//
//   acceptance [--expect-fail 1,4]
//
// Without the flag the exit status is the number of failing criteria. With
// it, the status is 0 exactly when the failing set equals the given list.

#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <regex>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "twistlink/bracket.hpp"
#include "twistlink/faces.hpp"
#include "twistlink/group.hpp"
#include "twistlink/moves.hpp"

using namespace twistlink;
using oracle::delta;
using oracle::mono;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    detail += (detail.empty() ? "" : "; ") + what;
  }
};

PlanarDiagram corpus(const std::string& name) { return parse_tld(oracle::read_corpus(name)); }
AbstractLink corpus_abstract(const std::string& name) { return project_abstract(corpus(name)); }

std::string join(const std::vector<Integer>& v) {
  std::string out = "(";
  for (size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].str();
  return out + ")";
}

const LaurentBipoly kShared = delta() * (mono(1, -4) + mono(1, -6) - mono(1, -10));

Outcome onefoil() {
  Outcome o;
  auto a = corpus_abstract("onefoil.tld");
  o.require(twisted_jones(a) == mono(1, -6) + mono(1, -2) - mono(1, -2, 2), "twisted jones");
  auto j = jones(a);
  o.require(j && *j == mono(1, 0), "jones");
  auto c = carrier(a);
  o.require(c.total_euler_genus == 2 && !c.orientable, "carrier");
  auto g = tietze_simplify(twisted_group(a));
  const auto s3 = count_homs(g, 3), s4 = count_homs(g, 4);
  std::ostringstream msg;
  msg << "group simplifies to " << g.generators << " generators, " << g.relators.size() << " relators, (S3,S4) = ("
      << s3 << "," << s4 << "); expected 2, 0, (36,576)";
  o.require(g.generators == 2 && g.relators.empty() && s3 == 36 && s4 == 576, msg.str());
  return o;
}

Outcome twofoil() {
  Outcome o;
  auto a = corpus_abstract("twofoil.tld");
  o.require(twisted_jones(a) == kShared, "twisted jones");
  o.require(two_colorable(a).has_value(), "two-colorable");
  auto c = carrier(a);
  o.require(c.total_euler_genus == 1 && !c.orientable, "carrier");
  auto g = tietze_simplify(twisted_group(a));
  auto ab = abelianization(g);
  o.require(ab == std::vector<Integer>{0, 0}, "abelianization " + join(ab));
  const auto s3 = count_homs(g, 3);
  o.require(s3 == 30 && oracle::brute_homs(g, 3) == 30, "S3 count " + std::to_string(s3));
  return o;
}

Outcome torus() {
  Outcome o;
  auto a = corpus_abstract("torus1212.tld");
  o.require(writhe(a) == 2, "writhe");
  o.require(twisted_jones(a) == kShared, "twisted jones");
  o.require(!two_colorable(a).has_value(), "two-colorable");
  auto j = jones(a);
  o.require(j && !kamada_check(*j, link_components(a)), "kamada");
  auto c = carrier(a);
  o.require(c.total_euler_genus == 2 && c.orientable, "carrier");
  auto s3 = count_homs(tietze_simplify(twisted_group(a)), 3);
  o.require(s3 == 36, "S3 count " + std::to_string(s3));
  return o;
}

Outcome bar_free() {
  Outcome o;
  std::mt19937 rng(3003);
  for (int i = 0; i < 200 && o.pass; ++i) {
    auto a = oracle::random_abstract(rng, 6, false);
    auto tj = twisted_jones(a);
    o.require(tj.is_m_free(), "M term in diagram " + std::to_string(i));
    auto q = poly_div_exact(tj, delta());
    o.require(q.has_value(), "not divisible, diagram " + std::to_string(i));
    if (q) o.require(*q == oracle::virtual_jones(a), "quotient differs, diagram " + std::to_string(i));
  }
  return o;
}

struct Fingerprint {
  LaurentBipoly jones;
  std::vector<Integer> abel;
  std::uint64_t s3 = 0;
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const PlanarDiagram& d) {
  auto a = project_abstract(d);
  auto g = tietze_simplify(twisted_group(a));
  return {twisted_jones(a), abelianization(g), count_homs(g, 3, HomOptions{16})};
}

/// Closure of a random 3-strand braid word, drawn upward and closed on the
/// right, with up to four bars scattered on its arcs.
PlanarDiagram random_braid_closure(std::mt19937& rng) {
  const int len = std::uniform_int_distribution<int>(3, 6)(rng);
  std::vector<std::string> start{"s0", "s1", "s2"}, at = start;
  std::vector<std::string> arcs = start;
  std::string tld;
  int fresh = 3;
  for (int c = 1; c <= len; ++c) {
    const int i = static_cast<int>(rng() % 2);
    const std::string bl = at[i], br = at[i + 1];
    const std::string tl = "s" + std::to_string(fresh++), tr = "s" + std::to_string(fresh++);
    arcs.push_back(tl);
    arcs.push_back(tr);
    if (rng() % 2)
      tld += "X c" + std::to_string(c) + " -" + br + " +" + tr + " +" + tl + " -" + bl + "\n";
    else
      tld += "X c" + std::to_string(c) + " -" + bl + " -" + br + " +" + tr + " +" + tl + "\n";
    at[i] = tl;
    at[i + 1] = tr;
  }
  for (int p = 0; p < 3; ++p) {
    if (at[p] == start[p]) {
      tld += "O " + start[p] + "\n";
      continue;
    }
    // The top arc at each position closes up onto the bottom arc there.
    const std::regex word("([-+])" + at[p] + "\\b");
    tld = std::regex_replace(tld, word, "$1" + start[p]);
    std::erase(arcs, at[p]);
  }
  const int bars = std::uniform_int_distribution<int>(0, 4)(rng);
  std::map<std::string, int> on;
  for (int b = 0; b < bars; ++b) ++on[arcs[rng() % arcs.size()]];
  for (const auto& [label, n] : on) tld += "B " + label + " " + std::to_string(n) + "\n";
  return parse_tld(tld);
}

/// Realized random abstract link or random braid closure, with at most six
/// crossings and four bars.
PlanarDiagram random_diagram(std::mt19937& rng) {
  if (rng() % 2) return random_braid_closure(rng);
  for (;;) {
    auto a = oracle::random_abstract(rng, 6, true);
    int odd = 0;
    for (const auto& e : a.edges) odd += e.parity;
    if (odd <= 4) return realize(a);
  }
}

Outcome moves_invariance() {
  Outcome o;
  std::mt19937 rng(5005);
  std::set<MoveTag> used;
  for (int i = 0; i < 200 && o.pass; ++i) {
    PlanarDiagram d = random_diagram(rng);
    const Fingerprint f = fingerprint(d);
    const WalkCaps caps{8, static_cast<int>(d.virtuals.size()) + 4, 8};
    for (int step = 0; step < 8; ++step) {
      std::vector<MoveSite> trace;
      d = random_walk(d, rng(), 1, caps, &trace);
      if (trace.empty()) break;
      used.insert(trace[0].tag);
      if (!(fingerprint(d) == f)) {
        o.require(false, "diagram " + std::to_string(i) + " changed under " + trace[0].to_string());
        break;
      }
    }
  }
  std::string missing;
  for (auto t : {MoveTag::R1, MoveTag::R2, MoveTag::R3, MoveTag::V1, MoveTag::V2, MoveTag::V3, MoveTag::V4, MoveTag::T1,
                 MoveTag::T2, MoveTag::T3})
    if (!used.count(t)) missing += " " + to_string(t);
  o.require(missing.empty(), "moves never exercised:" + missing);
  return o;
}

Outcome colorable() {
  Outcome o;
  std::vector<AbstractLink> links;
  for (const auto& entry : std::filesystem::directory_iterator(TWISTLINK_CORPUS_DIR))
    if (entry.path().extension() == ".tld") links.push_back(corpus_abstract(entry.path().filename().string()));
  std::mt19937 rng(4004);
  for (int i = 0; i < 200; ++i) links.push_back(oracle::random_abstract(rng, 6, true));
  int colorable = 0;
  for (const auto& a : links) {
    if (!two_colorable(a)) continue;
    ++colorable;
    auto tj = twisted_jones(a);
    o.require(tj.is_m_free() && poly_div_exact(tj, delta()).has_value(), "colorable diagram fails");
    if (!o.pass) break;
  }
  o.require(colorable >= 10, "too few colorable diagrams: " + std::to_string(colorable));
  return o;
}

Outcome skein() {
  Outcome o;
  std::vector<AbstractLink> links;
  for (const auto& entry : std::filesystem::directory_iterator(TWISTLINK_CORPUS_DIR)) {
    if (entry.path().extension() != ".tld") continue;
    auto a = corpus_abstract(entry.path().filename().string());
    if (a.crossings.size() <= 5) links.push_back(a);
  }
  std::mt19937 rng(7007);
  for (int i = 0; i < 200; ++i) links.push_back(oracle::random_abstract(rng, 5, true, 2));
  for (const auto& a : links) {
    o.require(oracle::skein_bracket(a) == bracket(a), "skein differs from state sum");
    const std::uint64_t states = std::uint64_t{1} << a.crossings.size();
    std::uint64_t seen = 0;
    LaurentBipoly sum;
    for (std::uint64_t s = 0; s < states; ++s) {
      auto st = state_summary(a, s);
      if (st.a_count + st.b_count != static_cast<int>(a.crossings.size())) break;
      ++seen;
      sum += mono(1, st.a_count - st.b_count, st.odd_circles) *
             LaurentBipoly::loop_value().pow(static_cast<unsigned>(st.even_circles));
    }
    o.require(seen == states, "state count");
    o.require(sum == bracket(a), "state summaries do not add up to the bracket");
    if (!o.pass) break;
  }
  return o;
}

Outcome round_trips() {
  Outcome o;
  for (const auto& entry : std::filesystem::directory_iterator(TWISTLINK_CORPUS_DIR)) {
    if (entry.path().extension() != ".tld") continue;
    auto d = corpus(entry.path().filename().string());
    o.require(parse_tld(serialize_tld(d)) == d, "serialize/parse: " + entry.path().filename().string());
  }
  std::mt19937 rng(8008);
  for (int i = 0; i < 200; ++i) {
    auto a = oracle::random_abstract(rng, 6, true, 2);
    if (canonical_code(project_abstract(realize(a))) != canonical_code(a)) {
      o.require(false, "realize round trip, link " + std::to_string(i));
      break;
    }
  }
  return o;
}

Outcome klein_curve() {
  Outcome o;
  auto path = equiv_search(corpus("unknot.tld"), corpus("fig4-rightmost.tld"), SearchOptions{3});
  o.require(path.has_value(), "no sequence within depth 3");
  if (!path) return o;
  std::string tags;
  for (const auto& s : *path) tags += (tags.empty() ? "" : ",") + to_string(s.tag);
  o.require(tags == "T2,V1,R2", "sequence " + tags);
  return o;
}

Outcome t3_counterexample() {
  Outcome o;
  auto before = corpus_abstract("trefoil.tld");
  auto after = corpus_abstract("trefoil-after-T3.tld");
  const auto up_before = count_homs(tietze_simplify(virtual_group(before, Level::upper)), 3);
  const auto up_after = count_homs(tietze_simplify(virtual_group(after, Level::upper)), 3);
  o.require(up_before != up_after, "upper S3 counts agree: " + std::to_string(up_before));
  auto g1 = tietze_simplify(twisted_group(before));
  auto g2 = tietze_simplify(twisted_group(after));
  o.require(abelianization(g1) == abelianization(g2), "twisted abelianizations differ");
  o.require(count_homs(g1, 3) == count_homs(g2, 3), "twisted S3 counts differ");
  o.require(count_homs(g1, 4) == count_homs(g2, 4), "twisted S4 counts differ");
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> expected;
  bool compare = false;
  for (int i = 1; i < argc; ++i) {
    if (std::string(argv[i]) == "--expect-fail" && i + 1 < argc) {
      compare = true;
      std::stringstream ss(argv[++i]);
      for (std::string tok; std::getline(ss, tok, ',');) expected.insert(std::stoi(tok));
    }
  }

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"onefoil regression", onefoil},
      {"twofoil regression", twofoil},
      {"torus1212 regression", torus},
      {"bar-free diagrams: divisibility and virtual Jones", bar_free},
      {"move invariance along random walks", moves_invariance},
      {"two-colorable diagrams are M-free and divisible", colorable},
      {"skein recursion equals state enumeration", skein},
      {"serialization and realization round trips", round_trips},
      {"unknot to Klein-bottle curve in three moves", klein_curve},
      {"T3 separates the upper group but not the twisted group", t3_counterexample},
  };

  std::set<int> failed;
  for (size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) failed.insert(static_cast<int>(i + 1));
    std::printf("criterion %2zu: %s  %s [%.2f s]%s%s\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(),
                secs, o.detail.empty() ? "" : " -- ", o.detail.c_str());
  }
  std::printf("%zu of %zu criteria pass\n", criteria.size() - failed.size(), criteria.size());
  if (compare) return failed == expected ? 0 : 1;
  return static_cast<int>(failed.size());
}
