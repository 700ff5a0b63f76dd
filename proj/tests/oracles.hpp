#pragma once

// Reference implementations used only by tests. They avoid the library's
// union-find and table-driven code paths.

#include <algorithm>
#include <array>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "twistlink/diagram.hpp"
#include "twistlink/group.hpp"
#include "twistlink/poly.hpp"

namespace oracle {

using twistlink::AbstractLink;
using twistlink::Integer;
using twistlink::LaurentBipoly;

inline LaurentBipoly mono(long c, int a, int m = 0) { return LaurentBipoly::monomial(c, a, m); }
inline LaurentBipoly delta() { return mono(-1, -2) + mono(-1, 2); }

inline std::string read_corpus(const std::string& name) {
  std::ifstream in(std::string(TWISTLINK_CORPUS_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Circles of a (partial) state by walking edge ends. choice[c] is 0 for the
/// a-smoothing and 1 for the b-smoothing. Returns (even, odd) counts; with
/// ignore_bars every circle counts as even.
inline std::pair<int, int> trace_circles(const AbstractLink& a, const std::vector<int>& choice,
                                         bool ignore_bars = false) {
  static const int partner[2][4] = {{1, 0, 3, 2}, {3, 2, 1, 0}};
  std::vector<bool> used(a.edges.size(), false);
  int even = 0, odd = 0;
  for (size_t start = 0; start < a.edges.size(); ++start) {
    if (used[start]) continue;
    int parity = 0;
    if (a.edges[start].is_loop()) {
      used[start] = true;
      parity = a.edges[start].parity;
    } else {
      // Walk from the tail end of `start` through its head end.
      int edge = static_cast<int>(start);
      bool toward_head = true;
      while (!used[edge]) {
        used[edge] = true;
        parity ^= a.edges[edge].parity;
        const auto& e = a.edges[edge];
        const auto end = toward_head ? e.head : e.tail;
        const int s2 = partner[choice[end.crossing]][end.slot];
        const int next = a.crossings[end.crossing].edge[s2];
        const auto& n = a.edges[next];
        // Leave through slot s2: if that is the next edge's tail, walk forward.
        toward_head = n.tail.crossing == end.crossing && n.tail.slot == s2;
        edge = next;
      }
    }
    (parity && !ignore_bars ? odd : even)++;
  }
  return {even, odd};
}

/// Bracket by recursion on one crossing at a time.
inline LaurentBipoly skein_bracket(const AbstractLink& a, bool ignore_bars = false) {
  const int n = static_cast<int>(a.crossings.size());
  std::vector<int> choice(n, 0);
  std::function<LaurentBipoly(int)> rec = [&](int k) -> LaurentBipoly {
    if (k == n) {
      auto [even, odd] = trace_circles(a, choice, ignore_bars);
      LaurentBipoly p = delta().pow(static_cast<unsigned>(even));
      return p * mono(1, 0, odd);
    }
    choice[k] = 0;
    LaurentBipoly r = mono(1, 1) * rec(k + 1);
    choice[k] = 1;
    r += mono(1, -1) * rec(k + 1);
    return r;
  };
  return rec(0);
}

/// Virtual Jones: bar-ignoring state sum with the unknot normalized to 1.
inline LaurentBipoly virtual_jones(const AbstractLink& a) {
  const int n = static_cast<int>(a.crossings.size());
  int w = 0;
  for (const auto& c : a.crossings) w += c.sign;
  LaurentBipoly sum;
  std::vector<int> choice(n);
  for (long s = 0; s < (1L << n); ++s) {
    int ab = 0;
    for (int i = 0; i < n; ++i) {
      choice[i] = (s >> i) & 1;
      ab += choice[i] ? -1 : 1;
    }
    const int circles = trace_circles(a, choice, true).first;
    sum += mono(1, ab) * delta().pow(static_cast<unsigned>(circles - 1));
  }
  return mono(w % 2 ? -1 : 1, -3 * w) * sum;
}

/// Random abstract link: random signs, random pairing of outgoing to
/// incoming ends, random parities (when bars is true) and extra loops.
inline AbstractLink random_abstract(std::mt19937& rng, int max_crossings, bool bars, int max_loops = 1) {
  AbstractLink a;
  const int n = std::uniform_int_distribution<int>(0, max_crossings)(rng);
  std::vector<std::pair<int, int>> outs, ins;
  for (int c = 0; c < n; ++c) {
    twistlink::AbstractCrossing x;
    x.id = "c" + std::to_string(c + 1);
    x.sign = rng() % 2 ? 1 : -1;
    a.crossings.push_back(x);
    outs.push_back({c, 2});
    outs.push_back({c, x.sign > 0 ? 1 : 3});
    ins.push_back({c, 0});
    ins.push_back({c, x.sign > 0 ? 3 : 1});
  }
  std::shuffle(ins.begin(), ins.end(), rng);
  const int min_loops = n == 0 ? 1 : 0;
  int loops = std::uniform_int_distribution<int>(min_loops, std::max(min_loops, max_loops))(rng);
  for (size_t i = 0; i < outs.size(); ++i) {
    twistlink::AbstractEdge e;
    e.label = "e" + std::to_string(i + 1);
    e.tail = {outs[i].first, outs[i].second};
    e.head = {ins[i].first, ins[i].second};
    e.parity = bars ? static_cast<int>(rng() % 2) : 0;
    a.edges.push_back(e);
  }
  for (int l = 0; l < loops; ++l) {
    twistlink::AbstractEdge e;
    e.label = "l" + std::to_string(l + 1);
    e.parity = bars ? static_cast<int>(rng() % 2) : 0;
    a.edges.push_back(e);
  }
  std::sort(a.edges.begin(), a.edges.end(), [](const auto& x, const auto& y) { return x.label < y.label; });
  for (int i = 0; i < static_cast<int>(a.edges.size()); ++i) {
    const auto& e = a.edges[i];
    if (e.is_loop()) continue;
    a.crossings[e.tail.crossing].edge[e.tail.slot] = i;
    a.crossings[e.head.crossing].edge[e.head.slot] = i;
  }
  return a;
}

/// Homomorphisms into S_n by direct composition of permutations.
inline std::uint64_t brute_homs(const twistlink::GroupPresentation& p, int degree) {
  using Perm = std::vector<int>;
  std::vector<Perm> elems;
  Perm id(degree);
  std::iota(id.begin(), id.end(), 0);
  Perm q = id;
  do elems.push_back(q);
  while (std::next_permutation(q.begin(), q.end()));
  auto compose = [](const Perm& x, const Perm& y) {
    Perm r(x.size());
    for (size_t i = 0; i < x.size(); ++i) r[i] = y[x[i]];
    return r;
  };
  auto invert = [](const Perm& x) {
    Perm r(x.size());
    for (size_t i = 0; i < x.size(); ++i) r[x[i]] = static_cast<int>(i);
    return r;
  };
  std::uint64_t count = 0;
  std::vector<size_t> pick(p.generators, 0);
  for (;;) {
    bool ok = true;
    for (const auto& w : p.relators) {
      Perm acc = id;
      for (int x : w) {
        const Perm& g = elems[pick[std::abs(x) - 1]];
        acc = compose(acc, x > 0 ? g : invert(g));
      }
      if (acc != id) {
        ok = false;
        break;
      }
    }
    count += ok;
    int k = 0;
    while (k < p.generators && ++pick[k] == elems.size()) pick[k++] = 0;
    if (k == p.generators) break;
  }
  return count;
}

}  // namespace oracle
