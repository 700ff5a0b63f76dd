#include "twistlink/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "union_find.hpp"

namespace twistlink {

namespace {

using Word = std::vector<int>;

Word inverse(const Word& w) {
  Word r(w.rbegin(), w.rend());
  for (int& x : r) x = -x;
  return r;
}

Word power(int g, int e) { return Word(static_cast<size_t>(std::abs(e)), e < 0 ? -g : g); }

Word concat(std::initializer_list<Word> parts) {
  Word r;
  for (const auto& p : parts) r.insert(r.end(), p.begin(), p.end());
  return r;
}

void free_reduce(Word& w) {
  Word out;
  for (int x : w) {
    if (!out.empty() && out.back() == -x) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  w.swap(out);
}

void cyclic_reduce(Word& w) {
  free_reduce(w);
  size_t i = 0, j = w.size();
  while (j - i >= 2 && w[i] == -w[j - 1]) {
    ++i;
    --j;
  }
  w = Word(w.begin() + static_cast<long>(i), w.begin() + static_cast<long>(j));
}

/// Least rotation of w or of its inverse; relators equal under this map
/// generate the same normal subgroup.
Word canonical_cyclic(const Word& w) {
  Word best = w;
  for (const Word& base : {w, inverse(w)}) {
    for (size_t k = 0; k < base.size(); ++k) {
      Word r(base.begin() + static_cast<long>(k), base.end());
      r.insert(r.end(), base.begin(), base.begin() + static_cast<long>(k));
      if (r < best) best = r;
    }
  }
  return best;
}

void normalize(GroupPresentation& p) {
  std::set<Word> seen;
  std::vector<Word> out;
  for (auto w : p.relators) {
    cyclic_reduce(w);
    if (w.empty()) continue;
    if (seen.insert(canonical_cyclic(w)).second) out.push_back(std::move(w));
  }
  p.relators.swap(out);
}

/// Relator stating x = y.
Word equal(const Word& x, const Word& y) { return concat({x, inverse(y)}); }

}  // namespace

std::string GroupPresentation::to_string() const {
  auto name = [&](int g) { return g - 1 < static_cast<int>(names.size()) ? names[g - 1] : "x" + std::to_string(g); };
  std::string out = "<";
  for (int g = 1; g <= generators; ++g) out += (g > 1 ? ", " : " ") + name(g);
  out += " |";
  for (size_t r = 0; r < relators.size(); ++r) {
    out += r ? ", " : " ";
    const auto& w = relators[r];
    for (size_t i = 0; i < w.size();) {
      size_t j = i;
      while (j < w.size() && w[j] == w[i]) ++j;
      const int e = static_cast<int>(j - i) * (w[i] < 0 ? -1 : 1);
      if (i) out += " ";
      out += name(std::abs(w[i]));
      if (e != 1) out += "^" + std::to_string(e);
      i = j;
    }
  }
  out += " >";
  return out;
}

GroupPresentation twisted_group(const AbstractLink& a) {
  GroupPresentation p;
  // Generator indices per edge: tail upper/lower, head upper/lower.
  std::vector<std::array<int, 4>> gen(a.edges.size());
  for (size_t i = 0; i < a.edges.size(); ++i) {
    const auto& e = a.edges[i];
    if (e.is_loop()) {
      p.names.push_back(e.label + ".u");
      p.names.push_back(e.label + ".l");
      const int u = static_cast<int>(p.names.size()) - 1, l = u + 1;
      gen[i] = {u, l, u, l};
      if (e.parity) p.relators.push_back(equal({u}, {l}));
      continue;
    }
    for (const char* suffix : {".tu", ".tl", ".hu", ".hl"}) p.names.push_back(e.label + suffix);
    const int base = static_cast<int>(p.names.size()) - 4;
    gen[i] = {base + 1, base + 2, base + 3, base + 4};
    const auto [tu, tl, hu, hl] = gen[i];
    if (e.parity == 0) {
      p.relators.push_back(equal({hu}, {tu}));
      p.relators.push_back(equal({hl}, {tl}));
    } else {
      p.relators.push_back(equal({hu}, {tl}));
      p.relators.push_back(equal({hl}, {tu}));
    }
  }
  p.generators = static_cast<int>(p.names.size());

  // Upper and lower generators at the end sitting in a slot.
  auto up = [&](int c, int s) { return gen[a.crossings[c].edge[s]][a.slot_is_out(c, s) ? 0 : 2]; };
  auto lo = [&](int c, int s) { return gen[a.crossings[c].edge[s]][a.slot_is_out(c, s) ? 1 : 3]; };

  for (int c = 0; c < static_cast<int>(a.crossings.size()); ++c) {
    const int eps = a.crossings[c].sign;
    const int oi = a.over_in_slot(c), oo = a.over_out_slot(c);
    const int o = up(c, oo), k = lo(c, 2);
    p.relators.push_back(equal({up(c, oo)}, {up(c, oi)}));
    p.relators.push_back(equal({up(c, 2)}, concat({power(o, -eps), {up(c, 0)}, power(o, eps)})));
    p.relators.push_back(equal({lo(c, 2)}, {lo(c, 0)}));
    p.relators.push_back(equal({lo(c, oo)}, concat({power(k, -eps), {lo(c, oi)}, power(k, eps)})));
  }
  return p;
}

GroupPresentation virtual_group(const AbstractLink& a, Level level) {
  const int ne = static_cast<int>(a.edges.size());
  detail::UnionFind uf(ne);
  for (int c = 0; c < static_cast<int>(a.crossings.size()); ++c) {
    const auto& e = a.crossings[c].edge;
    if (level == Level::upper) {
      uf.unite(e[a.over_in_slot(c)], e[a.over_out_slot(c)]);
    } else {
      uf.unite(e[0], e[2]);
    }
  }
  GroupPresentation p;
  std::map<int, int> arc;
  for (int i = 0; i < ne; ++i) {
    auto [it, fresh] = arc.emplace(uf.find(i), static_cast<int>(arc.size()) + 1);
    if (fresh) p.names.push_back(a.edges[i].label);
  }
  p.generators = static_cast<int>(arc.size());
  auto g = [&](int edge) { return arc.at(uf.find(edge)); };
  for (int c = 0; c < static_cast<int>(a.crossings.size()); ++c) {
    const auto& e = a.crossings[c].edge;
    const int eps = a.crossings[c].sign;
    const int oi = e[a.over_in_slot(c)], oo = e[a.over_out_slot(c)];
    if (level == Level::upper) {
      const int o = g(oo);
      p.relators.push_back(equal({g(e[2])}, concat({power(o, -eps), {g(e[0])}, power(o, eps)})));
    } else {
      const int k = g(e[2]);
      p.relators.push_back(equal({g(oo)}, concat({power(k, -eps), {g(oi)}, power(k, eps)})));
    }
  }
  normalize(p);
  return p;
}

GroupPresentation tietze_simplify(const GroupPresentation& input, int budget) {
  if (budget <= 0) throw std::invalid_argument("budget must be positive");
  constexpr size_t kMaxWordLength = 400;
  GroupPresentation p = input;
  if (p.names.size() < static_cast<size_t>(p.generators)) {
    for (int g = static_cast<int>(p.names.size()) + 1; g <= p.generators; ++g)
      p.names.push_back("x" + std::to_string(g));
  }
  p.budget_exhausted = false;
  int steps = 0;
  for (;;) {
    normalize(p);
    // Shortest relator containing some generator exactly once.
    int best_r = -1, best_g = 0;
    size_t best_len = 0;
    for (int r = 0; r < static_cast<int>(p.relators.size()); ++r) {
      const auto& w = p.relators[r];
      if (best_r >= 0 && w.size() >= best_len) continue;
      std::map<int, int> occ;
      for (int x : w) occ[std::abs(x)]++;
      for (const auto& [g, n] : occ) {
        if (n != 1) continue;
        // Substituted relators must stay within the length cap.
        size_t grown = 0;
        for (const auto& other : p.relators) {
          size_t uses = static_cast<size_t>(std::count_if(other.begin(), other.end(), [&](int x) { return std::abs(x) == g; }));
          grown = std::max(grown, other.size() + uses * (w.size() - 2));
        }
        if (grown > kMaxWordLength) continue;
        best_r = r;
        best_g = g;
        best_len = w.size();
        break;
      }
    }
    if (best_r < 0) break;
    if (steps >= budget) {
      p.budget_exhausted = true;
      break;
    }
    ++steps;

    // Rotate so the generator leads: g^e w = 1, hence g = w^(-e).
    Word r = p.relators[best_r];
    auto pos = std::find_if(r.begin(), r.end(), [&](int x) { return std::abs(x) == best_g; });
    std::rotate(r.begin(), pos, r.end());
    const int e = r.front() > 0 ? 1 : -1;
    Word rest(r.begin() + 1, r.end());
    const Word value = e > 0 ? inverse(rest) : rest;
    const Word value_inv = inverse(value);

    std::vector<Word> out;
    for (int i = 0; i < static_cast<int>(p.relators.size()); ++i) {
      if (i == best_r) continue;
      Word w;
      for (int x : p.relators[i]) {
        if (x == best_g) {
          w.insert(w.end(), value.begin(), value.end());
        } else if (x == -best_g) {
          w.insert(w.end(), value_inv.begin(), value_inv.end());
        } else {
          w.push_back(x);
        }
      }
      out.push_back(std::move(w));
    }
    // Renumber the generators above best_g.
    for (auto& w : out)
      for (int& x : w)
        if (std::abs(x) > best_g) x += x > 0 ? -1 : 1;
    p.relators.swap(out);
    p.names.erase(p.names.begin() + (best_g - 1));
    --p.generators;
  }
  normalize(p);
  return p;
}

std::vector<Integer> abelianization(const GroupPresentation& p) {
  const int n = p.generators;
  std::vector<std::vector<Integer>> m;
  for (const auto& w : p.relators) {
    std::vector<Integer> row(n, 0);
    for (int x : w) row[std::abs(x) - 1] += x > 0 ? 1 : -1;
    if (std::any_of(row.begin(), row.end(), [](const Integer& v) { return v != 0; })) m.push_back(row);
  }
  const int rows = static_cast<int>(m.size());
  std::vector<Integer> diag;
  for (int t = 0; t < std::min(rows, n); ++t) {
    // Pivot: smallest nonzero magnitude in the remaining block.
    for (;;) {
      int pr = -1, pc = -1;
      for (int i = t; i < rows; ++i)
        for (int j = t; j < n; ++j)
          if (m[i][j] != 0 && (pr < 0 || abs(m[i][j]) < abs(m[pr][pc]))) {
            pr = i;
            pc = j;
          }
      if (pr < 0) goto done;
      std::swap(m[t], m[pr]);
      for (auto& row : m) std::swap(row[t], row[pc]);
      bool clean = true;
      for (int i = t + 1; i < rows; ++i) {
        Integer q = m[i][t] / m[t][t];
        if (q != 0)
          for (int j = t; j < n; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) clean = false;
      }
      for (int j = t + 1; j < n; ++j) {
        Integer q = m[t][j] / m[t][t];
        if (q != 0)
          for (int i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) clean = false;
      }
      if (clean) break;
    }
    diag.push_back(abs(m[t][t]));
  }
done:
  // Restore the divisibility chain.
  for (size_t i = 0; i < diag.size(); ++i)
    for (size_t j = i + 1; j < diag.size(); ++j) {
      Integer g = boost::multiprecision::gcd(diag[i], diag[j]);
      Integer l = diag[i] / g * diag[j];
      diag[i] = g;
      diag[j] = l;
    }
  std::vector<Integer> out;
  for (const auto& d : diag)
    if (d > 1) out.push_back(d);
  for (int k = static_cast<int>(diag.size()); k < n; ++k) out.push_back(0);
  return out;
}

std::uint64_t count_homs(const GroupPresentation& p, int degree, const HomOptions& opts) {
  if (degree < 1 || degree > 5) throw std::invalid_argument("degree must be between 1 and 5");
  if (p.generators > opts.max_generators)
    throw std::invalid_argument("generator count " + std::to_string(p.generators) + " above cap " +
                                std::to_string(opts.max_generators) + "; simplify first");
  std::vector<std::vector<int>> perms;
  std::vector<int> perm(degree);
  std::iota(perm.begin(), perm.end(), 0);
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));
  const int order = static_cast<int>(perms.size());
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < order; ++i) index[perms[i]] = i;
  std::vector<int> mul(order * order), inv(order);
  for (int i = 0; i < order; ++i) {
    std::vector<int> c(degree), v(degree);
    for (int j = 0; j < order; ++j) {
      for (int x = 0; x < degree; ++x) c[x] = perms[i][perms[j][x]];
      mul[i * order + j] = index[c];
    }
    for (int x = 0; x < degree; ++x) v[perms[i][x]] = x;
    inv[i] = index[v];
  }
  const int identity = 0;  // the sorted permutation comes first

  const int n = p.generators;
  std::vector<std::vector<const Word*>> check_at(std::max(n, 1));
  for (const auto& w : p.relators) {
    if (w.empty()) continue;
    int top = 0;
    for (int x : w) top = std::max(top, std::abs(x));
    check_at[top - 1].push_back(&w);
  }
  std::vector<int> image(n);
  std::uint64_t count = 0;
  auto holds = [&](const Word& w) {
    int acc = identity;
    for (int x : w) acc = mul[acc * order + (x > 0 ? image[x - 1] : inv[image[-x - 1]])];
    return acc == identity;
  };
  auto rec = [&](auto&& self, int k) -> void {
    if (k == n) {
      ++count;
      return;
    }
    for (int e = 0; e < order; ++e) {
      image[k] = e;
      bool ok = true;
      for (const Word* w : check_at[k])
        if (!holds(*w)) {
          ok = false;
          break;
        }
      if (ok) self(self, k + 1);
    }
  };
  rec(rec, 0);
  return count;
}

}  // namespace twistlink
