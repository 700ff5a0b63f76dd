#include "twistlink/bracket.hpp"

#include <algorithm>
#include <map>
#include <thread>
#include <tuple>
#include <vector>

#include "union_find.hpp"

namespace twistlink {

namespace {

using Bin = std::tuple<int, int, int>;  // (a - b, even circles, odd circles)
using BinCounts = std::map<Bin, std::uint64_t>;

void check_size(const AbstractLink& a, int cap) {
  if (static_cast<int>(a.crossings.size()) > cap)
    throw StateSpaceTooLarge("state space too large: " + std::to_string(a.crossings.size()) +
                             " crossings exceed the cap of " + std::to_string(cap));
}

class StateCounter {
 public:
  explicit StateCounter(const AbstractLink& a) : link_(a), uf_(static_cast<int>(a.edges.size())) {}

  StateSummary run(std::uint64_t state) {
    StateSummary s;
    s.state = state;
    uf_.reset();
    for (std::size_t i = 0; i < link_.crossings.size(); ++i) {
      const auto& e = link_.crossings[i].edge;
      if ((state >> i) & 1u) {
        ++s.b_count;
        uf_.unite(e[0], e[3]);
        uf_.unite(e[1], e[2]);
      } else {
        ++s.a_count;
        uf_.unite(e[0], e[1]);
        uf_.unite(e[2], e[3]);
      }
    }
    parity_.assign(link_.edges.size(), -1);
    for (std::size_t i = 0; i < link_.edges.size(); ++i) {
      int r = uf_.find(static_cast<int>(i));
      parity_[r] = (parity_[r] < 0 ? 0 : parity_[r]) ^ link_.edges[i].parity;
    }
    for (int p : parity_) {
      if (p == 0) ++s.even_circles;
      if (p == 1) ++s.odd_circles;
    }
    return s;
  }

 private:
  const AbstractLink& link_;
  detail::UnionFind uf_;
  std::vector<int> parity_;
};

BinCounts count_bins(const AbstractLink& a, std::uint64_t first, std::uint64_t last) {
  BinCounts bins;
  StateCounter counter(a);
  for (std::uint64_t s = first; s < last; ++s) {
    auto sum = counter.run(s);
    ++bins[{sum.a_count - sum.b_count, sum.even_circles, sum.odd_circles}];
  }
  return bins;
}

LaurentBipoly bins_to_poly(const BinCounts& bins) {
  std::map<int, LaurentBipoly> delta_pow;
  LaurentBipoly out;
  for (const auto& [bin, count] : bins) {
    const auto [ab, c, d] = bin;
    auto it = delta_pow.find(c);
    if (it == delta_pow.end())
      it = delta_pow.emplace(c, LaurentBipoly::loop_value().pow(static_cast<unsigned>(c))).first;
    out += LaurentBipoly::monomial(Integer(count), ab, d) * it->second;
  }
  return out;
}

}  // namespace

StateSummary state_summary(const AbstractLink& a, std::uint64_t state) {
  if (a.crossings.size() >= 64 || state >> a.crossings.size())
    throw std::out_of_range("state index out of range");
  return StateCounter(a).run(state);
}

LaurentBipoly bracket_range(const AbstractLink& a, std::uint64_t first, std::uint64_t last) {
  return bins_to_poly(count_bins(a, first, last));
}

LaurentBipoly bracket(const AbstractLink& a, const BracketOptions& opts) {
  check_size(a, std::min(opts.max_crossings, 63));
  const std::uint64_t total = std::uint64_t{1} << a.crossings.size();
  unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(1, total / 4096)));
  if (threads <= 1) return bracket_range(a, 0, total);

  std::vector<BinCounts> partial(threads);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      partial[t] = count_bins(a, total * t / threads, total * (t + 1) / threads);
    });
  }
  for (auto& th : pool) th.join();
  BinCounts merged;
  for (const auto& p : partial)
    for (const auto& [bin, c] : p) merged[bin] += c;
  return bins_to_poly(merged);
}

LaurentBipoly twisted_jones(const AbstractLink& a, const BracketOptions& opts) {
  const int w = writhe(a);
  // (-A)^(-3w) = (-1)^w A^(-3w)
  return LaurentBipoly::monomial(w % 2 ? -1 : 1, -3 * w) * bracket(a, opts);
}

std::optional<LaurentBipoly> jones(const AbstractLink& a, const BracketOptions& opts) {
  const auto delta = LaurentBipoly::loop_value();
  return poly_div_exact(poly_eval_M(twisted_jones(a, opts), delta), delta);
}

bool kamada_check(const LaurentBipoly& j, int components) {
  const int want = components % 2 ? 0 : 2;
  return std::all_of(j.terms().begin(), j.terms().end(), [&](const auto& t) {
    return ((t.first.first % 4) + 4) % 4 == want;
  });
}

}  // namespace twistlink
