#pragma once

#include <string>
#include <vector>

#include "twistlink/diagram.hpp"
#include "twistlink/poly.hpp"

namespace twistlink {

/// Relators are words of signed 1-based generator indices.
struct GroupPresentation {
  int generators = 0;
  std::vector<std::string> names;
  std::vector<std::vector<int>> relators;
  /// Set by tietze_simplify when the step budget ran out.
  bool budget_exhausted = false;

  /// "< a, b | a^2 b^-1 a^-2 b >"
  std::string to_string() const;
};

GroupPresentation twisted_group(const AbstractLink& a);

enum class Level { upper, lower };

/// Wirtinger presentation on one level, ignoring bars.
GroupPresentation virtual_group(const AbstractLink& a, Level level);

GroupPresentation tietze_simplify(const GroupPresentation& p, int budget = 10000);

/// Invariant factors d1 | d2 | ... (values > 1), followed by one 0 per free
/// rank.
std::vector<Integer> abelianization(const GroupPresentation& p);

struct HomOptions {
  int max_generators = 6;
};

/// Homomorphisms into the symmetric group on `degree` points (degree <= 5).
std::uint64_t count_homs(const GroupPresentation& p, int degree, const HomOptions& opts = {});

}  // namespace twistlink
