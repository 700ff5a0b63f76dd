#pragma once

#include <cstdint>
#include <optional>

#include "twistlink/diagram.hpp"
#include "twistlink/poly.hpp"

namespace twistlink {

/// Circle counts of one smoothing state. Bit i of `state` is 0 for the
/// a-smoothing at crossing i and 1 for the b-smoothing.
struct StateSummary {
  std::uint64_t state = 0;
  int a_count = 0;
  int b_count = 0;
  int even_circles = 0;
  int odd_circles = 0;
};

struct BracketOptions {
  int max_crossings = 24;
  /// Worker threads for the state sum; 0 picks the hardware concurrency.
  unsigned threads = 1;
};

class StateSpaceTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The a-smoothing joins slots {0,1} and {2,3}; the b-smoothing joins
/// {0,3} and {1,2}. At a positive crossing the a-smoothing follows the
/// orientation.
StateSummary state_summary(const AbstractLink& a, std::uint64_t state);

/// Sum over the states in [first, last).
LaurentBipoly bracket_range(const AbstractLink& a, std::uint64_t first, std::uint64_t last);

LaurentBipoly bracket(const AbstractLink& a, const BracketOptions& opts = {});

/// (-A)^(-3w) times the bracket.
LaurentBipoly twisted_jones(const AbstractLink& a, const BracketOptions& opts = {});

/// Twisted Jones with M replaced by -A^-2 - A^2, divided by -A^-2 - A^2.
std::optional<LaurentBipoly> jones(const AbstractLink& a, const BracketOptions& opts = {});

/// Every A exponent of j is 0 mod 4 for an odd number of components and
/// 2 mod 4 for an even number.
bool kamada_check(const LaurentBipoly& j, int components);

}  // namespace twistlink
