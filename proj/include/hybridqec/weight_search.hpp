#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "hybridqec/pauli.hpp"

namespace hqec {

/// Outcome of a weight-ordered search.
struct WeightSearchResult {
  std::optional<std::size_t> weight;      // minimal weight found, if any
  std::size_t searched_to = 0;            // all weights <= this were examined
  std::optional<PauliOperator> witness;   // first operator of that weight
  /// True when `weight` is the exact minimum, or no witness exists at all.
  bool exhaustive = false;

  bool exact() const noexcept { return weight.has_value() || exhaustive; }
};

/// Finds the lightest nonidentity E with
///   pairing(h, E) = 0 for every h in `commute_with`, and
///   pairing(h, E) != 0 for some h in `anticommute_with` (skipped if empty),
/// trying weights 1..max_weight. Supports go in colexicographic order and
/// letters x*q+z ascending within a support, first qudit slowest.
WeightSearchResult min_weight_search(const FieldRef& spec, std::size_t n,
                                     std::span<const PauliOperator> commute_with,
                                     std::span<const PauliOperator> anticommute_with,
                                     std::size_t max_weight);

/// As min_weight_search, but an empty `anticommute_with` means no operator
/// qualifies, and the result is exhaustive with no witness.
WeightSearchResult min_weight_outside(const FieldRef& spec, std::size_t n,
                                      std::span<const PauliOperator> commute_with,
                                      std::span<const PauliOperator> anticommute_with,
                                      std::size_t max_weight);

}  // namespace hqec
