#ifndef KRASNER_SEARCH_HPP
#define KRASNER_SEARCH_HPP

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "krasner/ideals.hpp"
#include "krasner/structure.hpp"

namespace krasner {

enum class SupportPolicy { SingletonOnly, AnyNonEmpty };

std::string_view to_string(SupportPolicy policy);
SupportPolicy support_policy_from_string(std::string_view s);

/// Finite candidate space of Krasner structures: table entries are threshold
/// sets H_t with H drawn per the support policy and t from the grade grid.
struct SearchSpace {
  int carrier_size = 2;
  int m = 2;
  int n = 2;
  std::vector<Grade> grade_grid = {Grade::one()};
  SupportPolicy support_policy = SupportPolicy::SingletonOnly;
  std::uint64_t budget = 1'000'000;  // max complete candidate table pairs examined
};

struct EnumerationResult {
  std::vector<KrasnerStructure> structures;
  bool truncated = false;        // budget ran out before the space was exhausted
  std::uint64_t candidates = 0;  // complete candidates examined
};

// Yields every candidate passing validate_structure in support mode, in a
// deterministic order. The identity is pinned to element 0 and the identity /
// absorbing-row constraints prune candidates before completion; both are
// sound because every valid structure has these rows forced up to relabeling.
EnumerationResult enumerate_structures(const SearchSpace& space);

struct StructureWitness {
  KrasnerStructure structure;
  ElemSet ideal;
};

struct WitnessResult {
  std::optional<StructureWitness> witness;
  bool truncated = false;
};

const std::vector<std::string>& witness_predicates();

// First structure/ideal pair in enumeration order satisfying the named
// predicate (one of witness_predicates()), or absent within the budget.
WitnessResult find_witness(const SearchSpace& space, std::string_view predicate);

// Same search over an explicit list of structures, e.g. a ring-lift corpus.
WitnessResult find_witness_in(std::span<const KrasnerStructure> structures,
                              std::string_view predicate);

}  // namespace krasner

#endif  // KRASNER_SEARCH_HPP
