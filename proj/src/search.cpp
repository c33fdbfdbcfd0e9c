#include "krasner/search.hpp"

#include <algorithm>

namespace krasner {

std::string_view to_string(SupportPolicy policy) {
  return policy == SupportPolicy::SingletonOnly ? "singleton-only" : "any-nonempty";
}

SupportPolicy support_policy_from_string(std::string_view s) {
  if (s == "singleton-only" || s == "singleton") return SupportPolicy::SingletonOnly;
  if (s == "any-nonempty" || s == "any") return SupportPolicy::AnyNonEmpty;
  throw UsageError("unknown support policy '" + std::string(s) +
                   "' (expected singleton-only|any-nonempty)");
}

namespace {

struct EntryChoice {
  ElemSet support;
  Grade grade;
};

std::vector<Grade> dedup_grid(const std::vector<Grade>& grid) {
  std::vector<Grade> out;
  for (const Grade& g : grid) {
    if (g.is_zero()) throw UsageError("grade grid must lie in (0,1]");
    if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
  }
  if (out.empty()) throw UsageError("grade grid must be non-empty");
  return out;
}

// Candidate supports in ascending bitmask order, then grid grades in order.
std::vector<EntryChoice> entry_choices(int size, SupportPolicy policy,
                                       const std::vector<Grade>& grid) {
  std::vector<ElemSet> supports;
  if (policy == SupportPolicy::SingletonOnly) {
    for (Elem a = 0; a < size; ++a) supports.push_back(ElemSet::single(a));
  } else {
    const std::uint64_t limit = std::uint64_t{1} << size;
    for (std::uint64_t bits = 1; bits < limit; ++bits) {
      ElemSet s;
      for (int a = 0; a < size; ++a) {
        if (bits & (std::uint64_t{1} << a)) s.add(a);
      }
      supports.push_back(s);
    }
  }
  std::vector<EntryChoice> out;
  out.reserve(supports.size() * grid.size());
  for (const ElemSet& s : supports) {
    for (const Grade& g : grid) out.push_back({s, g});
  }
  return out;
}

// Sorted representative tuples of all size-k multisets, lexicographically.
std::vector<std::vector<Elem>> multiset_slots(int size, int k) {
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> tuple(static_cast<std::size_t>(k), 0);
  do {
    if (std::is_sorted(tuple.begin(), tuple.end())) out.push_back(tuple);
  } while (next_tuple(tuple, size));
  return out;
}

// Involutions fixing element 0, as map vectors in lexicographic order.
std::vector<std::vector<Elem>> involutions_fixing_zero(int size) {
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> map(static_cast<std::size_t>(size), -1);
  map[0] = 0;
  auto rec = [&](auto&& self, int a) -> void {
    if (a == size) {
      out.push_back(map);
      return;
    }
    if (map[static_cast<std::size_t>(a)] >= 0) {
      self(self, a + 1);
      return;
    }
    for (Elem b = a; b < size; ++b) {
      if (b != a && map[static_cast<std::size_t>(b)] >= 0) continue;
      map[static_cast<std::size_t>(a)] = b;
      map[static_cast<std::size_t>(b)] = a;
      self(self, a + 1);
      map[static_cast<std::size_t>(a)] = -1;
      if (b != a) map[static_cast<std::size_t>(b)] = -1;
    }
  };
  rec(rec, 1);
  return out;
}

// The identity-row and absorbing-row supports are forced by the axioms; only
// their grades stay free. Returns the admissible choice indices for a slot.
std::vector<std::size_t> admissible(const std::vector<EntryChoice>& choices,
                                    const std::vector<Elem>& slot, bool is_f) {
  std::optional<ElemSet> forced;
  if (is_f) {
    // multiset {a, e^(m-1)}: sorted tuple is (0,...,0,a).
    const bool identity_row =
        std::all_of(slot.begin(), slot.end() - 1, [](Elem v) { return v == 0; });
    if (identity_row) forced = ElemSet::single(slot.back());
  } else {
    if (slot.front() == 0) forced = ElemSet::single(0);
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < choices.size(); ++i) {
    if (!forced || choices[i].support == *forced) out.push_back(i);
  }
  return out;
}

HyperOperationTable table_from_slots(const Carrier::Ptr& carrier, int arity,
                                     const std::vector<std::vector<Elem>>& slots,
                                     const std::vector<EntryChoice>& choices,
                                     const std::vector<std::vector<std::size_t>>& admissible_ids,
                                     const std::vector<std::size_t>& picks) {
  const int size = carrier->size();
  std::size_t count = 1;
  for (int i = 0; i < arity; ++i) count *= static_cast<std::size_t>(size);
  std::vector<FuzzySubset> entries(count, FuzzySubset::zero(carrier));

  std::vector<Elem> tuple(static_cast<std::size_t>(arity), 0);
  std::vector<Elem> sorted(static_cast<std::size_t>(arity), 0);
  do {
    sorted = tuple;
    std::sort(sorted.begin(), sorted.end());
    const auto slot_it = std::lower_bound(slots.begin(), slots.end(), sorted);
    const auto slot_index = static_cast<std::size_t>(slot_it - slots.begin());
    const EntryChoice& choice = choices[admissible_ids[slot_index][picks[slot_index]]];
    std::size_t index = 0;
    for (const Elem a : tuple) index = index * static_cast<std::size_t>(size) + static_cast<std::size_t>(a);
    entries[index] = FuzzySubset::threshold_set(carrier, choice.support, choice.grade);
  } while (next_tuple(tuple, size));
  return HyperOperationTable(carrier, arity, std::move(entries));
}

std::optional<Elem> detect_scalar_identity(const KrasnerStructure& R) {
  const int n = R.n();
  for (Elem cand = 0; cand < R.size(); ++cand) {
    std::vector<Elem> tuple(static_cast<std::size_t>(n), cand);
    bool ok = true;
    for (Elem a = 0; a < R.size() && ok; ++a) {
      tuple[0] = a;
      ok = R.g.support_at(tuple) == ElemSet::single(a);
    }
    if (ok) return cand;
  }
  return std::nullopt;
}

}  // namespace

EnumerationResult enumerate_structures(const SearchSpace& space) {
  if (space.carrier_size < 1) throw UsageError("carrier size must be at least 1");
  if (space.m < 2 || space.n < 2) throw UsageError("arities must be at least 2");
  const auto grid = dedup_grid(space.grade_grid);

  std::vector<std::string> labels;
  for (int i = 0; i < space.carrier_size; ++i) labels.push_back(std::to_string(i));
  const auto carrier = Carrier::make(std::move(labels));

  const auto choices = entry_choices(space.carrier_size, space.support_policy, grid);
  const auto f_slots = multiset_slots(space.carrier_size, space.m);
  const auto g_slots = multiset_slots(space.carrier_size, space.n);

  std::vector<std::vector<std::size_t>> f_adm, g_adm;
  for (const auto& slot : f_slots) f_adm.push_back(admissible(choices, slot, true));
  for (const auto& slot : g_slots) g_adm.push_back(admissible(choices, slot, false));

  const auto negations = involutions_fixing_zero(space.carrier_size);

  EnumerationResult result;
  const std::size_t slot_total = f_slots.size() + g_slots.size();
  for (const auto& negation : negations) {
    std::vector<std::size_t> picks(slot_total, 0);
    auto adm_of = [&](std::size_t s) -> const std::vector<std::size_t>& {
      return s < f_slots.size() ? f_adm[s] : g_adm[s - f_slots.size()];
    };
    for (;;) {
      if (result.candidates >= space.budget) {
        result.truncated = true;
        return result;
      }
      ++result.candidates;

      std::vector<std::size_t> f_picks(picks.begin(), picks.begin() + static_cast<std::ptrdiff_t>(f_slots.size()));
      std::vector<std::size_t> g_picks(picks.begin() + static_cast<std::ptrdiff_t>(f_slots.size()), picks.end());
      KrasnerStructure candidate(
          carrier, table_from_slots(carrier, space.m, f_slots, choices, f_adm, f_picks),
          table_from_slots(carrier, space.n, g_slots, choices, g_adm, g_picks),
          /*identity=*/0, negation, std::nullopt, EqMode::Support);
      candidate.scalar_identity = detect_scalar_identity(candidate);
      if (validate_structure(candidate).all_pass()) {
        result.structures.push_back(std::move(candidate));
      }

      // Odometer over slot picks, rightmost fastest.
      std::size_t s = slot_total;
      bool rolled = true;
      while (s > 0) {
        --s;
        if (++picks[s] < adm_of(s).size()) {
          rolled = false;
          break;
        }
        picks[s] = 0;
      }
      if (rolled) break;
    }
  }
  return result;
}

const std::vector<std::string>& witness_predicates() {
  static const std::vector<std::string> predicates = {
      "primary-not-prime", "ideal-not-primary", "prime-not-maximal", "unique-maximal"};
  return predicates;
}

namespace {

std::optional<ElemSet> witness_ideal(const KrasnerStructure& R, std::string_view predicate) {
  IdealLattice lattice = enumerate_ideals(R);
  const ElemSet whole = R.carrier->all();
  if (predicate == "primary-not-prime" || predicate == "ideal-not-primary") {
    if (!R.scalar_identity) return std::nullopt;
    for (const ElemSet& ideal : lattice.ideals) {
      if (ideal == whole) continue;
      const bool primary = is_primary(R, ideal, true);
      if (predicate == "primary-not-prime" ? (primary && !is_prime(R, ideal, true)) : !primary) {
        return ideal;
      }
    }
    return std::nullopt;
  }
  if (predicate == "prime-not-maximal") {
    for (const ElemSet& ideal : lattice.ideals) {
      if (is_prime(R, ideal, true) && !is_maximal(lattice, ideal)) return ideal;
    }
    return std::nullopt;
  }
  if (predicate == "unique-maximal") {
    std::vector<ElemSet> maximal;
    for (const ElemSet& ideal : lattice.ideals) {
      if (is_maximal(lattice, ideal)) maximal.push_back(ideal);
    }
    if (maximal.size() == 1) return maximal.front();
    return std::nullopt;
  }
  throw UsageError("unknown witness predicate '" + std::string(predicate) + "'");
}

}  // namespace

WitnessResult find_witness(const SearchSpace& space, std::string_view predicate) {
  if (std::find(witness_predicates().begin(), witness_predicates().end(), predicate) ==
      witness_predicates().end()) {
    throw UsageError("unknown witness predicate '" + std::string(predicate) + "'");
  }
  const EnumerationResult enumerated = enumerate_structures(space);
  for (const KrasnerStructure& R : enumerated.structures) {
    if (auto ideal = witness_ideal(R, predicate)) {
      return {StructureWitness{R, *ideal}, false};
    }
  }
  return {std::nullopt, enumerated.truncated};
}

WitnessResult find_witness_in(std::span<const KrasnerStructure> structures,
                              std::string_view predicate) {
  if (std::find(witness_predicates().begin(), witness_predicates().end(), predicate) ==
      witness_predicates().end()) {
    throw UsageError("unknown witness predicate '" + std::string(predicate) + "'");
  }
  for (const KrasnerStructure& R : structures) {
    if (auto ideal = witness_ideal(R, predicate)) {
      return {StructureWitness{R, *ideal}, false};
    }
  }
  return {std::nullopt, false};
}

}  // namespace krasner
