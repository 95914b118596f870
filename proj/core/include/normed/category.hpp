#pragma once

#include <optional>
#include <string>
#include <vector>

#include "normed/normed_map.hpp"
#include "normed/normed_set.hpp"

namespace normed::category {

/// Standard morphism types in one category (CSet_1 or CSet_inf).
struct MorphismFlags {
  bool mono = false;
  bool epi = false;
  bool section = false;
  bool retraction = false;
  bool iso = false;

  friend bool operator==(const MorphismFlags&, const MorphismFlags&) = default;
};

struct MorphismReport {
  bool injective = false;
  bool surjective = false;
  bool norm_preserving = false;
  Bound crh = Bound::unbounded();
  /// min{ g(phi(s)) / f(s) : f(s) != 0 }; the unbounded marker stands for
  /// the infimum of the empty set.
  Bound lambda = Bound::unbounded();
  /// (K, h) = (T \ phi(S), g restricted to K).
  NormedSet complement;
  /// Present only when the map is contractive.
  std::optional<MorphismFlags> contractive;
  /// Present only when the map is bounded.
  std::optional<MorphismFlags> bounded;
};

/// Evaluates the closed-form characterizations of mono, epi, section,
/// retraction and iso in both categories.
MorphismReport classify(const NormedMap& map);

enum class ConstructionKind { product, coproduct, equalizer, coequalizer };

std::string to_string(ConstructionKind kind);

struct ConstructionResult {
  ConstructionKind kind;
  NormedSet object;
  /// Projections, injections, the equalizer inclusion, or the quotient map.
  std::vector<NormedMap> legs;
};

/// Set of label tuples with the max norm; legs are the projections. The
/// empty family gives the terminal singleton with norm 0.
ConstructionResult product(const std::vector<NormedSet>& factors);

/// Disjoint union with inherited norms; labels are tagged "i:label".
ConstructionResult coproduct(const std::vector<NormedSet>& summands);

/// {s : first(s) == second(s)} with the restricted norm and its inclusion.
/// Throws DomainError if the maps are not parallel.
ConstructionResult equalizer(const NormedMap& first, const NormedMap& second);

/// Codomain modulo the equivalence generated by first(s) ~ second(s); a
/// class carries the least norm among its members.
ConstructionResult coequalizer(const NormedMap& first, const NormedMap& second);

struct SingletonDecomposition {
  ConstructionResult coproduct;
  /// The comparison map from the coproduct back onto `set`.
  NormedMap comparison;
};

/// Writes `set` as the coproduct of its singletons.
SingletonDecomposition singleton_decomposition(const NormedSet& set);

/// Projective relative to all epimorphisms in CSet_1: S is empty.
bool is_projective_cset1(const NormedSet& set);
/// Injective relative to all monomorphisms in CSet_1: S nonempty and f = 0.
bool is_injective_cset1(const NormedSet& set);

}  // namespace normed::category
