#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "normed/category.hpp"
#include "normed/normed_map.hpp"
#include "normed/normed_set.hpp"

/// Brute-force oracles over a finite universe of small normed sets. They
/// decide categorical properties by enumerating maps, without using the
/// closed-form characterizations in category.hpp.
namespace normed::verification {

struct Universe {
  std::size_t max_size = 3;
  std::vector<Rational> palette{Rational(0), Rational(1, 2), Rational(1), Rational(2), Rational(3)};
};

/// Every normed set with at most `universe.max_size` elements labelled
/// "u0", "u1", ... and norms from the palette.
std::vector<NormedSet> enumerate_sets(const Universe& universe);

/// Calls `visit` on every function table S -> T; stops early when `visit`
/// returns false. Returns false iff stopped early.
bool for_each_function(std::size_t domain_size, std::size_t codomain_size,
                       const std::function<bool(const std::vector<std::size_t>&)>& visit);

std::vector<NormedMap> all_maps(const NormedSet& domain, const NormedSet& codomain);
std::vector<NormedMap> contractive_maps(const NormedSet& domain, const NormedSet& codomain);
std::vector<NormedMap> bounded_maps(const NormedSet& domain, const NormedSet& codomain);

enum class Category { contractive, bounded };

/// Morphism flags decided from the definitions: mono/epi by cancellation
/// against all test maps from/to objects of `test_objects`, sections and
/// retractions by searching all one-sided inverses, iso by a two-sided one.
category::MorphismFlags brute_force_flags(const NormedMap& map, Category category,
                                          const std::vector<NormedSet>& test_objects);

struct UniversalPropertyReport {
  std::size_t apexes = 0;
  std::size_t cones = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

/// Existence and uniqueness of a contractive mediating map for every
/// contractive (co)cone with apex in `apexes`. `inputs` are the factors or
/// summands; for (co)equalizers `parallel` holds the pair of maps.
UniversalPropertyReport verify_product(const category::ConstructionResult& result,
                                       const std::vector<NormedSet>& factors, const std::vector<NormedSet>& apexes);
UniversalPropertyReport verify_coproduct(const category::ConstructionResult& result,
                                         const std::vector<NormedSet>& summands,
                                         const std::vector<NormedSet>& apexes);
UniversalPropertyReport verify_equalizer(const category::ConstructionResult& result, const NormedMap& first,
                                         const NormedMap& second, const std::vector<NormedSet>& apexes);
UniversalPropertyReport verify_coequalizer(const category::ConstructionResult& result, const NormedMap& first,
                                           const NormedMap& second, const std::vector<NormedSet>& apexes);

/// A failed lifting square: epi `cover` : A -> B and `target` : S -> B
/// with no contractive lift S -> A.
struct LiftingObstruction {
  NormedMap cover;
  NormedMap target;
};

/// Searches epis between objects of `test_objects`. An empty result means
/// every square lifted.
std::optional<LiftingObstruction> find_projectivity_obstruction(const NormedSet& set,
                                                               const std::vector<NormedSet>& test_objects);

struct ExtensionObstruction {
  NormedMap embedding;
  NormedMap target;
};

std::optional<ExtensionObstruction> find_injectivity_obstruction(const NormedSet& set,
                                                                const std::vector<NormedSet>& test_objects);

/// Test palette for the lifting search: {0, 1, 2} plus the level
/// floor(max f) + 1 that exceeds every norm of `set`.
Universe lifting_universe(const NormedSet& set, std::size_t max_size = 2);

}  // namespace normed::verification
