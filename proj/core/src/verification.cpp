#include "normed/verification.hpp"

#include <cmath>
#include <set>

namespace normed::verification {

using category::ConstructionResult;
using category::MorphismFlags;

namespace {

bool same_table(std::span<const std::size_t> a, std::span<const std::size_t> b) {
  return std::equal(a.begin(), a.end(), b.begin(), b.end());
}

std::vector<NormedMap> maps_where(const NormedSet& domain, const NormedSet& codomain,
                                  const std::function<bool(const NormedMap&)>& keep) {
  std::vector<NormedMap> out;
  for_each_function(domain.size(), codomain.size(), [&](const std::vector<std::size_t>& table) {
    NormedMap m(domain, codomain, table);
    if (keep(m)) out.push_back(std::move(m));
    return true;
  });
  return out;
}

std::vector<NormedMap> hom(const NormedSet& domain, const NormedSet& codomain, Category category) {
  return category == Category::contractive ? contractive_maps(domain, codomain) : bounded_maps(domain, codomain);
}

std::vector<std::size_t> composite_table(const NormedMap& second, const NormedMap& first) {
  std::vector<std::size_t> out(first.domain().size());
  for (std::size_t s = 0; s < out.size(); ++s) out[s] = second(first(s));
  return out;
}

bool is_identity_table(std::span<const std::size_t> table) {
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i] != i) return false;
  }
  return true;
}

// Counts the contractive maps with the given domain/codomain whose table
// satisfies `commutes`.
std::size_t count_mediators(const NormedSet& domain, const NormedSet& codomain,
                            const std::function<bool(const std::vector<std::size_t>&)>& commutes) {
  std::size_t found = 0;
  for_each_function(domain.size(), codomain.size(), [&](const std::vector<std::size_t>& table) {
    if (commutes(table) && NormedMap(domain, codomain, table).is_contractive()) ++found;
    return true;
  });
  return found;
}

void record(UniversalPropertyReport& report, const NormedSet& apex, std::size_t mediators) {
  ++report.cones;
  if (mediators != 1) {
    report.failures.push_back("apex of size " + std::to_string(apex.size()) + " admits " + std::to_string(mediators) +
                              " mediating maps");
  }
}

void check_legs(UniversalPropertyReport& report, const ConstructionResult& result, bool norm_preserving) {
  for (const auto& leg : result.legs) {
    if (!leg.is_contractive()) report.failures.push_back("leg is not contractive");
    if (norm_preserving && !leg.is_norm_preserving()) report.failures.push_back("leg is not norm preserving");
  }
}

// Visits every tuple (m_0, ..., m_{k-1}) with m_i drawn from options[i].
void for_each_tuple(const std::vector<std::vector<NormedMap>>& options,
                    const std::function<void(const std::vector<const NormedMap*>&)>& visit) {
  for (const auto& o : options) {
    if (o.empty()) return;
  }
  std::vector<std::size_t> odometer(options.size(), 0);
  std::vector<const NormedMap*> tuple(options.size());
  while (true) {
    for (std::size_t i = 0; i < options.size(); ++i) tuple[i] = &options[i][odometer[i]];
    visit(tuple);
    std::size_t i = 0;
    while (i < options.size() && ++odometer[i] == options[i].size()) odometer[i++] = 0;
    if (i == options.size()) return;
  }
}

}  // namespace

std::vector<NormedSet> enumerate_sets(const Universe& universe) {
  std::vector<NormedSet> out;
  const std::size_t k = universe.palette.size();
  for (std::size_t n = 0; n <= universe.max_size; ++n) {
    if (n > 0 && k == 0) break;
    std::vector<std::size_t> odometer(n, 0);
    while (true) {
      std::vector<NormedSet::Element> elements;
      for (std::size_t i = 0; i < n; ++i) elements.push_back({"u" + std::to_string(i), universe.palette[odometer[i]]});
      out.emplace_back(std::move(elements));
      std::size_t i = 0;
      while (i < n && ++odometer[i] == k) odometer[i++] = 0;
      if (i == n) break;
    }
  }
  return out;
}

bool for_each_function(std::size_t domain_size, std::size_t codomain_size,
                       const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  if (domain_size > 0 && codomain_size == 0) return true;
  std::vector<std::size_t> table(domain_size, 0);
  while (true) {
    if (!visit(table)) return false;
    std::size_t i = 0;
    while (i < domain_size && ++table[i] == codomain_size) table[i++] = 0;
    if (i == domain_size) return true;
  }
}

std::vector<NormedMap> all_maps(const NormedSet& domain, const NormedSet& codomain) {
  return maps_where(domain, codomain, [](const NormedMap&) { return true; });
}

std::vector<NormedMap> contractive_maps(const NormedSet& domain, const NormedSet& codomain) {
  return maps_where(domain, codomain, [](const NormedMap& m) { return m.is_contractive(); });
}

std::vector<NormedMap> bounded_maps(const NormedSet& domain, const NormedSet& codomain) {
  return maps_where(domain, codomain, [](const NormedMap& m) { return m.is_bounded(); });
}

MorphismFlags brute_force_flags(const NormedMap& map, Category category, const std::vector<NormedSet>& test_objects) {
  const NormedSet& S = map.domain();
  const NormedSet& T = map.codomain();
  MorphismFlags flags;

  flags.mono = true;
  for (const auto& X : test_objects) {
    std::set<std::vector<std::size_t>> composites;
    const auto maps = hom(X, S, category);
    for (const auto& alpha : maps) composites.insert(composite_table(map, alpha));
    if (composites.size() != maps.size()) {
      flags.mono = false;
      break;
    }
  }

  flags.epi = true;
  for (const auto& Y : test_objects) {
    std::set<std::vector<std::size_t>> composites;
    const auto maps = hom(T, Y, category);
    for (const auto& alpha : maps) composites.insert(composite_table(alpha, map));
    if (composites.size() != maps.size()) {
      flags.epi = false;
      break;
    }
  }

  for (const auto& psi : hom(T, S, category)) {
    const bool left = is_identity_table(composite_table(psi, map));
    const bool right = is_identity_table(composite_table(map, psi));
    flags.section = flags.section || left;
    flags.retraction = flags.retraction || right;
    flags.iso = flags.iso || (left && right);
  }
  return flags;
}

UniversalPropertyReport verify_product(const ConstructionResult& result, const std::vector<NormedSet>& factors,
                                       const std::vector<NormedSet>& apexes) {
  UniversalPropertyReport report;
  check_legs(report, result, false);
  for (const auto& X : apexes) {
    ++report.apexes;
    std::vector<std::vector<NormedMap>> options;
    for (const auto& F : factors) options.push_back(contractive_maps(X, F));
    for_each_tuple(options, [&](const std::vector<const NormedMap*>& cone) {
      const std::size_t n = count_mediators(X, result.object, [&](const std::vector<std::size_t>& m) {
        for (std::size_t i = 0; i < cone.size(); ++i) {
          for (std::size_t x = 0; x < m.size(); ++x) {
            if (result.legs[i](m[x]) != (*cone[i])(x)) return false;
          }
        }
        return true;
      });
      record(report, X, n);
    });
  }
  return report;
}

UniversalPropertyReport verify_coproduct(const ConstructionResult& result, const std::vector<NormedSet>& summands,
                                         const std::vector<NormedSet>& apexes) {
  UniversalPropertyReport report;
  check_legs(report, result, true);
  for (const auto& X : apexes) {
    ++report.apexes;
    std::vector<std::vector<NormedMap>> options;
    for (const auto& F : summands) options.push_back(contractive_maps(F, X));
    for_each_tuple(options, [&](const std::vector<const NormedMap*>& cocone) {
      const std::size_t n = count_mediators(result.object, X, [&](const std::vector<std::size_t>& m) {
        for (std::size_t i = 0; i < cocone.size(); ++i) {
          for (std::size_t s = 0; s < summands[i].size(); ++s) {
            if (m[result.legs[i](s)] != (*cocone[i])(s)) return false;
          }
        }
        return true;
      });
      record(report, X, n);
    });
  }
  return report;
}

UniversalPropertyReport verify_equalizer(const ConstructionResult& result, const NormedMap& first,
                                         const NormedMap& second, const std::vector<NormedSet>& apexes) {
  UniversalPropertyReport report;
  check_legs(report, result, true);
  const NormedMap& inclusion = result.legs.front();
  for (const auto& X : apexes) {
    ++report.apexes;
    for (const auto& alpha : contractive_maps(X, first.domain())) {
      if (!same_table(composite_table(first, alpha), composite_table(second, alpha))) continue;
      const std::size_t n = count_mediators(X, result.object, [&](const std::vector<std::size_t>& m) {
        for (std::size_t x = 0; x < m.size(); ++x) {
          if (inclusion(m[x]) != alpha(x)) return false;
        }
        return true;
      });
      record(report, X, n);
    }
  }
  return report;
}

UniversalPropertyReport verify_coequalizer(const ConstructionResult& result, const NormedMap& first,
                                           const NormedMap& second, const std::vector<NormedSet>& apexes) {
  UniversalPropertyReport report;
  check_legs(report, result, false);
  const NormedMap& quotient = result.legs.front();
  for (const auto& X : apexes) {
    ++report.apexes;
    for (const auto& alpha : contractive_maps(first.codomain(), X)) {
      if (!same_table(composite_table(alpha, first), composite_table(alpha, second))) continue;
      const std::size_t n = count_mediators(result.object, X, [&](const std::vector<std::size_t>& m) {
        for (std::size_t t = 0; t < first.codomain().size(); ++t) {
          if (m[quotient(t)] != alpha(t)) return false;
        }
        return true;
      });
      record(report, X, n);
    }
  }
  return report;
}

std::optional<LiftingObstruction> find_projectivity_obstruction(const NormedSet& set,
                                                               const std::vector<NormedSet>& test_objects) {
  for (const auto& A : test_objects) {
    for (const auto& B : test_objects) {
      for (const auto& cover : contractive_maps(A, B)) {
        if (!cover.is_surjective()) continue;
        for (const auto& target : contractive_maps(set, B)) {
          bool lifted = false;
          for (const auto& lift : contractive_maps(set, A)) {
            if (same_table(composite_table(cover, lift), target.assignment())) {
              lifted = true;
              break;
            }
          }
          if (!lifted) return LiftingObstruction{cover, target};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<ExtensionObstruction> find_injectivity_obstruction(const NormedSet& set,
                                                                const std::vector<NormedSet>& test_objects) {
  for (const auto& A : test_objects) {
    for (const auto& B : test_objects) {
      for (const auto& embedding : contractive_maps(A, B)) {
        if (!embedding.is_injective()) continue;
        for (const auto& target : contractive_maps(A, set)) {
          bool extended = false;
          for (const auto& extension : contractive_maps(B, set)) {
            if (same_table(composite_table(extension, embedding), target.assignment())) {
              extended = true;
              break;
            }
          }
          if (!extended) return ExtensionObstruction{embedding, target};
        }
      }
    }
  }
  return std::nullopt;
}

Universe lifting_universe(const NormedSet& set, std::size_t max_size) {
  Universe u;
  u.max_size = max_size;
  u.palette = {Rational(0), Rational(1), Rational(2)};
  Integer level;
  mpz_fdiv_q(level.get_mpz_t(), set.max_norm().get_num_mpz_t(), set.max_norm().get_den_mpz_t());
  const Rational top(level + 1);
  if (top > 2) u.palette.push_back(top);
  return u;
}

}  // namespace normed::verification
