#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "normed/normed.hpp"
#include "normed/sampling.hpp"

namespace normed::testing {

inline Rational q(const char* text) { return parse_rational(text); }

inline NormedSet set_of(std::initializer_list<std::pair<const char*, const char*>> entries) {
  std::vector<NormedSet::Element> elements;
  for (const auto& [label, norm] : entries) elements.push_back({label, parse_rational(norm)});
  return NormedSet(std::move(elements));
}

inline NormedMap map_of(const NormedSet& domain, const NormedSet& codomain,
                        std::initializer_list<std::pair<std::string, std::string>> pairs) {
  const std::vector<std::pair<std::string, std::string>> table(pairs);
  return NormedMap::from_labels(domain, codomain, table);
}

// crh computed by listing every ratio, independent of bound_constant.
inline Bound ratio_oracle(const NormedMap& map) {
  Rational best = 0;
  for (std::size_t s = 0; s < map.domain().size(); ++s) {
    const Rational& f = map.domain().norm(s);
    const Rational& g = map.codomain().norm(map(s));
    if (f == 0) {
      if (g != 0) return Bound::unbounded();
    } else if (g / f > best) {
      best = g / f;
    }
  }
  return Bound(best);
}

}  // namespace normed::testing
