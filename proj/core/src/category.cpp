#include "normed/category.hpp"

#include <algorithm>
#include <numeric>

#include "normed/errors.hpp"

namespace normed::category {

namespace {

Bound lower_ratio(const NormedMap& map) {
  std::optional<Rational> best;
  for (std::size_t s = 0; s < map.domain().size(); ++s) {
    if (map.domain().is_zero_norm(s)) continue;
    Rational ratio = map.codomain().norm(map(s)) / map.domain().norm(s);
    if (!best || ratio < *best) best = std::move(ratio);
  }
  return best ? Bound(*best) : Bound::unbounded();
}

void require_parallel(const NormedMap& first, const NormedMap& second) {
  if (!(first.domain() == second.domain()) || !(first.codomain() == second.codomain())) {
    throw DomainError("maps are not parallel: domains or codomains differ");
  }
}

// Builds a set from (label, norm) rows given in construction order and
// returns the sorted index of each row.
std::pair<NormedSet, std::vector<std::size_t>> build_indexed(std::vector<NormedSet::Element> rows) {
  std::vector<std::string> labels;
  labels.reserve(rows.size());
  for (const auto& r : rows) labels.push_back(r.label);
  NormedSet set(std::move(rows));
  std::vector<std::size_t> index(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) index[i] = set.index_of(labels[i]);
  return {std::move(set), std::move(index)};
}

}  // namespace

std::string to_string(ConstructionKind kind) {
  switch (kind) {
    case ConstructionKind::product:
      return "product";
    case ConstructionKind::coproduct:
      return "coproduct";
    case ConstructionKind::equalizer:
      return "equalizer";
    case ConstructionKind::coequalizer:
      return "coequalizer";
  }
  return "unknown";
}

MorphismReport classify(const NormedMap& map) {
  const NormedSet& S = map.domain();
  const NormedSet& T = map.codomain();

  MorphismReport report;
  report.injective = map.is_injective();
  report.surjective = map.is_surjective();
  report.norm_preserving = map.is_norm_preserving();
  report.crh = map.crh();
  report.lambda = lower_ratio(map);

  std::vector<bool> in_image(T.size(), false);
  for (std::size_t s = 0; s < S.size(); ++s) in_image[map(s)] = true;
  std::vector<NormedSet::Element> rest;
  for (std::size_t t = 0; t < T.size(); ++t) {
    if (!in_image[t]) rest.push_back({T.label(t), T.norm(t)});
  }
  report.complement = NormedSet(std::move(rest));
  const NormedSet& K = report.complement;

  if (map.is_contractive()) {
    MorphismFlags flags;
    flags.mono = report.injective;
    flags.epi = report.surjective;
    // every t outside the image needs some s_t with f(s_t) <= g(t)
    bool complement_reachable = true;
    for (std::size_t k = 0; k < K.size(); ++k) {
      bool found = false;
      for (std::size_t s = 0; s < S.size() && !found; ++s) found = S.norm(s) <= K.norm(k);
      complement_reachable = complement_reachable && found;
    }
    flags.section = report.injective && report.norm_preserving && complement_reachable;
    bool norm_matching_preimages = true;
    for (std::size_t t = 0; t < T.size(); ++t) {
      bool found = false;
      for (std::size_t s = 0; s < S.size() && !found; ++s) found = map(s) == t && S.norm(s) == T.norm(t);
      norm_matching_preimages = norm_matching_preimages && found;
    }
    flags.retraction = norm_matching_preimages;
    flags.iso = report.injective && report.surjective && report.norm_preserving;
    report.contractive = flags;
  }

  if (map.is_bounded()) {
    MorphismFlags flags;
    flags.mono = report.injective;
    flags.epi = report.surjective;
    const bool lambda_positive = !report.lambda.is_bounded() || sgn(report.lambda.value()) > 0;
    // a bounded (K, h) -> (S, f) must send h = 0 points to f = 0 points
    bool complement_map_exists = true;
    if (!K.empty()) {
      const bool has_zero_target = std::any_of(S.elements().begin(), S.elements().end(),
                                               [](const NormedSet::Element& e) { return sgn(e.norm) == 0; });
      complement_map_exists = !S.empty() && (has_zero_target || !std::any_of(K.elements().begin(), K.elements().end(),
                                                                              [](const NormedSet::Element& e) {
                                                                                return sgn(e.norm) == 0;
                                                                              }));
    }
    flags.section = report.injective && lambda_positive && complement_map_exists;
    bool bounded_selection = true;
    for (std::size_t t = 0; t < T.size(); ++t) {
      bool found = false;
      for (std::size_t s = 0; s < S.size() && !found; ++s) {
        found = map(s) == t && (sgn(T.norm(t)) != 0 || S.is_zero_norm(s));
      }
      bounded_selection = bounded_selection && found;
    }
    flags.retraction = bounded_selection;
    flags.iso = report.injective && report.surjective && lambda_positive;
    report.bounded = flags;
  }
  return report;
}

ConstructionResult product(const std::vector<NormedSet>& factors) {
  std::vector<NormedSet::Element> rows;
  std::vector<std::vector<std::size_t>> tuples;
  const bool any_empty = std::any_of(factors.begin(), factors.end(), [](const NormedSet& f) { return f.empty(); });
  if (!any_empty) {
    std::vector<std::size_t> odometer(factors.size(), 0);
    while (true) {
      std::vector<std::string> parts;
      Rational norm = 0;
      for (std::size_t i = 0; i < factors.size(); ++i) {
        parts.push_back(factors[i].label(odometer[i]));
        norm = std::max(norm, factors[i].norm(odometer[i]));
      }
      rows.push_back({tuple_label(parts), norm});
      tuples.push_back(odometer);
      std::size_t i = 0;
      while (i < factors.size() && ++odometer[i] == factors[i].size()) odometer[i++] = 0;
      if (i == factors.size()) break;
    }
  }
  auto [object, index] = build_indexed(std::move(rows));
  std::vector<NormedMap> legs;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    std::vector<std::size_t> table(object.size());
    for (std::size_t row = 0; row < tuples.size(); ++row) table[index[row]] = tuples[row][i];
    legs.emplace_back(object, factors[i], std::move(table));
  }
  return {ConstructionKind::product, std::move(object), std::move(legs)};
}

ConstructionResult coproduct(const std::vector<NormedSet>& summands) {
  std::vector<NormedSet::Element> rows;
  for (std::size_t i = 0; i < summands.size(); ++i) {
    for (const auto& e : summands[i].elements()) rows.push_back({tagged_label(i, e.label), e.norm});
  }
  auto [object, index] = build_indexed(std::move(rows));
  std::vector<NormedMap> legs;
  std::size_t row = 0;
  for (const auto& summand : summands) {
    std::vector<std::size_t> table(summand.size());
    for (std::size_t s = 0; s < summand.size(); ++s) table[s] = index[row++];
    legs.emplace_back(summand, object, std::move(table));
  }
  return {ConstructionKind::coproduct, std::move(object), std::move(legs)};
}

ConstructionResult equalizer(const NormedMap& first, const NormedMap& second) {
  require_parallel(first, second);
  const NormedSet& S = first.domain();
  std::vector<NormedSet::Element> rows;
  std::vector<std::size_t> kept;
  for (std::size_t s = 0; s < S.size(); ++s) {
    if (first(s) == second(s)) {
      rows.push_back({S.label(s), S.norm(s)});
      kept.push_back(s);
    }
  }
  // labels are inherited, so sorted order is preserved
  NormedSet object(std::move(rows));
  std::vector<NormedMap> legs;
  legs.emplace_back(object, S, std::move(kept));
  return {ConstructionKind::equalizer, std::move(object), std::move(legs)};
}

ConstructionResult coequalizer(const NormedMap& first, const NormedMap& second) {
  require_parallel(first, second);
  const NormedSet& T = first.codomain();
  std::vector<std::size_t> parent(T.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t s = 0; s < first.domain().size(); ++s) {
    const std::size_t a = root(first(s));
    const std::size_t b = root(second(s));
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::vector<std::size_t>> classes;
  std::vector<std::size_t> class_of(T.size());
  std::vector<std::size_t> class_by_root(T.size(), static_cast<std::size_t>(-1));
  for (std::size_t t = 0; t < T.size(); ++t) {
    const std::size_t r = root(t);
    if (class_by_root[r] == static_cast<std::size_t>(-1)) {
      class_by_root[r] = classes.size();
      classes.emplace_back();
    }
    class_of[t] = class_by_root[r];
    classes[class_of[t]].push_back(t);
  }
  std::vector<NormedSet::Element> rows;
  for (const auto& members : classes) {
    std::vector<std::string> labels;
    Rational norm = T.norm(members.front());
    for (std::size_t t : members) {
      labels.push_back(T.label(t));
      norm = std::min(norm, T.norm(t));
    }
    rows.push_back({class_label(labels), norm});
  }
  auto [object, index] = build_indexed(std::move(rows));
  std::vector<std::size_t> table(T.size());
  for (std::size_t t = 0; t < T.size(); ++t) table[t] = index[class_of[t]];
  std::vector<NormedMap> legs;
  legs.emplace_back(T, object, std::move(table));
  return {ConstructionKind::coequalizer, std::move(object), std::move(legs)};
}

SingletonDecomposition singleton_decomposition(const NormedSet& set) {
  std::vector<NormedSet> singletons;
  for (const auto& e : set.elements()) singletons.push_back(NormedSet({e}));
  ConstructionResult sum = coproduct(singletons);
  std::vector<std::size_t> table(sum.object.size());
  for (std::size_t i = 0; i < set.size(); ++i) table[sum.legs[i](0)] = i;
  NormedMap comparison(sum.object, set, std::move(table));
  return {std::move(sum), std::move(comparison)};
}

bool is_projective_cset1(const NormedSet& set) { return set.empty(); }

bool is_injective_cset1(const NormedSet& set) { return !set.empty() && set.all_zero(); }

}  // namespace normed::category
