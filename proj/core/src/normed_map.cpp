#include "normed/normed_map.hpp"

#include <algorithm>
#include <stdexcept>

#include "normed/errors.hpp"

namespace normed {

std::string Bound::to_string(std::string_view unbounded_text) const {
  return value_ ? format_rational(*value_) : std::string(unbounded_text);
}

Bound bound_constant(std::span<const Rational> source_norms, std::span<const Rational> image_norms) {
  Rational best = 0;
  for (std::size_t s = 0; s < source_norms.size(); ++s) {
    if (sgn(source_norms[s]) == 0) {
      if (sgn(image_norms[s]) != 0) return Bound::unbounded();
      continue;
    }
    Rational ratio = image_norms[s] / source_norms[s];
    if (ratio > best) best = std::move(ratio);
  }
  return best;
}

NormedMap::NormedMap(NormedSet domain, NormedSet codomain, std::vector<std::size_t> assignment)
    : domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      assignment_(std::move(assignment)),
      cache_(std::make_shared<Cache>()) {
  if (assignment_.size() != domain_.size()) throw DomainError("map is not total on its domain");
  for (std::size_t t : assignment_) {
    if (t >= codomain_.size()) throw DomainError("map leaves its codomain");
  }
}

NormedMap NormedMap::from_labels(NormedSet domain, NormedSet codomain,
                                 std::span<const std::pair<std::string, std::string>> pairs) {
  constexpr auto kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> table(domain.size(), kUnset);
  for (const auto& [from, to] : pairs) {
    const std::size_t s = domain.index_of(from);
    if (table[s] != kUnset) throw DomainError("label \"" + from + "\" is assigned twice");
    table[s] = codomain.index_of(to);
  }
  for (std::size_t s = 0; s < table.size(); ++s) {
    if (table[s] == kUnset) throw DomainError("no image for label \"" + domain.label(s) + "\"");
  }
  return NormedMap(std::move(domain), std::move(codomain), std::move(table));
}

NormedMap NormedMap::identity(const NormedSet& set) {
  std::vector<std::size_t> table(set.size());
  for (std::size_t i = 0; i < table.size(); ++i) table[i] = i;
  return NormedMap(set, set, std::move(table));
}

const Bound& NormedMap::crh() const {
  std::call_once(cache_->once, [this] {
    std::vector<Rational> f;
    std::vector<Rational> g;
    f.reserve(domain_.size());
    g.reserve(domain_.size());
    for (std::size_t s = 0; s < domain_.size(); ++s) {
      f.push_back(domain_.norm(s));
      g.push_back(codomain_.norm(assignment_[s]));
    }
    cache_->crh = bound_constant(f, g);
  });
  return *cache_->crh;
}

bool NormedMap::is_injective() const {
  std::vector<bool> hit(codomain_.size(), false);
  for (std::size_t t : assignment_) {
    if (hit[t]) return false;
    hit[t] = true;
  }
  return true;
}

bool NormedMap::is_surjective() const {
  std::vector<bool> hit(codomain_.size(), false);
  for (std::size_t t : assignment_) hit[t] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

bool NormedMap::is_norm_preserving() const {
  for (std::size_t s = 0; s < assignment_.size(); ++s) {
    if (codomain_.norm(assignment_[s]) != domain_.norm(s)) return false;
  }
  return true;
}

NormedMap compose(const NormedMap& second, const NormedMap& first) {
  if (!(first.codomain() == second.domain())) {
    throw DomainError("cannot compose: codomain of the first map differs from the domain of the second");
  }
  std::vector<std::size_t> table(first.domain().size());
  for (std::size_t s = 0; s < table.size(); ++s) table[s] = second(first(s));
  NormedMap out(first.domain(), second.codomain(), std::move(table));
  if (first.is_bounded() && second.is_bounded()) {
    const Bound& c = out.crh();
    if (!c.at_most(second.crh().value() * first.crh().value())) {
      throw std::logic_error("composition bound violated");
    }
  }
  return out;
}

bool is_contractive(const NormedMap& map) { return map.is_contractive(); }

}  // namespace normed
