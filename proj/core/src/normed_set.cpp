#include "normed/normed_set.hpp"

#include <algorithm>

#include "normed/errors.hpp"

namespace normed {

namespace {

std::string escape(std::string_view part) {
  std::string out;
  for (char c : part) {
    if (c == '\\' || c == ',' || c == '(' || c == ')' || c == '{' || c == '}' || c == ':') out += '\\';
    out += c;
  }
  return out;
}

std::string join(std::span<const std::string> parts, char open, char close) {
  std::string out(1, open);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += ',';
    out += escape(parts[i]);
  }
  out += close;
  return out;
}

}  // namespace

NormedSet::NormedSet() : elements_(std::make_shared<const std::vector<Element>>()) {}

NormedSet::NormedSet(std::vector<Element> elements) {
  std::sort(elements.begin(), elements.end(), [](const Element& a, const Element& b) { return a.label < b.label; });
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (sgn(elements[i].norm) < 0) {
      throw DomainError("negative norm for label \"" + elements[i].label + "\"");
    }
    if (i > 0 && elements[i].label == elements[i - 1].label) {
      throw DomainError("duplicate label \"" + elements[i].label + "\"");
    }
  }
  elements_ = std::make_shared<const std::vector<Element>>(std::move(elements));
}

std::optional<std::size_t> NormedSet::find(std::string_view label) const {
  const auto it = std::lower_bound(elements_->begin(), elements_->end(), label,
                                   [](const Element& e, std::string_view l) { return e.label < l; });
  if (it == elements_->end() || it->label != label) return std::nullopt;
  return static_cast<std::size_t>(it - elements_->begin());
}

std::size_t NormedSet::index_of(std::string_view label) const {
  if (auto i = find(label)) return *i;
  throw DomainError("unknown label \"" + std::string(label) + "\"");
}

std::vector<std::size_t> NormedSet::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i) {
    if (!is_zero_norm(i)) out.push_back(i);
  }
  return out;
}

bool NormedSet::all_zero() const {
  return std::all_of(elements_->begin(), elements_->end(), [](const Element& e) { return sgn(e.norm) == 0; });
}

Rational NormedSet::max_norm() const {
  Rational out = 0;
  for (const auto& e : *elements_) out = std::max(out, e.norm);
  return out;
}

std::string tuple_label(std::span<const std::string> parts) { return join(parts, '(', ')'); }

std::string tagged_label(std::size_t index, std::string_view label) {
  return std::to_string(index) + ":" + escape(label);
}

std::string class_label(std::span<const std::string> members) { return join(members, '{', '}'); }

}  // namespace normed
