#include "normed/serialization.hpp"

#include "normed/errors.hpp"

namespace normed::serialization {

namespace {

const Json& member(const Json& object, const char* key) {
  if (!object.is_object()) throw ParseError(std::string("expected an object with key \"") + key + "\"");
  const auto it = object.find(key);
  if (it == object.end()) throw ParseError(std::string("missing key \"") + key + "\"");
  return *it;
}

const Json& array(const Json& value, const char* what) {
  if (!value.is_array()) throw ParseError(std::string(what) + " must be an array");
  return value;
}

std::string string_of(const Json& value, const char* what) {
  if (!value.is_string()) throw ParseError(std::string(what) + " must be a string");
  return value.get<std::string>();
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

std::string dump(const Json& value) { return value.dump(2) + "\n"; }

Json to_json(const Rational& value) { return format_rational(value); }

Rational rational_from_json(const Json& value) { return parse_rational(string_of(value, "rational")); }

Json to_json(const Scalar& value) { return Json::array({format_rational(value.re), format_rational(value.im)}); }

Scalar scalar_from_json(const Json& value, ScalarMode mode) {
  Scalar out;
  if (value.is_string()) {
    out = Scalar(rational_from_json(value));
  } else {
    array(value, "scalar");
    if (value.size() != 2) throw ParseError("scalar must be [\"re\", \"im\"]");
    out = Scalar(rational_from_json(value[0]), rational_from_json(value[1]));
  }
  if (mode == ScalarMode::real && !out.is_real()) {
    throw ParseError("complex scalar " + format_scalar(out) + " in real mode (use --mode complex)");
  }
  return out;
}

Json to_json(const NormedSet& set) {
  Json elements = Json::array();
  for (const auto& e : set.elements()) elements.push_back({{"label", e.label}, {"norm", format_rational(e.norm)}});
  return {{"elements", elements}};
}

NormedSet normed_set_from_json(const Json& value) {
  std::vector<NormedSet::Element> elements;
  for (const auto& e : array(member(value, "elements"), "elements")) {
    const std::string norm_text = string_of(member(e, "norm"), "norm");
    Rational norm = parse_rational(norm_text);
    if (sgn(norm) < 0) throw ParseError("negative norm \"" + norm_text + "\"");
    elements.push_back({string_of(member(e, "label"), "label"), std::move(norm)});
  }
  try {
    return NormedSet(std::move(elements));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

Json to_json(const NormedMap& map) {
  Json pairs = Json::array();
  for (std::size_t s = 0; s < map.domain().size(); ++s) {
    pairs.push_back({map.domain().label(s), map.codomain().label(map(s))});
  }
  return {{"domain", to_json(map.domain())}, {"codomain", to_json(map.codomain())}, {"map", pairs}};
}

NormedMap normed_map_from_json(const Json& value) {
  NormedSet domain = normed_set_from_json(member(value, "domain"));
  NormedSet codomain = normed_set_from_json(member(value, "codomain"));
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& p : array(member(value, "map"), "map")) {
    if (!p.is_array() || p.size() != 2) throw ParseError("map entries must be [\"from\", \"to\"] pairs");
    pairs.emplace_back(string_of(p[0], "label"), string_of(p[1], "label"));
  }
  return NormedMap::from_labels(std::move(domain), std::move(codomain), pairs);
}

Json to_json(const free_space::FreeVector& v) {
  Json coeffs = Json::array();
  for (const auto& [s, c] : v.coefficients()) {
    coeffs.push_back({v.base().label(s), format_rational(c.re), format_rational(c.im)});
  }
  return {{"base", to_json(v.base())}, {"coeffs", coeffs}};
}

free_space::FreeVector free_vector_from_json(const Json& value, ScalarMode mode) {
  NormedSet base = normed_set_from_json(member(value, "base"));
  std::vector<std::pair<std::string, Scalar>> terms;
  for (const auto& t : array(member(value, "coeffs"), "coeffs")) {
    if (!t.is_array() || (t.size() != 2 && t.size() != 3)) {
      throw ParseError("coefficient entries must be [\"label\", \"re\", \"im\"]");
    }
    const Json scalar = t.size() == 3 ? Json::array({t[1], t[2]}) : t[1];
    terms.emplace_back(string_of(t[0], "label"), scalar_from_json(scalar, mode));
  }
  return free_space::FreeVector::from_labels(std::move(base), terms);
}

Json to_json(const free_algebra::TensorElement& x) {
  Json terms = Json::array();
  for (const auto& [word, c] : x.terms()) {
    Json letters = Json::array();
    for (std::size_t letter : word) letters.push_back(x.base().label(letter));
    terms.push_back({{"word", letters}, {"coeff", to_json(c)}});
  }
  return {{"base", to_json(x.base())}, {"terms", terms}};
}

free_algebra::TensorElement tensor_from_json(const Json& value, ScalarMode mode) {
  NormedSet base = normed_set_from_json(member(value, "base"));
  std::map<free_algebra::Word, Scalar> terms;
  for (const auto& t : array(member(value, "terms"), "terms")) {
    free_algebra::Word word;
    for (const auto& letter : array(member(t, "word"), "word")) word.push_back(base.index_of(string_of(letter, "letter")));
    if (word.empty()) throw ParseError("empty word: the tensor algebra is non-unital");
    terms[word] += scalar_from_json(member(t, "coeff"), mode);
  }
  return free_algebra::TensorElement(std::move(base), std::move(terms));
}

Json to_json(const free_algebra::MatrixAlgebra::Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.size; ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.size; ++c) row.push_back(to_json(m.at(r, c)));
    rows.push_back(row);
  }
  return rows;
}

Json to_json(const category::MorphismFlags& flags) {
  return {{"mono", flags.mono},
          {"epi", flags.epi},
          {"section", flags.section},
          {"retraction", flags.retraction},
          {"iso", flags.iso}};
}

Json to_json(const category::MorphismReport& report) {
  Json out = {{"injective", report.injective},
              {"surjective", report.surjective},
              {"norm_preserving", report.norm_preserving},
              {"crh", report.crh.to_string()},
              {"lambda", report.lambda.to_string("inf")},
              {"complement", to_json(report.complement)}};
  out["cset1"] = report.contractive ? to_json(*report.contractive) : Json("not-applicable");
  out["csetinf"] = report.bounded ? to_json(*report.bounded) : Json("not-applicable");
  return out;
}

Json to_json(const category::ConstructionResult& result) {
  Json legs = Json::array();
  for (const auto& leg : result.legs) legs.push_back(to_json(leg));
  return {{"kind", category::to_string(result.kind)}, {"object", to_json(result.object)}, {"legs", legs}};
}

Json to_json(const counterexamples::Witness& witness) {
  Json params = Json::object();
  for (const auto& [k, v] : witness.parameters) params[k] = v;
  return {{"scenario", counterexamples::to_string(witness.scenario)},
          {"parameters", params},
          {"violated_bound", format_rational(witness.violated_bound)},
          {"required_bound", format_rational(witness.required_bound)},
          {"established", witness.established()},
          {"narrative", witness.narrative}};
}

}  // namespace normed::serialization
