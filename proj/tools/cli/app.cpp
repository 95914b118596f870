#include "cli/app.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "normed/normed.hpp"
#include "normed/sampling.hpp"

namespace normed::cli {

namespace {

using serialization::Json;
using serialization::ScalarMode;
namespace fs = normed::free_space;
namespace fa = normed::free_algebra;

Json element_json(const Scalar& x) { return serialization::to_json(x); }
Json element_json(const std::vector<Scalar>& x) {
  Json out = Json::array();
  for (const auto& c : x) out.push_back(serialization::to_json(c));
  return out;
}
Json element_json(const fs::FreeVector& x) { return serialization::to_json(x); }
Json element_json(const fa::TensorElement& x) { return serialization::to_json(x); }
Json element_json(const fa::MatrixAlgebra::Matrix& x) { return serialization::to_json(x); }

std::string text(const NormValue& v, const Workspace& ws) { return v.to_string(ws.precision); }

// Parses one image value in the representation its target expects.
struct ImageReader {
  const Workspace& ws;

  Scalar operator()(const fs::ScalarField&, const Json& v) const { return serialization::scalar_from_json(v, ws.mode); }
  std::vector<Scalar> operator()(const fs::CoordinateSpace& space, const Json& v) const {
    if (!v.is_array() || v.size() != space.dimension()) throw ParseError("coordinate image has the wrong dimension");
    std::vector<Scalar> out;
    for (const auto& c : v) out.push_back(serialization::scalar_from_json(c, ws.mode));
    return out;
  }
  fs::FreeVector operator()(const fs::FreeSpace& space, const Json& v) const {
    return serialization::free_vector_from_json({{"base", serialization::to_json(space.base())}, {"coeffs", v}},
                                                ws.mode);
  }
  fa::TensorElement operator()(const fa::TensorAlgebra& algebra, const Json& v) const {
    return serialization::tensor_from_json({{"base", serialization::to_json(algebra.base())}, {"terms", v}}, ws.mode);
  }
  fa::MatrixAlgebra::Matrix operator()(const fa::MatrixAlgebra& algebra, const Json& v) const {
    if (!v.is_array()) throw ParseError("matrix image must be an array of rows");
    std::vector<std::vector<Scalar>> rows;
    for (const auto& row : v) {
      if (!row.is_array()) throw ParseError("matrix rows must be arrays");
      std::vector<Scalar> r;
      for (const auto& c : row) r.push_back(serialization::scalar_from_json(c, ws.mode));
      rows.push_back(std::move(r));
    }
    return algebra.from_rows(rows);
  }
};

template <class Space>
std::vector<typename Space::Element> read_images(const Workspace& ws, const NormedSet& base, const Space& target,
                                                 const Json& images) {
  if (!images.is_array()) throw ParseError("\"images\" must be an array of [\"label\", value] pairs");
  std::vector<std::pair<std::string, typename Space::Element>> pairs;
  for (const auto& entry : images) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_string()) {
      throw ParseError("\"images\" entries must be [\"label\", value] pairs");
    }
    pairs.emplace_back(entry[0].get<std::string>(), ImageReader{ws}(target, entry[1]));
  }
  return fs::images_from_labels<Space>(base, pairs);
}

const Json& key(const Json& object, const char* name) {
  if (!object.is_object() || !object.contains(name)) throw ParseError(std::string("missing key \"") + name + "\"");
  return object.at(name);
}

std::string target_kind(const Json& problem) {
  const Json& k = key(key(problem, "target"), "kind");
  if (!k.is_string()) throw ParseError("target kind must be a string");
  return k.get<std::string>();
}

// Output of a free-space extension problem, any target.
template <class Space>
Json run_linear_extension(const Workspace& ws, const NormedSet& base, Space target, const Json& problem,
                          bool contractive, bool scaled_free, const std::optional<fs::FreeVector>& apply_to) {
  auto images = read_images(ws, base, target, key(problem, "images"));
  const auto ext = scaled_free ? fs::scaled_free_extend(base, std::move(images), std::move(target))
                               : fs::extend(base, std::move(images), std::move(target),
                                            contractive ? fs::ExtensionMode::contractive : fs::ExtensionMode::bounded);
  Json out;
  out["operator_norm"] = text(ext.operator_norm(), ws);
  Json gens = Json::array();
  for (std::size_t s = 0; s < base.size(); ++s) gens.push_back({base.label(s), element_json(ext.image(s))});
  out["generator_images"] = gens;
  if (apply_to) {
    const auto value = ext.apply(*apply_to);
    out["applied"] = element_json(value);
    out["applied_norm"] = text(ext.target().norm(value), ws);
  }
  return out;
}

template <class Algebra>
Json run_algebra_extension(const Workspace& ws, const NormedSet& base, Algebra target, const Json& problem,
                           const std::optional<fa::TensorElement>& apply_to) {
  auto images = read_images(ws, base, target, key(problem, "images"));
  const auto ext = fa::extend_to_algebra(base, std::move(images), std::move(target));
  Json out;
  Json gens = Json::array();
  for (std::size_t s = 0; s < base.size(); ++s) {
    gens.push_back({base.label(s), element_json(ext.generator_images()[s])});
  }
  out["generator_images"] = gens;
  out["contractive"] = true;
  if (apply_to) {
    const auto value = ext.apply(*apply_to);
    out["applied"] = element_json(value);
    out["applied_norm"] = text(ext.target().norm(value), ws);
    out["argument_norm"] = text(fa::alg_norm(*apply_to), ws);
  }
  return out;
}

// Property sweep behind `free-space check` and `check adjunction`.
Json adjunction_check(const Workspace& ws, const NormedSet& base, std::size_t samples, unsigned long seed,
                      bool& ok) {
  sampling::Rng rng(seed);
  const bool complex = ws.mode == ScalarMode::complex;
  std::vector<fs::FreeVector> vectors;
  for (std::size_t i = 0; i < samples; ++i) vectors.push_back(sampling::random_vector(rng, base, 4, complex));

  // zero-norm generators must go to zero for the map to be bounded
  auto sample_maps = [&](auto make, auto zero) {
    using Element = decltype(make());
    std::vector<std::vector<Element>> maps;
    for (std::size_t k = 0; k < samples; ++k) {
      std::vector<Element> phi;
      for (std::size_t s = 0; s < base.size(); ++s) phi.push_back(base.is_zero_norm(s) ? zero : make());
      maps.push_back(std::move(phi));
    }
    return maps;
  };
  const fs::ScalarField field;
  const auto scalar_maps = sample_maps([&] { return sampling::random_scalar(rng, complex); }, Scalar{});
  const auto scalar_report = fs::hom_roundtrip_check(base, field, scalar_maps, vectors);

  const fs::FreeSpace self(base);
  const auto free_maps = sample_maps([&] { return sampling::random_vector(rng, base, 2, complex); }, fs::FreeVector(base));
  const auto free_report = fs::hom_roundtrip_check(base, self, free_maps, vectors);

  // zeta itself round-trips to the identity
  std::vector<fs::FreeVector> zetas;
  for (std::size_t s = 0; s < base.size(); ++s) zetas.push_back(fs::zeta(base, s));
  const auto identity = fs::extend(base, zetas, self);
  bool identity_ok = true;
  for (const auto& v : vectors) identity_ok = identity_ok && identity.apply(v) == v;

  ok = scalar_report.ok() && free_report.ok() && identity_ok;
  auto section = [](const fs::RoundTripReport& r) {
    return Json{{"maps_checked", r.maps_checked},
                {"vectors_checked", r.vectors_checked},
                {"failures", r.failures},
                {"ok", r.ok()}};
  };
  return {{"scalar_target", section(scalar_report)},
          {"free_target", section(free_report)},
          {"zeta_extends_to_identity", identity_ok},
          {"ok", ok}};
}

Json laws_check(const Workspace& ws, unsigned long seed, bool& ok) {
  using verification::Universe;
  sampling::Rng rng(seed);
  const std::vector<Rational> palette{0, make_rational(1, 3), make_rational(1, 2), 1, 2, 5};
  std::size_t crh_failures = 0;
  std::size_t composition_failures = 0;
  for (int k = 0; k < 200; ++k) {
    const NormedSet S = sampling::random_set(rng, 0, 5, palette);
    const NormedSet T = sampling::random_set(rng, 1, 5, palette);
    const NormedSet U = sampling::random_set(rng, 1, 5, palette);
    const NormedMap phi = sampling::random_map(rng, S, T);
    const NormedMap psi = sampling::random_map(rng, T, U);
    // literal enumeration of the ratios
    bool obstructed = false;
    Rational best = 0;
    for (std::size_t s = 0; s < S.size(); ++s) {
      const Rational& g = T.norm(phi(s));
      if (sgn(S.norm(s)) == 0) {
        obstructed = obstructed || sgn(g) != 0;
      } else {
        best = std::max(best, Rational(g / S.norm(s)));
      }
    }
    const Bound expected = obstructed ? Bound::unbounded() : Bound(best);
    if (!(phi.crh() == expected)) ++crh_failures;
    if (phi.is_bounded() && psi.is_bounded() &&
        !compose(psi, phi).crh().at_most(psi.crh().value() * phi.crh().value())) {
      ++composition_failures;
    }
  }

  Universe universe;
  universe.max_size = ws.universe_size;
  universe.palette = {0, make_rational(1, 2), 1, 2};
  Universe tests;
  tests.max_size = std::min<std::size_t>(2, ws.universe_size);
  tests.palette = {0, 3};
  const auto sets = verification::enumerate_sets(universe);
  const auto test_objects = verification::enumerate_sets(tests);
  std::size_t maps = 0;
  std::size_t classification_failures = 0;
  for (const auto& S : sets) {
    for (const auto& T : sets) {
      for (const auto& phi : verification::all_maps(S, T)) {
        ++maps;
        const auto report = category::classify(phi);
        if (report.contractive &&
            !(*report.contractive ==
              verification::brute_force_flags(phi, verification::Category::contractive, test_objects))) {
          ++classification_failures;
        }
        if (report.bounded &&
            !(*report.bounded == verification::brute_force_flags(phi, verification::Category::bounded, test_objects))) {
          ++classification_failures;
        }
      }
    }
  }

  std::size_t projectivity_failures = 0;
  Universe small;
  small.max_size = std::min<std::size_t>(ws.universe_size, 2);
  small.palette = {0, 1, 2};
  for (const auto& S : verification::enumerate_sets(small)) {
    const auto objects = verification::enumerate_sets(verification::lifting_universe(S));
    const bool projective = !verification::find_projectivity_obstruction(S, objects).has_value();
    const bool injective = !verification::find_injectivity_obstruction(S, objects).has_value();
    if (projective != category::is_projective_cset1(S)) ++projectivity_failures;
    if (injective != category::is_injective_cset1(S)) ++projectivity_failures;
  }

  ok = crh_failures == 0 && composition_failures == 0 && classification_failures == 0 && projectivity_failures == 0;
  return {{"crh_samples", 200},
          {"crh_failures", crh_failures},
          {"composition_failures", composition_failures},
          {"classified_maps", maps},
          {"classification_failures", classification_failures},
          {"projectivity_injectivity_failures", projectivity_failures},
          {"ok", ok}};
}

int print_witness(const counterexamples::Witness& w, bool as_json, std::ostream& out) {
  if (as_json) {
    out << serialization::dump(serialization::to_json(w));
  } else {
    out << "scenario: " << counterexamples::to_string(w.scenario) << "\n";
    for (const auto& [k, v] : w.parameters) out << "  " << k << " = " << v << "\n";
    for (const auto& line : w.narrative) out << "  " << line << "\n";
    if (w.scenario == counterexamples::Scenario::banalg_bounded) {
      out << "ratio: " << format_rational(w.required_bound) << "\n";
    }
    if (w.scenario == counterexamples::Scenario::hilbert) {
      out << "gap: " << format_rational(w.required_bound - w.violated_bound) << "\n";
    }
    out << "violated_bound: " << format_rational(w.violated_bound) << "\n";
    out << "required_bound: " << format_rational(w.required_bound) << "\n";
    out << "established: " << (w.established() ? "yes" : "no") << "\n";
  }
  return w.established() ? kSuccess : kRefusal;
}

Rational parse_option_rational(const std::string& text) { return parse_rational(text); }

}  // namespace

Json Workspace::load(const std::string& path) const {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read file \"" + path + "\"");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return serialization::parse_json(buffer.str());
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact normed sets, free Banach spaces and free Banach algebras"};
  app.require_subcommand(1);

  Workspace ws;
  std::string mode = "real";
  std::string precision_text;
  app.add_option("--mode", mode, "Scalar field: real or complex")->check(CLI::IsMember({"real", "complex"}));
  app.add_option("--degree-cap", ws.degree_cap, "Largest power or word degree computed")->capture_default_str();
  app.add_option("--universe-size", ws.universe_size, "Largest normed set in brute-force verification universes")
      ->capture_default_str();
  app.add_option("--precision", precision_text, "Interval width for irrational norms, as \"p/q\" (default 2^-64)");

  std::function<int()> action;

  // crh
  std::string map_file;
  auto* crh_cmd = app.add_subcommand("crh", "Bound constant of a map");
  crh_cmd->add_option("--map", map_file, "Map file")->required();
  crh_cmd->callback([&] {
    action = [&] {
      const NormedMap map = serialization::normed_map_from_json(ws.load(map_file));
      out << serialization::dump({{"crh", map.crh().to_string()}, {"contractive", map.is_contractive()}});
      return kSuccess;
    };
  });

  // compose
  std::string first_file;
  std::string second_file;
  auto* compose_cmd = app.add_subcommand("compose", "Composite second o first");
  compose_cmd->add_option("--first", first_file, "Map applied first")->required();
  compose_cmd->add_option("--second", second_file, "Map applied second")->required();
  compose_cmd->callback([&] {
    action = [&] {
      const NormedMap first = serialization::normed_map_from_json(ws.load(first_file));
      const NormedMap second = serialization::normed_map_from_json(ws.load(second_file));
      const NormedMap composite = compose(second, first);
      Json result = serialization::to_json(composite);
      result["crh"] = composite.crh().to_string();
      if (first.is_bounded() && second.is_bounded()) {
        result["crh_bound"] = format_rational(second.crh().value() * first.crh().value());
      }
      out << serialization::dump(result);
      return kSuccess;
    };
  });

  // classify
  auto* classify_cmd = app.add_subcommand("classify", "Morphism report in CSet_1 and CSet_inf");
  classify_cmd->add_option("--map", map_file, "Map file")->required();
  classify_cmd->callback([&] {
    action = [&] {
      const NormedMap map = serialization::normed_map_from_json(ws.load(map_file));
      out << serialization::dump(serialization::to_json(category::classify(map)));
      return kSuccess;
    };
  });

  // product / coproduct
  std::vector<std::string> set_files;
  for (const char* name : {"product", "coproduct"}) {
    auto* cmd = app.add_subcommand(name, std::string("Finite ") + name + " of normed sets");
    cmd->add_option("--set", set_files, "Normed set file (repeatable, order matters)");
    const std::string which = name;
    cmd->callback([&, which] {
      action = [&, which] {
        std::vector<NormedSet> sets;
        for (const auto& f : set_files) sets.push_back(serialization::normed_set_from_json(ws.load(f)));
        const auto result = which == "product" ? category::product(sets) : category::coproduct(sets);
        out << serialization::dump(serialization::to_json(result));
        return kSuccess;
      };
    });
  }

  // equalizer / coequalizer
  for (const char* name : {"equalizer", "coequalizer"}) {
    auto* cmd = app.add_subcommand(name, std::string("The ") + name + " of a parallel pair");
    cmd->add_option("--first", first_file, "First map")->required();
    cmd->add_option("--second", second_file, "Second map")->required();
    const std::string which = name;
    cmd->callback([&, which] {
      action = [&, which] {
        const NormedMap first = serialization::normed_map_from_json(ws.load(first_file));
        const NormedMap second = serialization::normed_map_from_json(ws.load(second_file));
        const auto result =
            which == "equalizer" ? category::equalizer(first, second) : category::coequalizer(first, second);
        out << serialization::dump(serialization::to_json(result));
        return kSuccess;
      };
    });
  }

  // free-space
  auto* space_cmd = app.add_subcommand("free-space", "Weighted l1 free Banach space");
  space_cmd->require_subcommand(1);
  std::string vector_file;
  std::string problem_file;
  std::string apply_file;
  std::string base_file;
  bool contractive = false;
  bool scaled_free = false;
  std::size_t samples = 50;
  unsigned long seed = 1;

  auto* space_norm = space_cmd->add_subcommand("norm", "Weighted l1 norm of a vector");
  space_norm->add_option("--vector", vector_file, "Vector file")->required();
  space_norm->callback([&] {
    action = [&] {
      const auto v = serialization::free_vector_from_json(ws.load(vector_file), ws.mode);
      out << serialization::dump({{"vector", serialization::to_json(v)}, {"norm", text(fs::vector_norm(v), ws)}});
      return kSuccess;
    };
  });

  auto* space_extend = space_cmd->add_subcommand("extend", "Linear extension of a generator map");
  space_extend->add_option("--problem", problem_file, "File with base, target and images")->required();
  space_extend->add_option("--apply", apply_file, "Vector file to evaluate the extension on");
  space_extend->add_flag("--contractive", contractive, "Require crh <= 1");
  space_extend->add_flag("--scaled-free", scaled_free, "Rescale images to the generator norms first");
  space_extend->callback([&] {
    action = [&] {
      const Json problem = ws.load(problem_file);
      const NormedSet base = serialization::normed_set_from_json(key(problem, "base"));
      std::optional<fs::FreeVector> apply_to;
      if (!apply_file.empty()) apply_to = serialization::free_vector_from_json(ws.load(apply_file), ws.mode);
      const std::string kind = target_kind(problem);
      Json result;
      if (kind == "scalar") {
        result = run_linear_extension(ws, base, fs::ScalarField{}, problem, contractive, scaled_free, apply_to);
      } else if (kind == "coordinates") {
        std::vector<Rational> weights;
        for (const auto& w : key(key(problem, "target"), "weights")) weights.push_back(serialization::rational_from_json(w));
        result = run_linear_extension(ws, base, fs::CoordinateSpace(std::move(weights)), problem, contractive,
                                      scaled_free, apply_to);
      } else if (kind == "free") {
        const NormedSet target_base = serialization::normed_set_from_json(key(key(problem, "target"), "base"));
        result = run_linear_extension(ws, base, fs::FreeSpace(target_base), problem, contractive, scaled_free,
                                      apply_to);
      } else {
        throw ParseError("unknown target kind \"" + kind + "\" (scalar, coordinates, free)");
      }
      out << serialization::dump(result);
      return kSuccess;
    };
  });

  auto add_check_options = [&](CLI::App* cmd) {
    cmd->add_option("--base", base_file, "Normed set file")->required();
    cmd->add_option("--samples", samples, "Sampled maps and vectors")->capture_default_str();
    cmd->add_option("--seed", seed, "Sampling seed")->capture_default_str();
  };
  auto adjunction_action = [&] {
    action = [&] {
      const NormedSet base = serialization::normed_set_from_json(ws.load(base_file));
      bool ok = false;
      out << serialization::dump(adjunction_check(ws, base, samples, seed, ok));
      return ok ? kSuccess : kDomainError;
    };
  };
  auto* space_check = space_cmd->add_subcommand("check", "Adjunction round trips on sampled maps");
  add_check_options(space_check);
  space_check->callback(adjunction_action);

  // free-algebra
  auto* algebra_cmd = app.add_subcommand("free-algebra", "Free Banach algebra of weighted words");
  algebra_cmd->require_subcommand(1);
  std::string left_file;
  std::string right_file;
  std::string element_file;
  std::string weight_text = "1";
  unsigned degree = 0;

  auto* alg_mul_cmd = algebra_cmd->add_subcommand("mul", "Product of two tensor elements");
  alg_mul_cmd->add_option("--left", left_file, "Left factor")->required();
  alg_mul_cmd->add_option("--right", right_file, "Right factor")->required();
  alg_mul_cmd->callback([&] {
    action = [&] {
      const auto x = serialization::tensor_from_json(ws.load(left_file), ws.mode);
      const auto y = serialization::tensor_from_json(ws.load(right_file), ws.mode);
      const auto xy = fa::alg_mul(x, y);
      if (xy.degree() > ws.degree_cap) throw DomainError("product degree exceeds --degree-cap");
      out << serialization::dump({{"product", serialization::to_json(xy)},
                                  {"norm", text(fa::alg_norm(xy), ws)},
                                  {"norm_bound", text(fa::alg_norm(x) * fa::alg_norm(y), ws)}});
      return kSuccess;
    };
  });

  auto* alg_norm_cmd = algebra_cmd->add_subcommand("norm", "Norm of a tensor element");
  alg_norm_cmd->add_option("--element", element_file, "Tensor element file")->required();
  alg_norm_cmd->callback([&] {
    action = [&] {
      const auto x = serialization::tensor_from_json(ws.load(element_file), ws.mode);
      out << serialization::dump({{"element", serialization::to_json(x)}, {"norm", text(fa::alg_norm(x), ws)}});
      return kSuccess;
    };
  });

  auto* alg_extend_cmd = algebra_cmd->add_subcommand("extend", "Contractive homomorphism extending a generator map");
  alg_extend_cmd->add_option("--problem", problem_file, "File with base, target and images")->required();
  alg_extend_cmd->add_option("--apply", apply_file, "Tensor element file to evaluate on");
  alg_extend_cmd->callback([&] {
    action = [&] {
      const Json problem = ws.load(problem_file);
      const NormedSet base = serialization::normed_set_from_json(key(problem, "base"));
      std::optional<fa::TensorElement> apply_to;
      if (!apply_file.empty()) apply_to = serialization::tensor_from_json(ws.load(apply_file), ws.mode);
      if (apply_to && apply_to->degree() > ws.degree_cap) throw DomainError("element degree exceeds --degree-cap");
      const std::string kind = target_kind(problem);
      Json result;
      if (kind == "scalar") {
        result = run_algebra_extension(ws, base, fs::ScalarField{}, problem, apply_to);
      } else if (kind == "matrix") {
        const Json& size = key(key(problem, "target"), "size");
        if (!size.is_number_unsigned()) throw ParseError("matrix size must be a positive integer");
        result = run_algebra_extension(ws, base, fa::MatrixAlgebra(size.get<std::size_t>()), problem, apply_to);
      } else if (kind == "algebra") {
        const NormedSet target_base = serialization::normed_set_from_json(key(key(problem, "target"), "base"));
        result = run_algebra_extension(ws, base, fa::TensorAlgebra(target_base), problem, apply_to);
      } else {
        throw ParseError("unknown target kind \"" + kind + "\" (scalar, matrix, algebra)");
      }
      out << serialization::dump(result);
      return kSuccess;
    };
  });

  auto* conv_cmd = algebra_cmd->add_subcommand("conv-check", "One generator against the convolution algebra");
  conv_cmd->add_option("--weight", weight_text, "Generator norm (positive rational)")->capture_default_str();
  conv_cmd->add_option("--degree", degree, "Largest degree (default --degree-cap)");
  conv_cmd->add_option("--seed", seed, "Seed for the random pairs")->capture_default_str();
  conv_cmd->callback([&] {
    action = [&] {
      const unsigned d = degree == 0 ? ws.degree_cap : degree;
      if (d > ws.degree_cap) throw DomainError("--degree exceeds --degree-cap");
      const auto report = fa::one_generator_convolution_check(parse_option_rational(weight_text), d, 50, seed);
      out << serialization::dump({{"weight", format_rational(report.weight)},
                                  {"degree", report.degree},
                                  {"products_checked", report.products_checked},
                                  {"norms_checked", report.norms_checked},
                                  {"failures", report.failures},
                                  {"ok", report.ok()}});
      return report.ok() ? kSuccess : kDomainError;
    };
  });

  // check
  auto* check_cmd = app.add_subcommand("check", "Property sweeps");
  check_cmd->require_subcommand(1);
  auto* check_adjunction = check_cmd->add_subcommand("adjunction", "Hom-set bijection round trips");
  add_check_options(check_adjunction);
  check_adjunction->callback(adjunction_action);
  auto* check_laws = check_cmd->add_subcommand("laws", "Bound constants, classification and lifting properties");
  check_laws->add_option("--seed", seed, "Sampling seed")->capture_default_str();
  check_laws->callback([&] {
    action = [&] {
      bool ok = false;
      out << serialization::dump(laws_check(ws, seed, ok));
      return ok ? kSuccess : kDomainError;
    };
  });

  // demo
  auto* demo_cmd = app.add_subcommand("demo", "Finite-stage witnesses of the non-existence results");
  demo_cmd->require_subcommand(1);
  bool as_json = false;
  std::string candidate_text = "1";
  std::string k_text = "10";
  std::string fs_text = "1";
  std::string ft_text = "1";
  unsigned n = 3;
  unsigned stage = 5;
  bool real_polarization = false;

  auto* demo_set = demo_cmd->add_subcommand("set-reflection", "No free normed space on a set");
  demo_set->add_option("--candidate-norm", candidate_text, "Norm of eta(s)")->capture_default_str();
  demo_set->add_option("--k", k_text, "Demand k")->capture_default_str();
  demo_set->callback([&] {
    action = [&] {
      return print_witness(counterexamples::witness_set_reflection(parse_option_rational(candidate_text),
                                                                   parse_option_rational(k_text)),
                           as_json, out);
    };
  });
  auto* demo_banalg = demo_cmd->add_subcommand("banalg", "No free Banach algebra with bounded homomorphisms");
  demo_banalg->add_option("--weight", fs_text, "Generator norm f(s)")->capture_default_str();
  demo_banalg->add_option("--n", n, "Degree")->capture_default_str();
  demo_banalg->callback([&] {
    action = [&] {
      return print_witness(counterexamples::witness_banalg_bounded(parse_option_rational(fs_text), n, ws.degree_cap),
                           as_json, out);
    };
  });
  auto* demo_hilbert = demo_cmd->add_subcommand("hilbert", "No free Hilbert space on two generators");
  demo_hilbert->add_option("--fs", fs_text, "f(s)")->capture_default_str();
  demo_hilbert->add_option("--ft", ft_text, "f(t)")->capture_default_str();
  demo_hilbert->add_flag("--real", real_polarization, "Real polarization identity");
  demo_hilbert->callback([&] {
    action = [&] {
      return print_witness(
          counterexamples::witness_hilbert(parse_option_rational(fs_text), parse_option_rational(ft_text),
                                           real_polarization ? counterexamples::Polarization::real
                                                             : counterexamples::Polarization::complex),
          as_json, out);
    };
  });
  for (const char* name : {"no-product", "no-coproduct"}) {
    auto* cmd = demo_cmd->add_subcommand(name, "CSet_inf lacks infinite (co)products");
    cmd->add_option("--stage", stage, "Stage k")->capture_default_str();
    const bool is_product = std::string(name) == "no-product";
    cmd->callback([&, is_product] {
      action = [&, is_product] {
        return print_witness(counterexamples::witness_csetinf_incompleteness(
                                 is_product ? counterexamples::IncompletenessKind::product
                                            : counterexamples::IncompletenessKind::coproduct,
                                 stage),
                             as_json, out);
      };
    });
  }
  for (auto* sub : demo_cmd->get_subcommands({})) sub->add_flag("--json", as_json, "Print the witness as JSON");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kParseError;
  }

  try {
    ws.mode = mode == "complex" ? ScalarMode::complex : ScalarMode::real;
    if (!precision_text.empty()) {
      ws.precision = parse_rational(precision_text);
      if (sgn(ws.precision) <= 0) throw ParseError("--precision must be positive");
    }
    if (!action) return kParseError;
    return action();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const serialization::Json::exception& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const RefusalError& e) {
    err << "refused: " << e.what() << "\n";
    return kRefusal;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  }
}

}  // namespace normed::cli
