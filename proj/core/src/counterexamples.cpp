#include "normed/counterexamples.hpp"

#include "normed/category.hpp"
#include "normed/errors.hpp"
#include "normed/free_algebra.hpp"
#include "normed/free_space.hpp"
#include "normed/scalar.hpp"

namespace normed::counterexamples {

using free_algebra::AlgebraExtension;
using free_algebra::TensorAlgebra;
using free_space::ScalarField;

namespace {

std::string fmt(const Rational& q) { return format_rational(q); }

}  // namespace

std::string to_string(Scenario scenario) {
  switch (scenario) {
    case Scenario::set_reflection:
      return "set-reflection";
    case Scenario::banalg_bounded:
      return "banalg";
    case Scenario::hilbert:
      return "hilbert";
    case Scenario::csetinf_product:
      return "no-product";
    case Scenario::csetinf_coproduct:
      return "no-coproduct";
  }
  return "unknown";
}

Witness witness_set_reflection(const Rational& candidate_norm, const Rational& k) {
  if (sgn(candidate_norm) <= 0) throw DomainError("candidate norm must be positive");
  if (sgn(k) < 0) throw DomainError("demand k must be nonnegative");
  Witness w{Scenario::set_reflection, {{"candidate_norm", fmt(candidate_norm)}, {"k", fmt(k)}}, Rational(1), 0, {}};

  // The candidate is the one-dimensional space spanned by eta(s), |eta(s)| = candidate_norm.
  const NormedSet generator({{"s", candidate_norm}});
  const auto factorization = free_space::extend(generator, {Scalar(k)}, ScalarField{});
  w.required_bound = factorization.operator_norm().exact();

  w.narrative.push_back("candidate reflection: eta(s) has norm " + fmt(candidate_norm));
  w.narrative.push_back("set map phi(s) = " + fmt(k) + " into the scalar field");
  w.narrative.push_back("the unique linear factorization sends eta(s) to " + fmt(k) + ", so its norm is " + fmt(k) +
                        " / " + fmt(candidate_norm) + " = " + fmt(w.required_bound));
  w.narrative.push_back("morphisms of the category are contractions: norm <= " + fmt(w.violated_bound));
  w.narrative.push_back(w.established() ? "contradiction: " + fmt(w.required_bound) + " > 1"
                                        : "inconclusive at this stage: " + fmt(w.required_bound) + " <= 1");
  return w;
}

Witness witness_banalg_bounded(const Rational& f_s, unsigned n, unsigned degree_cap) {
  if (sgn(f_s) <= 0) throw DomainError("f_s must be positive");
  if (n == 0 || n > degree_cap) {
    throw DomainError("stage n must lie in [1, " + std::to_string(degree_cap) + "]");
  }
  const NormedSet base({{"s", f_s}});
  const TensorAlgebra algebra(base);
  const std::vector<free_algebra::TensorElement> eta{free_algebra::kappa(base, std::size_t{0})};
  const NormValue crh_eta = *free_space::generator_bound<TensorAlgebra>(base, eta, algebra);

  const Scalar psi_s(Rational(2 * crh_eta.exact() * f_s));
  const std::vector<Scalar> psi{psi_s};
  const NormValue crh_psi = *free_space::generator_bound<ScalarField>(base, psi, ScalarField{});

  const auto psi_hat = AlgebraExtension<ScalarField>::unchecked(base, ScalarField{}, psi);
  const auto r_n = free_algebra::power(eta.front(), n);
  const Scalar value = psi_hat.apply(r_n);
  const Rational value_modulus = value.modulus().exact();
  const Rational r_n_norm = free_algebra::alg_norm(r_n).exact();

  Witness w{Scenario::banalg_bounded,
            {{"f_s", fmt(f_s)}, {"n", std::to_string(n)}},
            crh_psi.exact(),
            Rational(value_modulus / r_n_norm),
            {}};
  w.narrative.push_back("eta = kappa on ({s:" + fmt(f_s) + "}), crh(eta) = " + crh_eta.to_string());
  w.narrative.push_back("psi(s) = 2 crh(eta) f(s) = " + format_scalar(psi_s) + ", crh(psi) = " + crh_psi.to_string());
  try {
    (void)free_algebra::extend_to_algebra(base, psi, ScalarField{});
  } catch (const NotContractiveError&) {
    w.narrative.push_back("psi is not contractive: the contractive algebra extension refuses it");
  }
  w.narrative.push_back("psi_hat(r_s^" + std::to_string(n) + ") = psi(s)^" + std::to_string(n) + " = " +
                        format_scalar(value));
  w.narrative.push_back("|r_s^" + std::to_string(n) + "| = " + fmt(r_n_norm) + " <= |r_s|^" + std::to_string(n));
  w.narrative.push_back("|psi_hat| >= " + fmt(value_modulus) + " / " + fmt(r_n_norm) + " = " + fmt(w.required_bound));
  w.narrative.push_back(w.established() ? "exceeds the generator bound crh(psi) = " + fmt(w.violated_bound) +
                                              "; the demand doubles with every degree"
                                        : "degree 1 agrees with the linear extension bound crh(psi) = " +
                                              fmt(w.violated_bound));
  return w;
}

Witness witness_hilbert(const Rational& f_s, const Rational& f_t, Polarization mode) {
  if (sgn(f_s) <= 0 || sgn(f_t) <= 0) {
    throw DomainError("both generators need nonzero norm; with at most one nonzero norm a reflection exists");
  }
  const NormedSet base({{"s", f_s}, {"t", f_t}});
  const Rational upper = f_s + f_t;
  Witness w{Scenario::hilbert, {{"f_s", fmt(f_s)}, {"f_t", fmt(f_t)}}, 0, 0, {}};
  w.parameters.emplace_back("mode", mode == Polarization::complex ? "complex" : "real");
  w.narrative.push_back("eta contractive and the norm functional force |v_s| = " + fmt(f_s) + ", |v_t| = " + fmt(f_t));

  const std::vector<long> powers = mode == Polarization::complex ? std::vector<long>{0, 1, 2, 3} : std::vector<long>{0, 2};
  Scalar inner;
  for (long n : powers) {
    const Scalar unit = Scalar::i_power(n);
    const std::vector<Scalar> functional{Scalar(f_s), Scalar::i_power(-n) * Scalar(f_t)};
    const NormValue crh = *free_space::generator_bound<ScalarField>(base, functional, ScalarField{});
    // phi_hat(v_s + i^n v_t) = phi(s) + i^n phi(t)
    const Scalar value = functional[0] + unit * functional[1];
    const Rational lower = value.modulus().exact();
    w.narrative.push_back("n = " + std::to_string(n) + ": crh(phi_{s,t,n}) = " + crh.to_string() + ", " + fmt(lower) +
                          " <= |v_s + " + format_scalar(unit) + " v_t| <= " + fmt(upper));
    if (lower != upper) throw std::logic_error("norm forcing failed");
    inner += unit * Scalar(Rational(lower * lower));
  }
  inner = inner * Scalar(make_rational(1, static_cast<long>(powers.size())));
  w.narrative.push_back("polarization: <v_s, v_t> = " + format_scalar(inner));

  w.required_bound = upper * upper;
  w.violated_bound = f_s * f_s + f_t * f_t + 2 * inner.re;
  w.narrative.push_back("Parseval: |v_s + v_t|^2 = |v_s|^2 + |v_t|^2 = " + fmt(w.violated_bound));
  w.narrative.push_back("forced: |v_s + v_t|^2 = (f_s + f_t)^2 = " + fmt(w.required_bound));
  w.narrative.push_back("gap 2 f_s f_t = " + fmt(w.required_bound - w.violated_bound));
  return w;
}

Witness witness_csetinf_incompleteness(IncompletenessKind kind, unsigned k) {
  if (k == 0) throw DomainError("stage k must be positive");
  Witness w{kind == IncompletenessKind::product ? Scenario::csetinf_product : Scenario::csetinf_coproduct,
            {{"stage", std::to_string(k)}},
            Rational(k - 1),
            0,
            {}};

  if (kind == IncompletenessKind::product) {
    // S_n = [0, inf) with f_n(x) = x, restricted to the point the cone hits.
    std::vector<NormedSet> factors;
    for (unsigned n = 1; n <= k; ++n) factors.push_back(NormedSet({{std::to_string(n), Rational(n)}}));
    const NormedSet apex({{"1", Rational(1)}});
    const auto prod = category::product(factors);
    Rational demand = 0;
    for (unsigned n = 1; n <= k; ++n) {
      const NormedMap leg(apex, factors[n - 1], {0});
      const Rational projection_bound = prod.legs[n - 1].crh().value();
      // |m(1)| >= f_n(leg(1)) / crh(pi_n)
      const Rational need = sgn(projection_bound) == 0 ? Rational(factors[n - 1].norm(0))
                                                        : Rational(factors[n - 1].norm(0) / projection_bound);
      demand = std::max(demand, need);
      if (n == 1 || n == k) {
        w.narrative.push_back("leg " + std::to_string(n) + ": lambda |-> " + std::to_string(n) +
                              " lambda, crh = " + leg.crh().to_string() + "; forces |m(1)| >= " + fmt(need));
      }
    }
    const NormedMap mediator(apex, prod.object, {0});
    w.required_bound = demand;
    w.narrative.push_back("finite product of the first " + std::to_string(k) + " factors: mediating map has crh " +
                          mediator.crh().to_string());
    if (mediator.crh().value() != demand) throw std::logic_error("mediator bound disagrees with the forced bound");
  } else {
    const NormedSet point({{"0", Rational(1)}});
    const std::vector<NormedSet> summands(k, point);
    std::vector<NormedSet::Element> targets;
    for (unsigned n = 1; n <= k; ++n) targets.push_back({std::to_string(n), Rational(n)});
    const NormedSet apex(std::move(targets));
    const auto sum = category::coproduct(summands);
    Rational demand = 0;
    std::vector<std::size_t> table(sum.object.size());
    for (unsigned n = 1; n <= k; ++n) {
      const std::size_t target = apex.index_of(std::to_string(n));
      const NormedMap leg(point, apex, {target});
      table[sum.legs[n - 1](0)] = target;
      // crh(m) >= g(leg(0)) / |iota_n(0)|
      const Rational need = apex.norm(target) / sum.object.norm(sum.legs[n - 1](0));
      demand = std::max(demand, need);
      if (n == 1 || n == k) {
        w.narrative.push_back("cocone leg " + std::to_string(n) + ": 0 |-> " + std::to_string(n) +
                              ", crh = " + leg.crh().to_string() + "; forces crh(m) >= " + fmt(need));
      }
    }
    const NormedMap mediator(sum.object, apex, std::move(table));
    w.required_bound = demand;
    w.narrative.push_back("finite coproduct of " + std::to_string(k) + " unit points: mediating map has crh " +
                          mediator.crh().to_string());
    if (mediator.crh().value() != demand) throw std::logic_error("mediator bound disagrees with the forced bound");
  }
  w.narrative.push_back("stage " + std::to_string(k) + " demands " + fmt(w.required_bound) + " > " +
                        fmt(w.violated_bound) + ", the previous stage's demand; no finite bound survives");
  return w;
}

}  // namespace normed::counterexamples
