#pragma once

#include <string>
#include <utility>
#include <vector>

#include "normed/rational.hpp"

/// Finite-stage witnesses for the non-existence results. Each witness
/// evaluates the relevant maps exactly at one stage of the argument and
/// records the inequality chain it followed.
namespace normed::counterexamples {

enum class Scenario { set_reflection, banalg_bounded, hilbert, csetinf_product, csetinf_coproduct };

std::string to_string(Scenario scenario);

struct Witness {
  Scenario scenario;
  std::vector<std::pair<std::string, std::string>> parameters;
  /// The bound the hypothetical universal map would be allowed.
  Rational violated_bound;
  /// The bound the stage forces on it.
  Rational required_bound;
  std::vector<std::string> narrative;

  /// required_bound > violated_bound: the contradiction is reached.
  bool established() const { return required_bound > violated_bound; }
};

/// One generator mapped to a vector of norm `candidate_norm`; the set map
/// s |-> k into the scalars factors only through a linear map of norm
/// k / candidate_norm, while the category allows contractions (bound 1).
Witness witness_set_reflection(const Rational& candidate_norm, const Rational& k);

/// In the free algebra on ({s : f_s}) with eta = kappa, the homomorphism
/// extending psi(s) = 2 crh(eta) f_s must have norm >= 2^n on s^n.
/// Throws DomainError unless f_s > 0 and 1 <= n <= degree_cap.
Witness witness_banalg_bounded(const Rational& f_s, unsigned n, unsigned degree_cap = 20);

enum class Polarization { complex, real };

/// Norm forcing plus polarization for generators of norms f_s, f_t: the
/// forced value (f_s + f_t)^2 of |v_s + v_t|^2 against Parseval's
/// f_s^2 + f_t^2. Throws DomainError unless both norms are positive.
Witness witness_hilbert(const Rational& f_s, const Rational& f_t, Polarization mode = Polarization::complex);

enum class IncompletenessKind { product, coproduct };

/// Stage k of the missing infinite product / coproduct in CSet_inf: the
/// first k members of the family, the cone (cocone) of maps scaling by n,
/// and the bound the mediating map needs. The previous stage's demand is
/// the violated bound. Throws DomainError for k = 0.
Witness witness_csetinf_incompleteness(IncompletenessKind kind, unsigned k);

}  // namespace normed::counterexamples
