#ifndef PARWB_PARTIAL_ACTION_HPP_
#define PARWB_PARTIAL_ACTION_HPP_

#include <string>
#include <vector>

#include "parwb/semigroup.hpp"

namespace parwb {

// A strong partial action of a finite monoid on a finite semigroup. Partial
// maps are stored as total index arrays with kUndefined outside the domain,
// so the domain is derived rather than stored separately.
//
// Validity means:
//   (PA1) dom(e) = X and alpha_e = id,
//   (PA2) alpha_m^{-1}(dom alpha_n) = dom alpha_{nm} /\ dom alpha_m (strong),
//   (PA3) alpha_n . alpha_m = alpha_{nm} on alpha_m^{-1}(dom alpha_n),
// plus: every dom alpha_m is a subsemigroup and every alpha_m a homomorphism.
struct PartialAction {
  static constexpr int kUndefined = -1;

  FiniteMonoid monoid;
  FiniteSemigroup carrier;
  std::vector<std::vector<int>> maps;  // maps[m][x] = alpha_m(x) or kUndefined

  bool defined(int m, int x) const { return maps[m][x] != kUndefined; }
  int apply(int m, int x) const { return maps[m][x]; }

  Subset domain(int m) const;
  Subset image(int m) const;
  bool is_global() const;

  bool operator==(const PartialAction&) const = default;
};

// A total action with the identity map at e, as plain tables. Used where the
// acted-on set need not carry a semigroup structure.
struct GlobalActionOnSet {
  int set_size = 0;
  std::vector<std::vector<int>> maps;  // maps[m][i], total

  bool operator==(const GlobalActionOnSet&) const = default;
};

// First (m, i) violating the action laws beta_e = id or
// beta_n . beta_m = beta_{nm}, or a totality/range fault.
struct ActionLawViolation {
  int m = -1, n = -1, i = -1;
  std::string detail;
};
std::optional<ActionLawViolation> action_law_violation(
    const FiniteMonoid& monoid, const GlobalActionOnSet& beta);

enum class Axiom {
  kPA1,
  kPA2Strong,
  kPA3,
  kDomainSubsemigroup,
  kMapHomomorphism,
};
std::string to_string(Axiom axiom);

// One failed axiom with its lexicographically least witness. Witness shape:
// PA1: (x); PA2/PA3: (m, n, x); subsemigroup/homomorphism: (m, x, y).
struct AxiomFailure {
  Axiom axiom;
  std::vector<int> witness;
  std::string detail;
};

struct ActionValidation {
  std::vector<AxiomFailure> failures;  // every failed axiom is reported
  bool ok() const { return failures.empty(); }
};

// Checks all five axioms and reports each failed one with a minimal witness.
// Throws InputError on shape problems (wrong map count or length, value out
// of range).
ActionValidation validate_partial_action(const PartialAction& action);

// Per monoid element: ideal and unital-ideal verdicts for dom and im.
struct IdealReport {
  struct PerElement {
    bool dom_ideal = false, im_ideal = false;
    std::optional<int> dom_unit, im_unit;
  };
  std::vector<PerElement> per_element;

  bool all_ideal() const;
  bool all_unital() const;
  bool dom0_im0_ideal(int zero) const;
};
IdealReport check_ideal_hypotheses(const PartialAction& action);

// Restriction of a global action to a subsemigroup Y:
// dom alpha_m = Y /\ beta_m^{-1}(Y), alpha_m = beta_m restricted. The result
// lives on Y re-indexed as its own carrier.
PartialAction restrict_global(const PartialAction& global, const Subset& y);

// For M = G^0, drops the zero component and returns the strong partial
// action of the group G. Throws InputError if M is not of that form.
PartialAction induced_group_action(const PartialAction& action);

}  // namespace parwb

#endif  // PARWB_PARTIAL_ACTION_HPP_
