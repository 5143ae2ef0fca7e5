#ifndef PARWB_CRITERIA_HPP_
#define PARWB_CRITERIA_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "parwb/partial_action.hpp"
#include "parwb/rewriting.hpp"

namespace parwb {

enum class Verdict { kPass, kFail, kNotApplicable };
std::string to_string(Verdict v);

// Verdict for one named condition. Witness tuples hold element indices in
// quantifier order; -1 stands for the formal identity adjoined to X. All
// sweeps run in lexicographic order (with -1 first), so a reported witness
// is the least violating tuple.
struct ConditionResult {
  Verdict verdict = Verdict::kNotApplicable;
  std::vector<int> witness;
  std::string witness_text;
  std::string reason;  // set when not applicable

  bool passed() const { return verdict == Verdict::kPass; }
  bool failed() const { return verdict == Verdict::kFail; }
  bool operator==(const ConditionResult&) const = default;
};

// The conditions below are stated for a strong partial action of M = G^0 on
// X. Quantifiers over X^1 include the formal identity.
//
// (LC1)  for g in G and x,y,z in X with y in dom alpha_g:
//        alpha_{g^-1}(alpha_g(xy) z) = x alpha_{g^-1}(alpha_g(y) z).
//        Requires dom alpha_g to be an ideal for every g in G; otherwise
//        not-applicable (see check_lc1_prime).
ConditionResult check_lc1(const PartialAction& a);

// (LC1') the guard-everything variant of (LC1), meaningful without the
//        ideal hypothesis: the equation is required only when all the
//        intermediate memberships hold.
ConditionResult check_lc1_prime(const PartialAction& a);

// (LC2)  for m in M, y in dom alpha_m, x,z in X^1:
//        xyz in dom alpha_0 implies x alpha_m(y) z in dom alpha_0 and
//        alpha_0(xyz) = alpha_0(x alpha_m(y) z).
ConditionResult check_lc2(const PartialAction& a);

// (LC2') membership-only variant over group elements: for g in G,
//        y in dom alpha_g, x,z in X^1:
//        xyz in dom alpha_0 implies x alpha_g(y) z in dom alpha_0.
ConditionResult check_lc2_prime(const PartialAction& a);

// (LC3)  for g,h in G, x in dom alpha_g, y in dom alpha_h, z in X^1 with
//        xyz not in dom alpha_0: some k in G has xyz in dom alpha_k and
//        alpha_k(xyz) = alpha_g(x) alpha_h(y) z.
ConditionResult check_lc3(const PartialAction& a);

// (H)    for M = {0,1}: for y in dom alpha_0 and x,z in X^1:
//        alpha_0(xyz) = x alpha_0(y) z   (in particular xyz in dom alpha_0).
ConditionResult check_h(const PartialAction& a);

// For left-zero or right-zero carriers: whenever [m,X] and [n,X] intersect,
// every u in [m,X] and v in [n,X] lie in a common [k,X]. Throws InputError
// if the carrier is neither left- nor right-zero.
ConditionResult check_left_zero_condition(const PartialAction& a,
                                          const MXPartition& partition);

// ---- point evaluations (single quantifier instances) ----

struct Lc2PointEval {
  bool triggered = false;  // xyz in dom alpha_0
  bool holds = true;
  int xyz = -1;
  int x_amy_z = -1;  // x alpha_m(y) z
  bool rhs_in_dom0 = false;
  int alpha0_lhs = -1, alpha0_rhs = -1;  // set when the respective side is defined
};
Lc2PointEval eval_lc2_at(const PartialAction& a, int zero, int m, int x, int y,
                         int z);

struct Lc3PointEval {
  bool triggered = false;  // xyz not in dom alpha_0
  bool holds = true;
  int xyz = -1;
  int rhs = -1;            // alpha_g(x) alpha_h(y) z
  std::optional<int> k;    // witnessing monoid index, when one exists
};
Lc3PointEval eval_lc3_at(const PartialAction& a, int zero, int g, int h, int x,
                         int y, int z);

struct HPointEval {
  bool holds = true;
  bool lhs_defined = false;
  int xyz = -1;
  int alpha0_xyz = -1;  // valid iff lhs_defined
  int rhs = -1;         // x alpha_0(y) z
};
HPointEval eval_h_at(const PartialAction& a, int zero, int x, int y, int z);

// ---- theorem-level verdicts ----

struct G0Decision {
  Verdict globalizable = Verdict::kNotApplicable;
  Verdict locally_confluent = Verdict::kNotApplicable;
  std::string reason;  // why not applicable, or which condition failed
  ConditionResult lc1, lc2, lc3;
};

// For M = G^0 with dom alpha_m and im alpha_m ideals for all m:
// globalizable iff (LC1) and (LC2); locally confluent iff additionally
// (LC3). Hypothesis failures yield not-applicable verdicts.
G0Decision decide_g0(const PartialAction& a);

struct Decision01 {
  Verdict verdict = Verdict::kNotApplicable;
  std::string reason;
  ConditionResult h;
  std::optional<bool> rewriting_confluent;
  G0Decision g0;
};

// For M = {0,1} with dom alpha_0 and im alpha_0 ideals: globalizability,
// local confluence of the rewriting system and condition (H) are equivalent.
// All three are computed and compared; disagreement raises InternalError.
Decision01 decide_01(const PartialAction& a,
                     std::uint64_t confluence_word_cap = 1'000'000);

// ---- the full report ----

struct IdealHypothesisEntry {
  std::string element;
  bool dom_ideal = false, im_ideal = false;
  bool dom_unital = false, im_unital = false;
  bool operator==(const IdealHypothesisEntry&) const = default;
};

struct ConfluenceSummary {
  // "confluent" | "not-confluent" | "too-large"
  std::string status;
  std::vector<std::string> witness;  // word, reduct, reduct (printed classes)
  bool operator==(const ConfluenceSummary&) const = default;
};

struct CriteriaReport {
  bool action_valid = false;
  std::vector<std::string> axiom_failures;  // "axiom: detail" lines
  std::vector<IdealHypothesisEntry> hypotheses;
  ConditionResult lc1, lc1_prime, lc2, lc2_prime, lc3, h, left_zero;
  ConfluenceSummary confluence;
  // tri-state theorem verdicts; "yes" | "no" | "not-applicable"
  std::string globalizable = "not-applicable";
  std::string globalizable_reason;
  std::string locally_confluent = "not-applicable";
  std::string locally_confluent_reason;

  bool operator==(const CriteriaReport&) const = default;
};

struct CriteriaOptions {
  std::uint64_t confluence_word_cap = 1'000'000;
};

// Runs every applicable check and assembles the report. Invalid actions get
// a report with action_valid = false and everything else not-applicable.
CriteriaReport run_criteria(const PartialAction& a,
                            const CriteriaOptions& options = {});

}  // namespace parwb

#endif  // PARWB_CRITERIA_HPP_
