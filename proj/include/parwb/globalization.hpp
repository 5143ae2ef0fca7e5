#ifndef PARWB_GLOBALIZATION_HPP_
#define PARWB_GLOBALIZATION_HPP_

#include <string>
#include <variant>
#include <vector>

#include "parwb/rewriting.hpp"

namespace parwb {

// The set-level universal globalization: beta_n([m,x]) = [nm,x] acting on
// the classes of X_M, with iota(x) = [e,x] (both live in the partition).
GlobalActionOnSet set_globalization(const MXPartition& partition);

struct GlobalizationCheck {
  bool ok = true;
  std::string what;                 // which law failed
  std::vector<int> counterexample;  // indices, shape depends on the law
};

// Verifies that (beta, iota) is a globalization of alpha:
//   - beta satisfies the action laws,
//   - iota is a morphism: beta_m(iota(x)) = iota(alpha_m(x)) on dom alpha_m,
//   - pullback: beta_m(iota(x)) = iota(y) forces x in dom alpha_m with
//     alpha_m(x) = y.
// When beta acts on a semigroup, pass it as beta_carrier to additionally
// check that iota and every beta_m are semigroup homomorphisms.
GlobalizationCheck verify_globalization(const PartialAction& alpha,
                                        const GlobalActionOnSet& beta,
                                        const std::vector<int>& iota,
                                        const FiniteSemigroup* beta_carrier = nullptr);

struct InducedMorphism {
  std::vector<int> kappa_prime;  // class id -> element of gamma's set
};
struct IllDefinedMorphism {
  int pair_a = -1, pair_b = -1;  // two members of one class that disagree
};

// Given a morphism kappa from alpha to a global action gamma, the induced
// map on classes: kappa'([m,x]) = gamma_m(kappa(x)). Well-definedness across
// class members is asserted; kappa' . iota = kappa and equivariance
// gamma_m . kappa' = kappa' . beta_m are checked and raise InternalError on
// failure (they cannot fail for a valid input). Throws InputError if kappa
// is not a morphism.
std::variant<InducedMorphism, IllDefinedMorphism> induced_morphism(
    const PartialAction& alpha, const MXPartition& partition,
    const GlobalActionOnSet& gamma, const std::vector<int>& kappa);

// The reflection of alpha in semigroups, presented by normal-form words
// over X_M. Equality is decided by normal-form identity, which is sound
// exactly when the rewriting system is locally confluent; the constructor
// refuses otherwise. The structure is intensional: nothing is materialized
// beyond the queried words.
class ReflectionSemigroup {
 public:
  // Throws InputError when the system is not locally confluent (or the
  // confluence sweep exceeds word_cap).
  ReflectionSemigroup(const RewriteSystem& rs,
                      std::uint64_t confluence_word_cap = 1'000'000);

  const RewriteSystem& system() const { return *rs_; }

  Word normal_form(const Word& w) const { return rs_->normalize(w); }
  Word multiply(const Word& a, const Word& b) const;
  bool equal(const Word& a, const Word& b) const;
  // Letterwise beta_m, then normalization.
  Word act(int m, const Word& w) const;
  Word iota_word(int x) const;
  // All normal-form words of length <= max_len, in length-lexicographic
  // order.
  std::vector<Word> enumerate(int max_len) const;

 private:
  const RewriteSystem* rs_;
};

// For a left-zero carrier, X_M with the left-zero product is itself a
// globalization (not necessarily the universal one).
struct LeftZeroGlobalization {
  MXPartition partition;
  FiniteSemigroup carrier;  // left-zero product on the classes
  GlobalActionOnSet beta;
  std::vector<int> iota;
};
// Throws InputError unless the carrier of alpha is left-zero.
LeftZeroGlobalization left_zero_globalization(const PartialAction& alpha);

}  // namespace parwb

#endif  // PARWB_GLOBALIZATION_HPP_
