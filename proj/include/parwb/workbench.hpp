#ifndef PARWB_WORKBENCH_HPP_
#define PARWB_WORKBENCH_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "parwb/falgebra.hpp"
#include "parwb/partial_action.hpp"
#include "parwb/rewriting.hpp"

namespace parwb {

struct EnumerationFilters {
  bool ideal_domains_only = false;  // dom alpha_m an ideal for every m
  bool unital_only = false;         // dom alpha_m a unital ideal for every m
  bool g0_only = false;             // monoid must be of the form G^0
};

struct EnumerationLimits {
  int max_monoid = 4;
  int max_carrier = 4;
};

// Every valid strong partial action of M on X, in canonical order:
// lexicographic over (domain bitmask, map values) per non-identity monoid
// element, elements in index order. The identity map is pinned by (PA1).
// The callback may return false to stop early. Throws SizeCapError beyond
// the limits.
void enumerate_partial_actions(
    const FiniteMonoid& monoid, const FiniteSemigroup& carrier,
    const EnumerationFilters& filters,
    const std::function<bool(const PartialAction&)>& yield,
    const EnumerationLimits& limits = {});

std::uint64_t count_partial_actions(const FiniteMonoid& monoid,
                                    const FiniteSemigroup& carrier,
                                    const EnumerationFilters& filters = {},
                                    const EnumerationLimits& limits = {});

// Local confluence checked directly from the definition on every word of
// length <= max_len, with no reduction to short words. Throws SizeCapError
// if the number of candidate words exceeds word_cap.
bool oracle_local_confluence(const RewriteSystem& rs, int max_len = 4,
                             std::uint64_t word_cap = 10'000'000);

// All associative tables on {0..n-1}, by backtracking over table cells.
void enumerate_semigroups(int n,
                          const std::function<void(const FiniteSemigroup&)>& yield);
// All monoids on {0..n-1} with the identity fixed at index 0.
void enumerate_monoids(int n,
                       const std::function<void(const FiniteMonoid&)>& yield);
// All global actions of M on X (families of endomorphisms obeying the
// action laws), by backtracking with constraint propagation.
void enumerate_global_actions(
    const FiniteMonoid& monoid, const FiniteSemigroup& carrier,
    const std::function<bool(const PartialAction&)>& yield);

// Named example actions. Every fixture is validated on construction.
//   EX1           C2^0 on the even pairs of (Z8 x Z8, *), alpha_g the swap,
//                 dom alpha_0 empty. Globalizable but not locally confluent.
//   EX2           C2^0 on (Z4)^3, alpha_g swaps the first two coordinates,
//                 alpha_0 the identity on {0}x{0}xZ4. Not globalizable.
//   EX3-semigroup the multiplicative-semigroup view of the algebra fixture.
//   EX4           {0,1} on (Z12, *) with dom alpha_0 = im alpha_0 = {0,4,8},
//                 the unital ideal generated by the idempotent 4.
//   LZ-pos        C2^0 on left_zero(2), alpha_g the swap, dom alpha_0 empty.
//   LZ-neg        the group C2 on left_zero(2) with a one-point domain.
//   LZ-01         {0,1} on left_zero(2) with dom alpha_0 empty.
//   NULL-2/NULL-3 C2^0 on null semigroups (alpha_0 fixes the zero).
std::vector<std::string> fixture_names();
PartialAction fixture(const std::string& name);

// The algebra fixture behind EX3: strictly upper triangular 3x3 matrices
// over F_2, dom alpha_0 = span{E13,E23}, alpha_0(E13) = E13, alpha_0(E23) = 0.
LinearPA01 fixture_ex3_algebra();

}  // namespace parwb

#endif  // PARWB_WORKBENCH_HPP_
