#ifndef PARWB_MX_QUOTIENT_HPP_
#define PARWB_MX_QUOTIENT_HPP_

#include <string>
#include <vector>

#include "parwb/partial_action.hpp"

namespace parwb {

// The quotient X_M = (M x X)/~, where ~ is the equivalence closure of
//   (m, x) -> (n, y)  iff  exists k in M with m = nk, x in dom alpha_k and
//   y = alpha_k(x).
// Class ids are canonical: classes are numbered by their least pair index
// (pair (m, x) has index m*|X| + x), so equal partitions have equal tables.
struct MXPartition {
  int monoid_size = 0;
  int carrier_size = 0;
  std::vector<int> class_of;              // pair index -> class id
  std::vector<std::vector<int>> members;  // class id -> sorted pair indices
  std::vector<std::vector<int>> beta;     // beta[n][c] = class of (n*m, x)
  std::vector<int> iota;                  // x -> class of (e, x)

  int pair_index(int m, int x) const { return m * carrier_size + x; }
  int pair_m(int p) const { return p / carrier_size; }
  int pair_x(int p) const { return p % carrier_size; }
  int class_id(int m, int x) const { return class_of[pair_index(m, x)]; }
  int num_classes() const { return static_cast<int>(members.size()); }
};

struct HarpoonEdge {
  int from_m, from_x;  // (m, x)
  int to_m, to_x;      // (n, y)
  int via_k;
};

// All instances of the generating relation, including the k = e loops.
std::vector<HarpoonEdge> harpoon_edges(const PartialAction& action);

// Connected components of the symmetric closure of the generating relation,
// via union-find. Throws InternalError if the induced beta tables fail to be
// well defined (they cannot, for a valid action).
MXPartition classes_generic(const PartialAction& action);

// For M = G^0 only: the partition built directly from the closed-form class
// descriptions
//   [0,x] = {(0, alpha_g(x)) : g in G, x in dom alpha_g}        x not in dom alpha_0,
//   [g,x] = {(h, alpha_{h^-1 g}(x)) : h in G, defined}           x not in im alpha_0,
//   [g,x] = (G x {x}) u ({0} x alpha_0^{-1}(x))                  x in im alpha_0,
// computed independently of the generic closure so the two can serve as
// mutual oracles. Throws InputError if M is not of the form G^0.
MXPartition classes_g0_closed_form(const PartialAction& action);

inline int beta_of(const MXPartition& p, int n, int class_id) {
  return p.beta[n][class_id];
}
inline int iota_of(const MXPartition& p, int x) { return p.iota[x]; }

// "(m,x)" with element names, e.g. "(g,(0,2))".
std::string pair_to_string(const PartialAction& action, int pair_index);
// One class as a brace-wrapped member list, members in pair-index order.
std::string class_to_string(const PartialAction& action, const MXPartition& p,
                            int class_id);

}  // namespace parwb

#endif  // PARWB_MX_QUOTIENT_HPP_
