#ifndef PARWB_FALGEBRA_HPP_
#define PARWB_FALGEBRA_HPP_

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "parwb/criteria.hpp"
#include "parwb/partial_action.hpp"

namespace parwb {

using FpVec = std::vector<int>;  // coordinates mod p
using FpMat = std::vector<FpVec>;

// Row-reduced echelon basis of the row space; zero rows dropped, pivots 1.
FpMat rref(FpMat m, int p);
// Residue of v after elimination against an rref basis (zero iff in span).
FpVec reduce_against(const FpMat& rref_basis, FpVec v, int p);
bool in_span(const FpMat& rref_basis, const FpVec& v, int p);
bool same_span(const FpMat& rref_a, const FpMat& rref_b);
// Basis of {c : c * rows = 0} (left nullspace of the k x n matrix), rref'd.
FpMat left_nullspace(const FpMat& rows, int p, int ambient_dim);

// A finite-dimensional associative algebra over F_p, by structure constants:
// e_i * e_j = sum_k structure[i][j][k] e_k.
struct FiniteAlgebra {
  int p = 2;
  int dim = 0;
  std::vector<std::string> basis_names;
  std::vector<std::vector<FpVec>> structure;

  FpVec multiply(const FpVec& a, const FpVec& b) const;
  FpVec basis_vector(int i) const;
  std::string vector_name(const FpVec& v) const;  // e.g. "E13+E23", "0"
};

// Shape/prime checks throw InputError; the return value is the first basis
// triple (i,j,k) with (e_i e_j) e_k != e_i (e_j e_k), if any.
std::optional<std::array<int, 3>> validate_algebra(const FiniteAlgebra& a);

// Throws InputError unless associative and well formed.
FiniteAlgebra make_algebra(int p, int dim,
                           std::vector<std::vector<FpVec>> structure,
                           std::vector<std::string> basis_names = {});

// A strong partial action of the multiplicative monoid {0,1} on an algebra
// by a linear map: dom alpha_0 is a subalgebra and alpha_0 an idempotent
// algebra homomorphism into it. alpha0_rows[i] is the image of
// dom0_basis[i] in ambient coordinates.
struct LinearPA01 {
  FiniteAlgebra algebra;
  FpMat dom0_basis;
  FpMat alpha0_rows;

  // derived on construction
  FpMat dom0_rref;
  FpMat alpha_on_rref;  // alpha_0 applied to each dom0_rref row

  bool in_dom0(const FpVec& v) const;
  // Defined exactly on span(dom0_basis).
  std::optional<FpVec> apply0(const FpVec& v) const;
  FpMat im0_rref() const;
  FpMat ker0_rref() const;
};

// Validates: consistent linear data, dom0 a subalgebra, alpha_0 an algebra
// homomorphism with image inside dom0, and alpha_0 idempotent. Throws
// InputError with the reason otherwise.
LinearPA01 make_linear_pa01(FiniteAlgebra algebra, FpMat dom0_basis,
                            FpMat alpha0_rows);

// Is span(v_rref) closed under the product?
bool is_subalgebra(const FiniteAlgebra& a, const FpMat& v_rref);

struct SubspaceIdealWitness {
  int basis_index = -1;  // algebra basis element multiplied in
  FpVec subspace_vector;
  bool left = false;  // true: e_i * v escaped; false: v * e_i escaped
  FpVec product;
};

struct SubspaceIdealCheck {
  bool ideal = false;
  std::optional<SubspaceIdealWitness> witness;
};

// Is span(v_rref) a two-sided ideal of the algebra?
SubspaceIdealCheck is_ideal_subspace(const FiniteAlgebra& a, const FpMat& v_rref);

struct AlgebraDecision {
  Verdict verdict = Verdict::kNotApplicable;  // globalizable?
  std::string reason;
  FpMat kernel;  // rref basis of ker alpha_0
  std::optional<SubspaceIdealWitness> witness;  // kernel-ideal violation
  std::string witness_text;
};

// Globalizability of a {0,1}-action on an algebra with ideal dom0 and im0:
// decided by whether ker alpha_0 is an ideal.
AlgebraDecision decide_globalizable_algebra01(const LinearPA01& pa);

// All p^dim vectors under the bilinear product, as a finite semigroup.
// Element index encodes coordinates base p (basis 0 least significant).
FiniteSemigroup multiplicative_semigroup(const FiniteAlgebra& a,
                                         int cap = kDefaultSizeCap);

// The same linear action read pointwise on the multiplicative semigroup.
PartialAction semigroup_view(const LinearPA01& pa, int cap = kDefaultSizeCap);

}  // namespace parwb

#endif  // PARWB_FALGEBRA_HPP_
