#ifndef PARWB_SEMIGROUP_HPP_
#define PARWB_SEMIGROUP_HPP_

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "parwb/error.hpp"

namespace parwb {

// Default bound on carrier sizes accepted by constructors, overridable
// everywhere a construction can grow.
inline constexpr int kDefaultSizeCap = 256;

// Witness of a failed associativity check: (x*y)*z != x*(y*z).
struct AssocViolation {
  int x = 0, y = 0, z = 0;
  bool operator==(const AssocViolation&) const = default;
};

// A finite semigroup given by its full Cayley table. Element names are
// display-only; all algorithms work with dense indices into the table.
class FiniteSemigroup {
 public:
  FiniteSemigroup() = default;

  // Throws InputError if the table is not square, an entry is out of range,
  // or the operation is not associative (the witness is in the message).
  FiniteSemigroup(std::vector<std::string> names,
                  const std::vector<std::vector<int>>& table);

  int size() const { return n_; }
  int mul(int x, int y) const { return table_[x * n_ + y]; }

  // Product in X^1: -1 stands for a formal identity adjoined on the fly.
  int mul1(int x, int y) const { return x < 0 ? y : (y < 0 ? x : mul(x, y)); }

  const std::string& name(int x) const { return names_[x]; }
  const std::vector<std::string>& names() const { return names_; }
  std::vector<std::vector<int>> rows() const;

  bool is_left_zero() const;
  bool is_right_zero() const;
  // Index of the absorbing zero of a null semigroup (all products equal it).
  std::optional<int> null_zero() const;

  bool operator==(const FiniteSemigroup&) const = default;

 private:
  struct Unchecked {};
  FiniteSemigroup(Unchecked, std::vector<std::string> names,
                  std::vector<int> table);

  int n_ = 0;
  std::vector<std::string> names_;
  std::vector<int> table_;  // row-major, table_[x*n+y] = index of x*y

  friend std::variant<FiniteSemigroup, AssocViolation> validate_semigroup(
      std::vector<std::string> names, const std::vector<std::vector<int>>& table);
};

// Checks shape, index range (throws InputError) and associativity. Returns
// the semigroup, or the first violating triple in lexicographic order.
std::variant<FiniteSemigroup, AssocViolation> validate_semigroup(
    std::vector<std::string> names, const std::vector<std::vector<int>>& table);

std::vector<std::string> default_names(int n, const std::string& prefix);

// Subset of a carrier, by membership flags over element indices.
class Subset {
 public:
  Subset() = default;
  explicit Subset(int carrier_size) : bits_(carrier_size, false) {}
  static Subset full(int carrier_size);

  int carrier_size() const { return static_cast<int>(bits_.size()); }
  bool contains(int x) const { return bits_[x]; }
  void add(int x) { bits_[x] = true; }
  void remove(int x) { bits_[x] = false; }
  int count() const;
  bool empty() const { return count() == 0; }
  std::vector<int> members() const;

  bool operator==(const Subset&) const = default;

 private:
  std::vector<bool> bits_;
};

bool is_subsemigroup(const FiniteSemigroup& s, const Subset& a);

// Two-sided ideal test: XA and AX stay inside A.
bool is_ideal(const FiniteSemigroup& s, const Subset& a);

// An element e of A with ea = ae = a for all a in A, if one exists.
std::optional<int> inner_identity(const FiniteSemigroup& s, const Subset& a);

struct UnitalIdealCheck {
  bool ideal = false;
  std::optional<int> unit;  // set iff A has an inner identity
  bool ok() const { return ideal && unit.has_value(); }
};
UnitalIdealCheck is_unital_ideal(const FiniteSemigroup& s, const Subset& a);

// A monoid is a semigroup together with the index of its identity.
struct FiniteMonoid {
  FiniteSemigroup sg;
  int identity = 0;

  int size() const { return sg.size(); }
  int mul(int x, int y) const { return sg.mul(x, y); }
  const std::string& name(int x) const { return sg.name(x); }

  bool operator==(const FiniteMonoid&) const = default;
};

// Throws InputError unless e really is a two-sided identity.
FiniteMonoid make_monoid(FiniteSemigroup sg, int identity);

struct FiniteGroup {
  FiniteMonoid monoid;
  std::vector<int> inverse;

  int size() const { return monoid.size(); }
  int mul(int x, int y) const { return monoid.mul(x, y); }
  int identity() const { return monoid.identity; }
  int inv(int x) const { return inverse[x]; }

  bool operator==(const FiniteGroup&) const = default;
};

// Checks that every element of the monoid is invertible.
std::optional<FiniteGroup> as_group(const FiniteMonoid& m);

// ---- constructions ----

FiniteSemigroup left_zero(int n, int cap = kDefaultSizeCap);
FiniteSemigroup right_zero(int n, int cap = kDefaultSizeCap);
// Null semigroup: all products equal the zero element (index 0).
FiniteSemigroup null_semigroup(int n, int cap = kDefaultSizeCap);
// ({0,...,n-1}, multiplication mod n).
FiniteSemigroup mult_mod(int n, int cap = kDefaultSizeCap);
FiniteSemigroup direct_product(const FiniteSemigroup& s,
                               const FiniteSemigroup& t,
                               int cap = kDefaultSizeCap);
FiniteGroup cyclic_group(int n, int cap = kDefaultSizeCap);
// Strictly upper triangular 3x3 matrices a*E12 + b*E13 + c*E23 over F_p,
// under matrix multiplication. Element names look like "(a,b,c)".
FiniteSemigroup upper_triangular_strict_3x3(int p, int cap = kDefaultSizeCap);

// S^1: a fresh two-sided identity "1" appended at index size(S).
FiniteMonoid adjoin_identity(const FiniteSemigroup& s, int cap = kDefaultSizeCap);
// S^0: a fresh two-sided zero "0" appended at index size(S).
FiniteSemigroup adjoin_zero(const FiniteSemigroup& s, int cap = kDefaultSizeCap);
// G^0: the group with a zero adjoined, as a monoid.
FiniteMonoid make_g0(const FiniteGroup& g, int cap = kDefaultSizeCap);

// Recognizes monoids of the form G^0: an absorbing zero whose complement is
// a group. group_to_monoid maps group indices to monoid indices;
// monoid_to_group is -1 at the zero.
struct G0View {
  int zero = -1;
  FiniteGroup group;
  std::vector<int> group_to_monoid;
  std::vector<int> monoid_to_group;
};
std::optional<G0View> as_g0(const FiniteMonoid& m);

// The two-element monoid {1,0} under multiplication, identity at index 0.
FiniteMonoid monoid_01();

}  // namespace parwb

#endif  // PARWB_SEMIGROUP_HPP_
