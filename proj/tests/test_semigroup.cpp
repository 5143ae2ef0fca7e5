#include "parwb/semigroup.hpp"

#include <doctest.h>

using namespace parwb;

namespace {

// Independent oracle: first associativity violation in lexicographic scan.
std::optional<AssocViolation> scan_for_violation(
    const std::vector<std::vector<int>>& t) {
  const int n = static_cast<int>(t.size());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (t[t[x][y]][z] != t[x][t[y][z]]) return AssocViolation{x, y, z};
  return std::nullopt;
}

Subset subset_of(int n, std::initializer_list<int> xs) {
  Subset s(n);
  for (int x : xs) s.add(x);
  return s;
}

}  // namespace

TEST_CASE("validate_semigroup accepts the trivial semigroup") {
  auto v = validate_semigroup({"a"}, {{0}});
  REQUIRE(std::holds_alternative<FiniteSemigroup>(v));
  CHECK(std::get<FiniteSemigroup>(v).mul(0, 0) == 0);
}

TEST_CASE("validate_semigroup accepts left-zero tables") {
  auto v = validate_semigroup({"a", "b", "c"},
                              {{0, 0, 0}, {1, 1, 1}, {2, 2, 2}});
  REQUIRE(std::holds_alternative<FiniteSemigroup>(v));
  CHECK(std::get<FiniteSemigroup>(v).is_left_zero());
}

TEST_CASE("validate_semigroup reports the first associativity violation") {
  const std::vector<std::vector<int>> bad = {{1, 1}, {0, 0}};
  const auto expected = scan_for_violation(bad);
  REQUIRE(expected.has_value());
  auto v = validate_semigroup({"a", "b"}, bad);
  REQUIRE(std::holds_alternative<AssocViolation>(v));
  const auto witness = std::get<AssocViolation>(v);
  CHECK(witness == *expected);
  // and the witness genuinely violates
  CHECK(bad[bad[witness.x][witness.y]][witness.z] !=
        bad[witness.x][bad[witness.y][witness.z]]);
}

TEST_CASE("validate_semigroup rejects malformed tables") {
  CHECK_THROWS_AS(validate_semigroup({"a", "b"}, {{0, 1}}), InputError);
  CHECK_THROWS_AS(validate_semigroup({"a", "b"}, {{0, 2}, {1, 0}}), InputError);
  CHECK_THROWS_AS(validate_semigroup({"a"}, {{0, 0}, {0, 0}}), InputError);
}

TEST_CASE("adjoin_identity and adjoin_zero grow the carrier by one") {
  const auto s = FiniteSemigroup({"a"}, {{0}});
  const auto m = adjoin_identity(s);
  CHECK(m.size() == 2);
  CHECK(m.mul(1, 0) == 0);
  CHECK(m.mul(0, 1) == 0);
  CHECK(m.identity == 1);

  const auto n = adjoin_zero(null_semigroup(2));
  CHECK(n.size() == 3);
  for (int x = 0; x < 3; ++x) {
    CHECK(n.mul(x, 2) == 2);
    CHECK(n.mul(2, x) == 2);
  }
}

TEST_CASE("make_g0 on the trivial group is the multiplicative {1,0}") {
  const auto m = monoid_01();
  CHECK(m.size() == 2);
  CHECK(m.name(0) == "1");
  CHECK(m.name(1) == "0");
  CHECK(m.identity == 0);
  CHECK(m.mul(1, 1) == 1);
  CHECK(m.mul(0, 1) == 1);
}

TEST_CASE("make_g0 on C2 is a 3-element monoid with absorbing zero") {
  const auto g = cyclic_group(2);
  const auto m = make_g0(g);
  CHECK(m.size() == 3);
  CHECK(m.mul(1, 1) == 0);  // g*g = 1
  for (int x = 0; x < 3; ++x) {
    CHECK(m.mul(x, 2) == 2);
    CHECK(m.mul(2, x) == 2);
  }
  auto view = as_g0(m);
  REQUIRE(view.has_value());
  CHECK(view->zero == 2);
  CHECK(view->group.size() == 2);
}

TEST_CASE("as_g0 rejects monoids that are not G^0") {
  CHECK_FALSE(as_g0(cyclic_group(2).monoid).has_value());  // no zero
  CHECK_FALSE(as_g0(adjoin_identity(left_zero(2))).has_value());
  // {0,1} with a two-element "group" part that is not closed
  CHECK(as_g0(monoid_01()).has_value());
}

TEST_CASE("empty subset is an ideal but not unital") {
  const auto s = mult_mod(6);
  const Subset empty(6);
  CHECK(is_ideal(s, empty));
  const auto check = is_unital_ideal(s, empty);
  CHECK(check.ideal);
  CHECK_FALSE(check.unit.has_value());
}

TEST_CASE("even residues form a non-unital ideal of (Z8, *)") {
  const auto s = mult_mod(8);
  const auto evens = subset_of(8, {0, 2, 4, 6});
  // derived by exhaustive closure check
  for (int x = 0; x < 8; ++x)
    for (int a : {0, 2, 4, 6}) CHECK((x * a) % 8 % 2 == 0);
  CHECK(is_ideal(s, evens));
  CHECK_FALSE(inner_identity(s, evens).has_value());
}

TEST_CASE("span{0, E13} is an ideal of the strict upper triangular matrices") {
  const auto s = upper_triangular_strict_3x3(2);
  REQUIRE(s.size() == 8);
  // element index a + 2b + 4c encodes a*E12 + b*E13 + c*E23
  const auto span_e13 = subset_of(8, {0, 2});
  CHECK(is_ideal(s, span_e13));
  CHECK(is_subsemigroup(s, span_e13));
  // E12 * E23 = E13
  CHECK(s.mul(1, 4) == 2);
  // E23 * E12 = 0
  CHECK(s.mul(4, 1) == 0);
}

TEST_CASE("unital ideal of (Z12, *) generated by the idempotent 4") {
  const auto s = mult_mod(12);
  const auto a = subset_of(12, {0, 4, 8});
  const auto check = is_unital_ideal(s, a);
  CHECK(check.ideal);
  REQUIRE(check.unit.has_value());
  CHECK(*check.unit == 4);
}

TEST_CASE("constructors produce valid semigroups") {
  // constructors go through the validating constructor; spot-check tables
  CHECK(left_zero(2).rows() == std::vector<std::vector<int>>{{0, 0}, {1, 1}});
  CHECK(right_zero(2).rows() == std::vector<std::vector<int>>{{0, 1}, {0, 1}});
  const auto nl = null_semigroup(2);
  CHECK(nl.rows() == std::vector<std::vector<int>>{{0, 0}, {0, 0}});
  CHECK(nl.null_zero() == 0);
  CHECK(cyclic_group(3).size() == 3);
  CHECK(mult_mod(4).mul(2, 2) == 0);
}

TEST_CASE("direct product of (Z8,*) with itself") {
  const auto p = direct_product(mult_mod(8), mult_mod(8));
  CHECK(p.size() == 64);
  // (2,0)*(0,2) = (0,0)
  CHECK(p.mul(2 * 8 + 0, 0 * 8 + 2) == 0);
  CHECK(p.name(2 * 8 + 0) == "(2,0)");
}

TEST_CASE("size caps and preconditions") {
  CHECK_THROWS_AS(left_zero(0), InputError);
  CHECK_THROWS_AS(left_zero(300), SizeCapError);
  CHECK_THROWS_AS(left_zero(10, 5), SizeCapError);
  CHECK_THROWS_AS(direct_product(mult_mod(20), mult_mod(20)), SizeCapError);
  CHECK_THROWS_AS(upper_triangular_strict_3x3(4), InputError);
  CHECK_THROWS_AS(upper_triangular_strict_3x3(7), SizeCapError);
}

TEST_CASE("adjoin_zero makes {0} an ideal; identity is never in a proper ideal") {
  const auto s = adjoin_zero(left_zero(3));
  Subset zero_only(s.size());
  zero_only.add(3);
  CHECK(is_ideal(s, zero_only));

  const auto m = adjoin_identity(left_zero(3));
  for (int x = 0; x < m.size(); ++x) {
    Subset a(m.size());
    a.add(m.identity);
    a.add(x);
    if (a.count() < m.size()) {
      CHECK_FALSE(is_ideal(m.sg, a));
    }
  }
}

TEST_CASE("group recognition") {
  CHECK(as_group(cyclic_group(4).monoid).has_value());
  CHECK_FALSE(as_group(monoid_01()).has_value());
  const auto g = cyclic_group(3);
  CHECK(g.inv(1) == 2);
  CHECK(g.inv(0) == 0);
}
