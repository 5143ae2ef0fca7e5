#include "parwb/semigroup.hpp"

#include <algorithm>
#include <numeric>

namespace parwb {

namespace {

std::vector<int> flatten_checked(const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(table.size());
  std::vector<int> flat;
  flat.reserve(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table[i].size()) != n) {
      throw InputError("table is not square: row " + std::to_string(i) +
                       " has " + std::to_string(table[i].size()) +
                       " entries, expected " + std::to_string(n));
    }
    for (int j = 0; j < n; ++j) {
      const int v = table[i][j];
      if (v < 0 || v >= n) {
        throw InputError("table entry out of range at (" + std::to_string(i) +
                         "," + std::to_string(j) + "): " + std::to_string(v));
      }
      flat.push_back(v);
    }
  }
  return flat;
}

std::optional<AssocViolation> assoc_violation(const std::vector<int>& t, int n) {
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const int xy = t[x * n + y];
      for (int z = 0; z < n; ++z) {
        if (t[xy * n + z] != t[x * n + t[y * n + z]]) {
          return AssocViolation{x, y, z};
        }
      }
    }
  }
  return std::nullopt;
}

void check_size(int n, int cap, const char* what) {
  if (n < 1) throw InputError(std::string(what) + ": size must be >= 1");
  if (n > cap) {
    throw SizeCapError(std::string(what) + ": size " + std::to_string(n) +
                       " exceeds cap " + std::to_string(cap));
  }
}

}  // namespace

FiniteSemigroup::FiniteSemigroup(Unchecked, std::vector<std::string> names,
                                 std::vector<int> table)
    : n_(static_cast<int>(names.size())),
      names_(std::move(names)),
      table_(std::move(table)) {}

FiniteSemigroup::FiniteSemigroup(std::vector<std::string> names,
                                 const std::vector<std::vector<int>>& table) {
  auto checked = validate_semigroup(std::move(names), table);
  if (auto* v = std::get_if<AssocViolation>(&checked)) {
    throw InputError("not associative: (x*y)*z != x*(y*z) at (" +
                     std::to_string(v->x) + "," + std::to_string(v->y) + "," +
                     std::to_string(v->z) + ")");
  }
  *this = std::get<FiniteSemigroup>(std::move(checked));
}

std::vector<std::vector<int>> FiniteSemigroup::rows() const {
  std::vector<std::vector<int>> out(n_);
  for (int i = 0; i < n_; ++i) {
    out[i].assign(table_.begin() + i * n_, table_.begin() + (i + 1) * n_);
  }
  return out;
}

bool FiniteSemigroup::is_left_zero() const {
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y)
      if (mul(x, y) != x) return false;
  return true;
}

bool FiniteSemigroup::is_right_zero() const {
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y)
      if (mul(x, y) != y) return false;
  return true;
}

std::optional<int> FiniteSemigroup::null_zero() const {
  if (n_ == 0) return std::nullopt;
  const int z = mul(0, 0);
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y)
      if (mul(x, y) != z) return std::nullopt;
  return z;
}

std::variant<FiniteSemigroup, AssocViolation> validate_semigroup(
    std::vector<std::string> names, const std::vector<std::vector<int>>& table) {
  if (names.size() != table.size()) {
    throw InputError("element count " + std::to_string(names.size()) +
                     " does not match table size " + std::to_string(table.size()));
  }
  auto flat = flatten_checked(table);
  const int n = static_cast<int>(table.size());
  if (auto v = assoc_violation(flat, n)) return *v;
  return FiniteSemigroup(FiniteSemigroup::Unchecked{}, std::move(names),
                         std::move(flat));
}

std::vector<std::string> default_names(int n, const std::string& prefix) {
  std::vector<std::string> names;
  names.reserve(n);
  for (int i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i));
  return names;
}

Subset Subset::full(int carrier_size) {
  Subset s(carrier_size);
  s.bits_.assign(carrier_size, true);
  return s;
}

int Subset::count() const {
  return static_cast<int>(std::count(bits_.begin(), bits_.end(), true));
}

std::vector<int> Subset::members() const {
  std::vector<int> out;
  for (int i = 0; i < carrier_size(); ++i)
    if (bits_[i]) out.push_back(i);
  return out;
}

bool is_subsemigroup(const FiniteSemigroup& s, const Subset& a) {
  for (int x = 0; x < s.size(); ++x) {
    if (!a.contains(x)) continue;
    for (int y = 0; y < s.size(); ++y) {
      if (a.contains(y) && !a.contains(s.mul(x, y))) return false;
    }
  }
  return true;
}

bool is_ideal(const FiniteSemigroup& s, const Subset& a) {
  for (int x = 0; x < s.size(); ++x) {
    for (int y = 0; y < s.size(); ++y) {
      if (!a.contains(y)) continue;
      if (!a.contains(s.mul(x, y)) || !a.contains(s.mul(y, x))) return false;
    }
  }
  return true;
}

std::optional<int> inner_identity(const FiniteSemigroup& s, const Subset& a) {
  for (int e = 0; e < s.size(); ++e) {
    if (!a.contains(e)) continue;
    bool ok = true;
    for (int x = 0; x < s.size() && ok; ++x) {
      if (!a.contains(x)) continue;
      ok = s.mul(e, x) == x && s.mul(x, e) == x;
    }
    if (ok) return e;
  }
  return std::nullopt;
}

UnitalIdealCheck is_unital_ideal(const FiniteSemigroup& s, const Subset& a) {
  UnitalIdealCheck out;
  out.ideal = is_ideal(s, a);
  out.unit = inner_identity(s, a);
  return out;
}

FiniteMonoid make_monoid(FiniteSemigroup sg, int identity) {
  if (identity < 0 || identity >= sg.size()) {
    throw InputError("identity index out of range: " + std::to_string(identity));
  }
  for (int x = 0; x < sg.size(); ++x) {
    if (sg.mul(identity, x) != x || sg.mul(x, identity) != x) {
      throw InputError("element " + std::to_string(identity) +
                       " is not a two-sided identity (fails at " +
                       std::to_string(x) + ")");
    }
  }
  return FiniteMonoid{std::move(sg), identity};
}

std::optional<FiniteGroup> as_group(const FiniteMonoid& m) {
  const int n = m.size();
  std::vector<int> inverse(n, -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (m.mul(x, y) == m.identity && m.mul(y, x) == m.identity) {
        inverse[x] = y;
        break;
      }
    }
    if (inverse[x] < 0) return std::nullopt;
  }
  return FiniteGroup{m, std::move(inverse)};
}

FiniteSemigroup left_zero(int n, int cap) {
  check_size(n, cap, "left_zero");
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x) std::fill(table[x].begin(), table[x].end(), x);
  return FiniteSemigroup(default_names(n, "a"), table);
}

FiniteSemigroup right_zero(int n, int cap) {
  check_size(n, cap, "right_zero");
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x) std::iota(table[x].begin(), table[x].end(), 0);
  return FiniteSemigroup(default_names(n, "a"), table);
}

FiniteSemigroup null_semigroup(int n, int cap) {
  check_size(n, cap, "null_semigroup");
  std::vector<std::vector<int>> table(n, std::vector<int>(n, 0));
  auto names = default_names(n, "a");
  names[0] = "0";
  return FiniteSemigroup(std::move(names), table);
}

FiniteSemigroup mult_mod(int n, int cap) {
  check_size(n, cap, "mult_mod");
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> names;
  for (int x = 0; x < n; ++x) {
    names.push_back(std::to_string(x));
    for (int y = 0; y < n; ++y) table[x][y] = (x * y) % n;
  }
  return FiniteSemigroup(std::move(names), table);
}

FiniteSemigroup direct_product(const FiniteSemigroup& s,
                               const FiniteSemigroup& t, int cap) {
  const long long size = static_cast<long long>(s.size()) * t.size();
  if (size > cap) {
    throw SizeCapError("direct_product: size " + std::to_string(size) +
                       " exceeds cap " + std::to_string(cap));
  }
  const int n = static_cast<int>(size);
  auto index = [&](int a, int b) { return a * t.size() + b; };
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> names(n);
  for (int a = 0; a < s.size(); ++a) {
    for (int b = 0; b < t.size(); ++b) {
      names[index(a, b)] = "(" + s.name(a) + "," + t.name(b) + ")";
      for (int c = 0; c < s.size(); ++c) {
        for (int d = 0; d < t.size(); ++d) {
          table[index(a, b)][index(c, d)] = index(s.mul(a, c), t.mul(b, d));
        }
      }
    }
  }
  return FiniteSemigroup(std::move(names), table);
}

FiniteGroup cyclic_group(int n, int cap) {
  check_size(n, cap, "cyclic_group");
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> names;
  for (int x = 0; x < n; ++x) {
    names.push_back(x == 0 ? "1" : (x == 1 ? "g" : "g" + std::to_string(x)));
    for (int y = 0; y < n; ++y) table[x][y] = (x + y) % n;
  }
  auto m = make_monoid(FiniteSemigroup(std::move(names), table), 0);
  auto g = as_group(m);
  return *g;
}

FiniteSemigroup upper_triangular_strict_3x3(int p, int cap) {
  if (p < 2) throw InputError("upper_triangular_strict_3x3: p must be prime");
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) {
      throw InputError("upper_triangular_strict_3x3: p = " + std::to_string(p) +
                       " is not prime");
    }
  }
  const long long size = static_cast<long long>(p) * p * p;
  if (size > cap) {
    throw SizeCapError("upper_triangular_strict_3x3: size " +
                       std::to_string(size) + " exceeds cap " +
                       std::to_string(cap));
  }
  const int n = static_cast<int>(size);
  // element index a + b*p + c*p^2 encodes a*E12 + b*E13 + c*E23
  auto index = [&](int a, int b, int c) { return a + b * p + c * p * p; };
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> names(n);
  for (int a = 0; a < p; ++a) {
    for (int b = 0; b < p; ++b) {
      for (int c = 0; c < p; ++c) {
        names[index(a, b, c)] = "(" + std::to_string(a) + "," +
                                std::to_string(b) + "," + std::to_string(c) + ")";
        for (int a2 = 0; a2 < p; ++a2) {
          for (int b2 = 0; b2 < p; ++b2) {
            for (int c2 = 0; c2 < p; ++c2) {
              // (aE12+bE13+cE23)(a'E12+b'E13+c'E23) = (a*c') E13
              table[index(a, b, c)][index(a2, b2, c2)] =
                  index(0, (a * c2) % p, 0);
            }
          }
        }
      }
    }
  }
  return FiniteSemigroup(std::move(names), table);
}

FiniteMonoid adjoin_identity(const FiniteSemigroup& s, int cap) {
  const int n = s.size();
  check_size(n + 1, cap, "adjoin_identity");
  std::vector<std::vector<int>> table(n + 1, std::vector<int>(n + 1));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) table[x][y] = s.mul(x, y);
  for (int x = 0; x <= n; ++x) {
    table[x][n] = x;
    table[n][x] = x;
  }
  auto names = s.names();
  names.push_back("1");
  return make_monoid(FiniteSemigroup(std::move(names), table), n);
}

FiniteSemigroup adjoin_zero(const FiniteSemigroup& s, int cap) {
  const int n = s.size();
  check_size(n + 1, cap, "adjoin_zero");
  std::vector<std::vector<int>> table(n + 1, std::vector<int>(n + 1, n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) table[x][y] = s.mul(x, y);
  auto names = s.names();
  names.push_back("0");
  return FiniteSemigroup(std::move(names), table);
}

FiniteMonoid make_g0(const FiniteGroup& g, int cap) {
  auto sg = adjoin_zero(g.monoid.sg, cap);
  return make_monoid(std::move(sg), g.identity());
}

std::optional<G0View> as_g0(const FiniteMonoid& m) {
  const int n = m.size();
  if (n < 2) return std::nullopt;
  int zero = -1;
  for (int z = 0; z < n; ++z) {
    bool absorbing = true;
    for (int x = 0; x < n && absorbing; ++x) {
      absorbing = m.mul(z, x) == z && m.mul(x, z) == z;
    }
    if (absorbing) {
      zero = z;
      break;
    }
  }
  if (zero < 0 || zero == m.identity) return std::nullopt;

  std::vector<int> group_to_monoid;
  std::vector<int> monoid_to_group(n, -1);
  for (int x = 0; x < n; ++x) {
    if (x == zero) continue;
    monoid_to_group[x] = static_cast<int>(group_to_monoid.size());
    group_to_monoid.push_back(x);
  }
  const int gn = n - 1;
  // the complement of the zero must be closed under the product
  std::vector<std::vector<int>> table(gn, std::vector<int>(gn));
  std::vector<std::string> names(gn);
  for (int i = 0; i < gn; ++i) {
    names[i] = m.name(group_to_monoid[i]);
    for (int j = 0; j < gn; ++j) {
      const int prod = m.mul(group_to_monoid[i], group_to_monoid[j]);
      if (prod == zero) return std::nullopt;
      table[i][j] = monoid_to_group[prod];
    }
  }
  auto checked = validate_semigroup(names, table);
  if (std::holds_alternative<AssocViolation>(checked)) return std::nullopt;
  auto monoid = make_monoid(std::get<FiniteSemigroup>(std::move(checked)),
                            monoid_to_group[m.identity]);
  auto group = as_group(monoid);
  if (!group) return std::nullopt;
  return G0View{zero, std::move(*group), std::move(group_to_monoid),
                std::move(monoid_to_group)};
}

FiniteMonoid monoid_01() {
  return make_g0(cyclic_group(1));
}

}  // namespace parwb
