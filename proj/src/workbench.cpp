#include "parwb/workbench.hpp"

#include <algorithm>
#include <map>

#include "parwb/criteria.hpp"

namespace parwb {

namespace {

// All partial self-maps of X whose domain is a subsemigroup and which are
// homomorphisms on it, in canonical order: ascending domain bitmask, then
// map values lexicographically position by position. These are exactly the
// per-element candidates; only (PA1)-(PA3) couple different elements.
std::vector<std::vector<int>> endo_like_partial_maps(
    const FiniteSemigroup& x) {
  const int n = x.size();
  std::vector<std::vector<int>> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    Subset dom(n);
    std::vector<int> positions;
    for (int i = 0; i < n; ++i) {
      if (mask >> i & 1) {
        dom.add(i);
        positions.push_back(i);
      }
    }
    if (!is_subsemigroup(x, dom)) continue;
    const int k = static_cast<int>(positions.size());
    std::vector<int> choice(k, 0);
    while (true) {
      std::vector<int> map(n, PartialAction::kUndefined);
      for (int i = 0; i < k; ++i) map[positions[i]] = choice[i];
      bool hom = true;
      for (int i = 0; i < k && hom; ++i) {
        for (int j = 0; j < k && hom; ++j) {
          const int xy = x.mul(positions[i], positions[j]);
          hom = x.mul(map[positions[i]], map[positions[j]]) == map[xy];
        }
      }
      if (hom) out.push_back(map);
      // odometer over choice, last position fastest
      int pos = k - 1;
      while (pos >= 0 && choice[pos] == n - 1) {
        choice[pos] = 0;
        --pos;
      }
      if (pos < 0) break;
      ++choice[pos];
    }
    if (n == 0) break;
  }
  return out;
}

// (PA2)/(PA3) across all element pairs; per-element properties are already
// guaranteed by construction of the candidates.
bool compatible_family(const PartialAction& a) {
  const int nm = a.monoid.size();
  const int nx = a.carrier.size();
  for (int m = 0; m < nm; ++m) {
    for (int n = 0; n < nm; ++n) {
      const int nm_prod = a.monoid.mul(n, m);
      for (int x = 0; x < nx; ++x) {
        const bool lhs = a.defined(m, x) && a.defined(n, a.apply(m, x));
        const bool rhs = a.defined(nm_prod, x) && a.defined(m, x);
        if (lhs != rhs) return false;
        if (lhs && a.apply(n, a.apply(m, x)) != a.apply(nm_prod, x)) {
          return false;
        }
      }
    }
  }
  return true;
}

bool passes_filters(const PartialAction& a, const EnumerationFilters& f) {
  if (f.g0_only && !as_g0(a.monoid)) return false;
  if (f.ideal_domains_only || f.unital_only) {
    for (int m = 0; m < a.monoid.size(); ++m) {
      const Subset dom = a.domain(m);
      if (!is_ideal(a.carrier, dom)) return false;
      if (f.unital_only && !inner_identity(a.carrier, dom)) return false;
    }
  }
  return true;
}

}  // namespace

void enumerate_partial_actions(
    const FiniteMonoid& monoid, const FiniteSemigroup& carrier,
    const EnumerationFilters& filters,
    const std::function<bool(const PartialAction&)>& yield,
    const EnumerationLimits& limits) {
  if (monoid.size() > limits.max_monoid) {
    throw SizeCapError("enumerate_partial_actions: |M| = " +
                       std::to_string(monoid.size()) + " exceeds " +
                       std::to_string(limits.max_monoid));
  }
  if (carrier.size() > limits.max_carrier) {
    throw SizeCapError("enumerate_partial_actions: |X| = " +
                       std::to_string(carrier.size()) + " exceeds " +
                       std::to_string(limits.max_carrier));
  }
  if (filters.g0_only && !as_g0(monoid)) return;

  const auto candidates = endo_like_partial_maps(carrier);
  std::vector<int> free_elements;
  for (int m = 0; m < monoid.size(); ++m) {
    if (m != monoid.identity) free_elements.push_back(m);
  }

  PartialAction a;
  a.monoid = monoid;
  a.carrier = carrier;
  a.maps.assign(monoid.size(), {});
  std::vector<int> identity_map(carrier.size());
  for (int x = 0; x < carrier.size(); ++x) identity_map[x] = x;
  a.maps[monoid.identity] = identity_map;

  const int free_count = static_cast<int>(free_elements.size());
  std::vector<size_t> choice(free_count, 0);
  while (true) {
    for (int i = 0; i < free_count; ++i) {
      a.maps[free_elements[i]] = candidates[choice[i]];
    }
    if (compatible_family(a) && passes_filters(a, filters)) {
      if (!yield(a)) return;
    }
    int pos = free_count - 1;
    while (pos >= 0 && choice[pos] + 1 == candidates.size()) {
      choice[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++choice[pos];
  }
}

std::uint64_t count_partial_actions(const FiniteMonoid& monoid,
                                    const FiniteSemigroup& carrier,
                                    const EnumerationFilters& filters,
                                    const EnumerationLimits& limits) {
  std::uint64_t count = 0;
  enumerate_partial_actions(
      monoid, carrier, filters,
      [&](const PartialAction&) {
        ++count;
        return true;
      },
      limits);
  return count;
}

bool oracle_local_confluence(const RewriteSystem& rs, int max_len,
                             std::uint64_t word_cap) {
  const std::uint64_t k = rs.alphabet_size();
  std::uint64_t total = 0;
  std::uint64_t level = 1;
  for (int len = 1; len <= max_len; ++len) {
    level *= k;
    total += level;
    if (total > word_cap) {
      throw SizeCapError("oracle_local_confluence: too many candidate words");
    }
  }
  Word w;
  // iterate all words of length 1..max_len as an odometer
  for (int len = 1; len <= max_len; ++len) {
    w.assign(len, 0);
    while (true) {
      const auto reducts = rs.one_step_reducts(w);
      if (reducts.size() >= 2) {
        std::vector<Word> list(reducts.begin(), reducts.end());
        for (size_t i = 0; i < list.size(); ++i) {
          for (size_t j = i + 1; j < list.size(); ++j) {
            if (!rs.joinable(list[i], list[j])) return false;
          }
        }
      }
      int pos = len - 1;
      while (pos >= 0 && w[pos] == static_cast<int>(k) - 1) {
        w[pos] = 0;
        --pos;
      }
      if (pos < 0) break;
      ++w[pos];
    }
  }
  return true;
}

namespace {

// Backtracking over the free cells of the table with incremental
// associativity pruning: after every assignment, any triple whose three
// lookups are all defined must associate.
class SemigroupSearch {
 public:
  SemigroupSearch(int n, bool with_identity,
                  const std::function<void(const std::vector<int>&)>& emit)
      : n_(n), with_identity_(with_identity), table_(n * n, -1), emit_(emit) {
    if (with_identity_) {
      for (int i = 0; i < n_; ++i) {
        table_[i] = i;          // 0 * i = i
        table_[i * n_] = i;     // i * 0 = i
      }
    }
    for (int i = 0; i < n_ * n_; ++i) {
      if (table_[i] < 0) free_cells_.push_back(i);
    }
  }

  void run() { fill(0); }

 private:
  bool consistent() {
    // full recheck of all fully-defined triples; cheap at n <= 5
    for (int a = 0; a < n_; ++a) {
      for (int b = 0; b < n_; ++b) {
        const int ab = table_[a * n_ + b];
        if (ab < 0) continue;
        for (int c = 0; c < n_; ++c) {
          const int bc = table_[b * n_ + c];
          if (bc < 0) continue;
          const int left = table_[ab * n_ + c];
          const int right = table_[a * n_ + bc];
          if (left >= 0 && right >= 0 && left != right) return false;
        }
      }
    }
    return true;
  }

  void fill(size_t index) {
    if (index == free_cells_.size()) {
      emit_(table_);
      return;
    }
    const int cell = free_cells_[index];
    for (int value = 0; value < n_; ++value) {
      table_[cell] = value;
      if (consistent()) fill(index + 1);
    }
    table_[cell] = -1;
  }

  int n_;
  bool with_identity_;
  std::vector<int> table_;
  std::vector<int> free_cells_;
  const std::function<void(const std::vector<int>&)>& emit_;
};

FiniteSemigroup from_flat(int n, const std::vector<int>& flat,
                          const std::string& prefix) {
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rows[i][j] = flat[i * n + j];
  return FiniteSemigroup(default_names(n, prefix), rows);
}

}  // namespace

void enumerate_semigroups(
    int n, const std::function<void(const FiniteSemigroup&)>& yield) {
  if (n < 1) throw InputError("enumerate_semigroups: n must be >= 1");
  if (n > 5) throw SizeCapError("enumerate_semigroups: n > 5 is not supported");
  auto emit = [&](const std::vector<int>& flat) {
    yield(from_flat(n, flat, "x"));
  };
  SemigroupSearch(n, false, emit).run();
}

void enumerate_monoids(int n,
                       const std::function<void(const FiniteMonoid&)>& yield) {
  if (n < 1) throw InputError("enumerate_monoids: n must be >= 1");
  if (n > 5) throw SizeCapError("enumerate_monoids: n > 5 is not supported");
  auto emit = [&](const std::vector<int>& flat) {
    yield(make_monoid(from_flat(n, flat, "m"), 0));
  };
  SemigroupSearch(n, true, emit).run();
}

void enumerate_global_actions(
    const FiniteMonoid& monoid, const FiniteSemigroup& carrier,
    const std::function<bool(const PartialAction&)>& yield) {
  const int nx = carrier.size();
  // all total endomorphisms of the carrier
  std::vector<std::vector<int>> endos;
  {
    std::vector<int> map(nx, 0);
    while (true) {
      bool hom = true;
      for (int x = 0; x < nx && hom; ++x)
        for (int y = 0; y < nx && hom; ++y)
          hom = carrier.mul(map[x], map[y]) == map[carrier.mul(x, y)];
      if (hom) endos.push_back(map);
      int pos = nx - 1;
      while (pos >= 0 && map[pos] == nx - 1) {
        map[pos] = 0;
        --pos;
      }
      if (pos < 0) break;
      ++map[pos];
    }
  }

  const int nm = monoid.size();
  PartialAction a;
  a.monoid = monoid;
  a.carrier = carrier;
  a.maps.assign(nm, {});
  std::vector<bool> assigned(nm, false);
  std::vector<int> identity_map(nx);
  for (int x = 0; x < nx; ++x) identity_map[x] = x;
  a.maps[monoid.identity] = identity_map;
  assigned[monoid.identity] = true;

  std::vector<int> order;
  for (int m = 0; m < nm; ++m) {
    if (m != monoid.identity) order.push_back(m);
  }

  // alpha_n . alpha_m must equal alpha_{nm} wherever all three are chosen
  auto consistent = [&]() {
    for (int m = 0; m < nm; ++m) {
      if (!assigned[m]) continue;
      for (int n = 0; n < nm; ++n) {
        if (!assigned[n]) continue;
        const int prod = monoid.mul(n, m);
        if (!assigned[prod]) continue;
        for (int x = 0; x < nx; ++x) {
          if (a.maps[n][a.maps[m][x]] != a.maps[prod][x]) return false;
        }
      }
    }
    return true;
  };

  bool stop = false;
  auto assign = [&](auto&& self, size_t index) -> void {
    if (stop) return;
    if (index == order.size()) {
      if (!yield(a)) stop = true;
      return;
    }
    const int m = order[index];
    for (const auto& endo : endos) {
      a.maps[m] = endo;
      assigned[m] = true;
      if (consistent()) self(self, index + 1);
      assigned[m] = false;
      if (stop) return;
    }
  };
  assign(assign, 0);
}

namespace {

PartialAction with_identity_map(FiniteMonoid monoid, FiniteSemigroup carrier) {
  PartialAction a;
  a.monoid = std::move(monoid);
  a.carrier = std::move(carrier);
  a.maps.assign(a.monoid.size(),
                std::vector<int>(a.carrier.size(), PartialAction::kUndefined));
  for (int x = 0; x < a.carrier.size(); ++x) a.maps[a.monoid.identity][x] = x;
  return a;
}

void require_valid(const PartialAction& a, const std::string& name) {
  const auto validation = validate_partial_action(a);
  if (!validation.ok()) {
    throw InternalError("fixture " + name + " fails axiom " +
                        to_string(validation.failures.front().axiom) + ": " +
                        validation.failures.front().detail);
  }
}

PartialAction fixture_ex1() {
  const auto z8 = mult_mod(8);
  const auto pairs = direct_product(z8, z8);
  Subset even(pairs.size());
  for (int a = 0; a < 8; a += 2)
    for (int b = 0; b < 8; b += 2) even.add(a * 8 + b);
  // re-index the even pairs as their own carrier
  std::vector<int> members = even.members();
  std::vector<int> to_sub(pairs.size(), -1);
  std::vector<std::string> names;
  for (size_t i = 0; i < members.size(); ++i) {
    to_sub[members[i]] = static_cast<int>(i);
    names.push_back(pairs.name(members[i]));
  }
  std::vector<std::vector<int>> table(members.size(),
                                      std::vector<int>(members.size()));
  for (size_t i = 0; i < members.size(); ++i)
    for (size_t j = 0; j < members.size(); ++j)
      table[i][j] = to_sub[pairs.mul(members[i], members[j])];
  FiniteSemigroup carrier(names, table);

  auto a = with_identity_map(make_g0(cyclic_group(2)), carrier);
  for (size_t i = 0; i < members.size(); ++i) {
    const int row = members[i] / 8, col = members[i] % 8;
    a.maps[1][i] = to_sub[col * 8 + row];  // alpha_g swaps the coordinates
  }
  require_valid(a, "EX1");
  return a;
}

PartialAction fixture_ex2() {
  const int n = 4;
  const int size = n * n * n;
  auto index = [&](int x, int y, int z) { return (x * n + y) * n + z; };
  std::vector<std::string> names(size);
  std::vector<std::vector<int>> table(size, std::vector<int>(size));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        names[index(x, y, z)] = "(" + std::to_string(x) + "," +
                                std::to_string(y) + "," + std::to_string(z) + ")";
        for (int x2 = 0; x2 < n; ++x2)
          for (int y2 = 0; y2 < n; ++y2)
            for (int z2 = 0; z2 < n; ++z2)
              table[index(x, y, z)][index(x2, y2, z2)] =
                  index(x * x2 % n, y * y2 % n, z * z2 % n);
      }
  FiniteSemigroup carrier(names, table);

  auto a = with_identity_map(make_g0(cyclic_group(2)), carrier);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        a.maps[1][index(x, y, z)] = index(y, x, z);  // swap first two
        if (x == 0 && y == 0) a.maps[2][index(x, y, z)] = index(x, y, z);
      }
  require_valid(a, "EX2");
  return a;
}

PartialAction fixture_ex4() {
  auto a = with_identity_map(monoid_01(), mult_mod(12));
  for (int x : {0, 4, 8}) a.maps[1][x] = x;
  require_valid(a, "EX4");
  return a;
}

PartialAction fixture_lz_pos() {
  auto a = with_identity_map(make_g0(cyclic_group(2)), left_zero(2));
  a.maps[1] = {1, 0};  // alpha_g swaps; dom alpha_0 stays empty
  require_valid(a, "LZ-pos");
  return a;
}

PartialAction fixture_lz_neg() {
  auto a = with_identity_map(cyclic_group(2).monoid, left_zero(2));
  a.maps[1][0] = 0;  // dom alpha_g = {a0}, neither empty nor everything
  require_valid(a, "LZ-neg");
  return a;
}

PartialAction fixture_lz_01() {
  auto a = with_identity_map(monoid_01(), left_zero(2));
  require_valid(a, "LZ-01");
  return a;
}

PartialAction fixture_null(int n) {
  auto a = with_identity_map(make_g0(cyclic_group(2)), null_semigroup(n));
  // alpha_g: a permutation fixing the zero (the only endomorphisms that are
  // invertible); alpha_0 fixes the zero.
  for (int x = 0; x < n; ++x) a.maps[1][x] = x;
  if (n >= 3) {
    a.maps[1][1] = 2;
    a.maps[1][2] = 1;
  }
  a.maps[2][0] = 0;
  require_valid(a, "NULL-" + std::to_string(n));
  return a;
}

}  // namespace

std::vector<std::string> fixture_names() {
  return {"EX1",    "EX2",    "EX3-semigroup", "EX4",   "LZ-pos",
          "LZ-neg", "LZ-01",  "NULL-2",        "NULL-3"};
}

PartialAction fixture(const std::string& name) {
  if (name == "EX1") return fixture_ex1();
  if (name == "EX2") return fixture_ex2();
  if (name == "EX3-semigroup") {
    auto a = semigroup_view(fixture_ex3_algebra());
    require_valid(a, "EX3-semigroup");
    return a;
  }
  if (name == "EX4") return fixture_ex4();
  if (name == "LZ-pos") return fixture_lz_pos();
  if (name == "LZ-neg") return fixture_lz_neg();
  if (name == "LZ-01") return fixture_lz_01();
  if (name == "NULL-2") return fixture_null(2);
  if (name == "NULL-3") return fixture_null(3);
  throw InputError("unknown fixture: " + name);
}

LinearPA01 fixture_ex3_algebra() {
  // basis E12, E13, E23; the only nonzero basis product is E12*E23 = E13
  std::vector<std::vector<FpVec>> structure(
      3, std::vector<FpVec>(3, FpVec(3, 0)));
  structure[0][2][1] = 1;
  auto algebra = make_algebra(2, 3, structure, {"E12", "E13", "E23"});
  FpMat dom0 = {{0, 1, 0}, {0, 0, 1}};    // span{E13, E23}
  FpMat alpha0 = {{0, 1, 0}, {0, 0, 0}};  // E13 -> E13, E23 -> 0
  return make_linear_pa01(std::move(algebra), std::move(dom0),
                          std::move(alpha0));
}

}  // namespace parwb
