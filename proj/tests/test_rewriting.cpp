#include "parwb/rewriting.hpp"

#include <doctest.h>

#include "parwb/workbench.hpp"

using namespace parwb;

namespace {

int ex1_index(int a, int b) { return (a / 2) * 4 + b / 2; }

// Definition-level oracle for the reducts of a two-letter word.
std::set<int> pair_reducts_oracle(const PartialAction& a, const MXPartition& p,
                                  int c1, int c2) {
  std::set<int> out;
  for (int m = 0; m < p.monoid_size; ++m) {
    for (int x = 0; x < p.carrier_size; ++x) {
      if (p.class_id(m, x) != c1) continue;
      for (int y = 0; y < p.carrier_size; ++y) {
        if (p.class_id(m, y) != c2) continue;
        out.insert(p.class_id(m, a.carrier.mul(x, y)));
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("single letters are normal forms") {
  const auto a = fixture("NULL-2");
  const auto p = classes_generic(a);
  RewriteSystem rs(a, p);
  for (int c = 0; c < p.num_classes(); ++c) {
    CHECK(rs.one_step_reducts({c}).empty());
    CHECK(rs.is_normal_form({c}));
  }
}

TEST_CASE("pair reducts agree with the definition-level oracle") {
  for (const char* name : {"EX1", "NULL-3", "LZ-pos", "EX4"}) {
    const auto a = fixture(name);
    const auto p = classes_generic(a);
    RewriteSystem rs(a, p);
    for (int c1 = 0; c1 < p.num_classes(); ++c1) {
      for (int c2 = 0; c2 < p.num_classes(); ++c2) {
        const auto& got = rs.pair_reducts(c1, c2);
        const std::set<int> expected = pair_reducts_oracle(a, p, c1, c2);
        CHECK(std::set<int>(got.begin(), got.end()) == expected);
      }
    }
  }
}

TEST_CASE("EX1: [0,(2,0)][0,(0,2)] reduces to [0,(0,0)] and [0,(4,0)]") {
  const auto a = fixture("EX1");
  const auto p = classes_generic(a);
  RewriteSystem rs(a, p);
  const int c_left = p.class_id(2, ex1_index(2, 0));
  const int c_right = p.class_id(2, ex1_index(0, 2));
  const int c00 = p.class_id(2, ex1_index(0, 0));
  const int c40 = p.class_id(2, ex1_index(4, 0));
  const auto reducts = rs.one_step_reducts({c_left, c_right});
  CHECK(reducts == std::set<Word>{{c00}, {c40}});
  CHECK_FALSE(rs.joinable({c00}, {c40}));
  CHECK(rs.joinable({c_left, c_right}, {c00}));
}

TEST_CASE("global actions on a group: both reducts of [m,x][m,y] coincide") {
  const auto& monoid = cyclic_group(2).monoid;
  for (const auto& carrier : {mult_mod(3), left_zero(2), null_semigroup(2)}) {
    enumerate_global_actions(monoid, carrier, [&](const PartialAction& g) {
      const auto p = classes_generic(g);
      RewriteSystem rs(g, p);
      for (int c1 = 0; c1 < p.num_classes(); ++c1) {
        for (int c2 = 0; c2 < p.num_classes(); ++c2) {
          CHECK(rs.one_step_reducts({c1, c2}).size() <= 1);
        }
      }
      return true;
    });
  }
}

TEST_CASE("reduction strictly shortens words") {
  const auto a = fixture("EX1");
  const auto p = classes_generic(a);
  RewriteSystem rs(a, p);
  for (int c1 = 0; c1 < 5; ++c1) {
    for (int c2 = 16; c2 < std::min(20, p.num_classes()); ++c2) {
      const Word w{c1, c2, c1};
      for (const Word& r : rs.one_step_reducts(w)) {
        CHECK(r.size() == w.size() - 1);
      }
      for (const Word& r : rs.all_reducts(w)) {
        CHECK(r.size() <= w.size());
        CHECK(!r.empty());
      }
    }
  }
}

TEST_CASE("joinable is reflexive") {
  const auto a = fixture("NULL-3");
  const auto p = classes_generic(a);
  RewriteSystem rs(a, p);
  const Word w{0, 1, 2};
  CHECK(rs.joinable(w, w));
}

TEST_CASE("local confluence of the fixtures") {
  auto check_fixture = [](const char* name, bool expect_confluent) {
    const auto a = fixture(name);
    const auto p = classes_generic(a);
    RewriteSystem rs(a, p);
    const auto verdict = is_locally_confluent(rs);
    CAPTURE(name);
    if (expect_confluent) {
      CHECK(verdict.status == ConfluenceVerdict::Status::kConfluent);
    } else {
      CHECK(verdict.status == ConfluenceVerdict::Status::kNotConfluent);
    }
  };
  check_fixture("EX1", false);
  check_fixture("LZ-neg", false);
  check_fixture("LZ-pos", true);
  check_fixture("LZ-01", true);
  check_fixture("NULL-2", true);
  check_fixture("NULL-3", true);
  check_fixture("EX4", true);
  check_fixture("EX3-semigroup", false);
}

TEST_CASE("EX1's canonical confluence witness has length 2 and the expected reducts") {
  const auto a = fixture("EX1");
  const auto p = classes_generic(a);
  RewriteSystem rs(a, p);
  const auto verdict = is_locally_confluent(rs);
  REQUIRE(verdict.witness.has_value());
  const auto& w = *verdict.witness;
  CHECK(w.word.size() == 2);
  const int c00 = p.class_id(2, ex1_index(0, 0));
  const int c40 = p.class_id(2, ex1_index(4, 0));
  CHECK(std::set<Word>{w.reduct_a, w.reduct_b} ==
        std::set<Word>{{c00}, {c40}});
}

TEST_CASE("every global action yields a locally confluent system") {
  const std::vector<FiniteMonoid> monoids = {monoid_01(),
                                             make_g0(cyclic_group(2))};
  for (const auto& monoid : monoids) {
    for (const auto& carrier : {mult_mod(3), left_zero(3), null_semigroup(3)}) {
      enumerate_global_actions(monoid, carrier, [&](const PartialAction& g) {
        const auto p = classes_generic(g);
        RewriteSystem rs(g, p);
        CHECK(is_locally_confluent(rs).locally_confluent());
        return true;
      });
    }
  }
}

TEST_CASE("confluence sweep respects the word cap") {
  const auto a = fixture("EX2");
  const auto p = classes_generic(a);
  RewriteSystem rs(a, p);
  // |X_M| = 100, so 100^2 + 100^3 candidates exceed the default cap
  const auto capped = is_locally_confluent(rs);
  CHECK(capped.status == ConfluenceVerdict::Status::kTooLarge);
  const auto full = is_locally_confluent(rs, 2'000'000);
  CHECK(full.status == ConfluenceVerdict::Status::kNotConfluent);
}

TEST_CASE("2/3-letter verdict matches the definition checked up to length 4") {
  const auto m = make_g0(cyclic_group(2));
  for (const auto& carrier : {left_zero(2), null_semigroup(2), mult_mod(3)}) {
    enumerate_partial_actions(m, carrier, {}, [&](const PartialAction& a) {
      const auto p = classes_generic(a);
      RewriteSystem rs(a, p);
      const bool fast = is_locally_confluent(rs).locally_confluent();
      const bool direct = oracle_local_confluence(rs, 4);
      CHECK(fast == direct);
      return true;
    });
  }
}

TEST_CASE("under local confluence every word has exactly one normal form") {
  for (const char* name : {"NULL-3", "EX4", "LZ-pos"}) {
    const auto a = fixture(name);
    const auto p = classes_generic(a);
    RewriteSystem rs(a, p);
    REQUIRE(is_locally_confluent(rs).locally_confluent());
    const int k = p.num_classes();
    for (int c1 = 0; c1 < k; ++c1) {
      for (int c2 = 0; c2 < k; ++c2) {
        for (int c3 = 0; c3 < k; ++c3) {
          const Word w{c1, c2, c3};
          const auto nfs = rs.normal_forms(w);
          REQUIRE(nfs.size() == 1);
          CHECK(*nfs.begin() == rs.normalize(w));
        }
      }
    }
  }
}

TEST_CASE("equivalent_bounded: identical words, one-step reducts, and peaks") {
  const auto a = fixture("EX1");
  const auto p = classes_generic(a);
  RewriteSystem rs(a, p);
  const Word w{0, 1};

  const auto same = equivalent_bounded(rs, w, w);
  CHECK(same.status == EquivalenceSearch::Status::kEquivalent);
  CHECK(same.chain == std::vector<Word>{w});

  // a word and any of its reducts are equivalent by a one-step chain
  const int c17 = p.class_id(2, ex1_index(0, 2));
  const Word peak{c17, c17};
  for (const Word& r : rs.one_step_reducts(peak)) {
    const auto found = equivalent_bounded(rs, peak, r);
    REQUIRE(found.status == EquivalenceSearch::Status::kEquivalent);
    CHECK(found.chain.size() == 2);
  }

  // the two distinct normal forms [0,(0,0)] and [0,(4,0)] are equivalent
  // through the peak, so the bounded search finds a chain
  const int c00 = p.class_id(2, ex1_index(0, 0));
  const int c40 = p.class_id(2, ex1_index(4, 0));
  const auto through_peak = equivalent_bounded(rs, {c00}, {c40}, 4);
  REQUIRE(through_peak.status == EquivalenceSearch::Status::kEquivalent);
  // every consecutive pair of chain words is one step apart
  for (size_t i = 0; i + 1 < through_peak.chain.size(); ++i) {
    const Word& u = through_peak.chain[i];
    const Word& v = through_peak.chain[i + 1];
    const bool forward = rs.one_step_reducts(u).contains(v);
    const bool backward = rs.one_step_reducts(v).contains(u);
    CHECK((forward || backward));
  }
}

TEST_CASE("equivalent_bounded is three-valued: misses are inconclusive") {
  const auto a = fixture("LZ-01");
  const auto p = classes_generic(a);
  RewriteSystem rs(a, p);
  // [0,a] and [1,b] generate different components
  const int c0a = p.class_id(1, 0);
  const int c1b = p.class_id(0, 1);
  const auto r = equivalent_bounded(rs, {c0a}, {c1b}, 4, 1000);
  CHECK(r.status == EquivalenceSearch::Status::kNotWithinBounds);
}

TEST_CASE("unique normal form condition") {
  SUBCASE("locally confluent systems satisfy it") {
    for (const char* name : {"NULL-2", "EX4", "LZ-pos"}) {
      const auto a = fixture(name);
      const auto p = classes_generic(a);
      RewriteSystem rs(a, p);
      CHECK(unique_nf_condition(rs).status == UniqueNfResult::Status::kHolds);
    }
  }
  SUBCASE("EX1 is globalizable: no violation is ever found") {
    const auto a = fixture("EX1");
    const auto p = classes_generic(a);
    RewriteSystem rs(a, p);
    for (const auto max_visited : {1000ull, 20000ull}) {
      UniqueNfBounds bounds;
      bounds.max_len = 4;
      bounds.max_visited = max_visited;
      const auto r = unique_nf_condition(rs, bounds);
      CHECK(r.status == UniqueNfResult::Status::kInconclusive);
    }
  }
  SUBCASE("EX2 is violated with an explicit chain") {
    const auto a = fixture("EX2");
    const auto p = classes_generic(a);
    RewriteSystem rs(a, p);
    UniqueNfBounds bounds;
    bounds.confluence_word_cap = 2'000'000;
    const auto r = unique_nf_condition(rs, bounds);
    REQUIRE(r.status == UniqueNfResult::Status::kViolated);
    REQUIRE(r.violation.has_value());
    const auto& v = *r.violation;
    CHECK(v.class_mx != v.class_iota);
    // the chain connects the two single-letter words
    CHECK(v.chain.front().size() == 1);
    CHECK(v.chain.back().size() == 1);
    for (size_t i = 0; i + 1 < v.chain.size(); ++i) {
      const bool forward = rs.one_step_reducts(v.chain[i]).contains(v.chain[i + 1]);
      const bool backward =
          rs.one_step_reducts(v.chain[i + 1]).contains(v.chain[i]);
      CHECK((forward || backward));
    }
  }
}

TEST_CASE("normalize is independent of reduction order under confluence") {
  const auto a = fixture("NULL-3");
  const auto p = classes_generic(a);
  RewriteSystem rs(a, p);
  const int k = p.num_classes();
  for (int c1 = 0; c1 < k; ++c1) {
    for (int c2 = 0; c2 < k; ++c2) {
      for (int c3 = 0; c3 < k; ++c3) {
        const Word w{c1, c2, c3};
        const Word nf = rs.normalize(w);
        // every maximal reduction path ends at the same word
        for (const Word& r : rs.all_reducts(w)) {
          if (rs.is_normal_form(r)) CHECK(r == nf);
        }
      }
    }
  }
}
