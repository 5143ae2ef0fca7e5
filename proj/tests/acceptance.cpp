// Acceptance suite: one numbered check per run (or all of them), each
// printing a single PASS/FAIL line. Run as `acceptance [N]`.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "parwb/criteria.hpp"
#include "parwb/falgebra.hpp"
#include "parwb/globalization.hpp"
#include "parwb/workbench.hpp"

namespace {

using namespace parwb;
using Clock = std::chrono::steady_clock;

int ex1_index(int a, int b) { return (a / 2) * 4 + b / 2; }
int ex2_index(int x, int y, int z) { return (x * 4 + y) * 4 + z; }

struct Failure {
  std::string what;
};

#define EXPECT(cond, message)                         \
  do {                                                \
    if (!(cond)) throw Failure{message};              \
  } while (0)

std::vector<FiniteSemigroup> carriers_up_to(int n) {
  std::vector<FiniteSemigroup> out;
  for (int size = 1; size <= n; ++size) {
    enumerate_semigroups(size,
                         [&](const FiniteSemigroup& s) { out.push_back(s); });
  }
  return out;
}

std::vector<FiniteMonoid> g0_monoids_up_to_c2() {
  return {monoid_01(), make_g0(cyclic_group(2))};
}

// ---- criterion 1 ----
void criterion_1(std::string& detail) {
  const auto ex1 = fixture("EX1");
  const auto report = run_criteria(ex1);
  EXPECT(report.lc1.passed(), "LC1 must pass on EX1");
  EXPECT(report.lc2.passed(), "LC2 must pass on EX1");
  EXPECT(report.lc3.failed(), "LC3 must fail on EX1");
  EXPECT(report.globalizable == "yes", "EX1 must be globalizable");
  EXPECT(report.locally_confluent == "no",
         "EX1 must not be locally confluent by the criteria");

  const auto p = classes_generic(ex1);
  const int c00 = p.class_id(2, ex1_index(0, 0));
  const int c40 = p.class_id(2, ex1_index(4, 0));

  // the reported LC3 witness produces exactly the classes of [0,(0,0)] and
  // [0,(4,0)]
  const auto& w = report.lc3.witness;
  EXPECT(w.size() == 5, "LC3 witness has shape (g,h,x,y,z)");
  const auto canonical = eval_lc3_at(ex1, 2, w[0], w[1], w[2], w[3], w[4]);
  EXPECT(canonical.triggered && !canonical.holds,
         "reported LC3 witness must violate the condition");
  const std::set<int> witness_classes = {p.class_id(2, canonical.xyz),
                                         p.class_id(2, canonical.rhs)};
  EXPECT(witness_classes == std::set<int>({c00, c40}),
         "LC3 witness values must land in the classes of [0,(0,0)] and "
         "[0,(4,0)]");

  // the paper's own tuple gives the ordered values (0,0) vs (4,0)
  const auto paper =
      eval_lc3_at(ex1, 2, 0, 1, ex1_index(2, 0), ex1_index(0, 2), -1);
  EXPECT(paper.triggered && !paper.holds, "paper LC3 tuple must violate");
  EXPECT(paper.xyz == ex1_index(0, 0), "xyz must be (0,0)");
  EXPECT(paper.rhs == ex1_index(4, 0), "alpha_e(x)alpha_g(y)z must be (4,0)");
  EXPECT(!paper.k.has_value(), "no k in G may map (0,0) to (4,0)");

  // confluence: a length-2 witness whose reducts are those two classes
  RewriteSystem rs(ex1, p);
  const auto verdict = is_locally_confluent(rs);
  EXPECT(verdict.status == ConfluenceVerdict::Status::kNotConfluent,
         "EX1 must not be locally confluent");
  EXPECT(verdict.witness->word.size() == 2, "witness must have length 2");
  EXPECT((std::set<Word>{verdict.witness->reduct_a,
                         verdict.witness->reduct_b} ==
          std::set<Word>{{c00}, {c40}}),
         "witness reducts must be the classes of [0,(0,0)] and [0,(4,0)]");
  detail = "EX1: globalizable, LC3 fails with values (0,0) vs (4,0), "
           "length-2 non-confluence witness reduces to [0,(0,0)] and "
           "[0,(4,0)]";
}

// ---- criterion 2 ----
void criterion_2(std::string& detail) {
  const auto ex2 = fixture("EX2");
  const auto lc1 = check_lc1(ex2);
  const auto lc2 = check_lc2(ex2);
  EXPECT(lc1.passed(), "LC1 must pass on EX2");
  EXPECT(lc2.failed(), "LC2 must fail on EX2");

  // the paper witness (g, (0,1,0), (1,0,0), 1) violates LC2 exactly
  const auto paper = eval_lc2_at(ex2, 2, 1, ex2_index(0, 1, 0),
                                 ex2_index(1, 0, 0), -1);
  EXPECT(paper.triggered, "xyz = (0,0,0) lies in dom alpha_0");
  EXPECT(!paper.holds && !paper.rhs_in_dom0,
         "x alpha_g(y) z must escape dom alpha_0");
  EXPECT(paper.x_amy_z == ex2_index(0, 1, 0),
         "x alpha_g(y) z must equal (0,1,0)");

  const auto d = decide_g0(ex2);
  EXPECT(d.globalizable == Verdict::kFail, "EX2 must not be globalizable");

  const auto p = classes_generic(ex2);
  RewriteSystem rs(ex2, p);
  UniqueNfBounds bounds;
  bounds.confluence_word_cap = 2'000'000;
  bounds.max_len = 6;
  const auto nf = unique_nf_condition(rs, bounds);
  EXPECT(nf.status == UniqueNfResult::Status::kViolated,
         "the unique-normal-form condition must be violated");
  const auto& chain = nf.violation->chain;
  EXPECT(chain.size() >= 2, "violation needs an explicit chain");
  EXPECT(chain.front() == Word{nf.violation->class_mx} ||
             chain.front() == Word{nf.violation->class_iota},
         "chain starts at one of the violating classes");
  for (size_t i = 0; i + 1 < chain.size(); ++i) {
    const bool forward = rs.one_step_reducts(chain[i]).contains(chain[i + 1]);
    const bool backward =
        rs.one_step_reducts(chain[i + 1]).contains(chain[i]);
    EXPECT(forward || backward, "chain steps must be one-step reductions");
    EXPECT(static_cast<int>(chain[i].size()) <= bounds.max_len,
           "chain words must respect max_len");
  }
  std::ostringstream oss;
  oss << "EX2: LC2 fails at (g,(0,1,0),(1,0,0),1), not globalizable, "
         "unique-NF violated by a chain of "
      << chain.size() << " words";
  detail = oss.str();
}

// ---- criterion 3 ----
void criterion_3(std::string& detail) {
  const auto pa = fixture_ex3_algebra();
  EXPECT(is_ideal_subspace(pa.algebra, pa.dom0_rref).ideal,
         "dom alpha_0 must be an ideal");
  EXPECT(is_ideal_subspace(pa.algebra, pa.im0_rref()).ideal,
         "im alpha_0 must be an ideal");
  EXPECT((pa.ker0_rref() == FpMat{{0, 0, 1}}), "ker alpha_0 must be span{E23}");

  const auto d = decide_globalizable_algebra01(pa);
  EXPECT(d.verdict == Verdict::kFail, "EX3 must not be globalizable");
  EXPECT(d.witness.has_value(), "kernel-ideal failure needs a witness");
  EXPECT(d.witness->basis_index == 0 && d.witness->left,
         "witness must be left multiplication by E12");
  EXPECT((d.witness->subspace_vector == FpVec{0, 0, 1}),
         "witness kernel vector must be E23");
  EXPECT((d.witness->product == FpVec{0, 1, 0}), "E12*E23 must equal E13");

  const auto view = semigroup_view(pa);
  const auto semigroup_verdict = decide_01(view);
  EXPECT(semigroup_verdict.verdict == Verdict::kFail,
         "the semigroup view must agree: not globalizable");
  detail = "EX3: ker alpha_0 = span{E23}, E12*E23 = E13 escapes, algebra and "
           "semigroup verdicts agree (not globalizable)";
}

// ---- shared sweep for criteria 4/5/6/8/10 ----
struct SweepStats {
  std::uint64_t valid_actions = 0;
  std::uint64_t with_ideal_hypotheses = 0;
  std::uint64_t confluent = 0;
  std::uint64_t m01_instances = 0;
};

void sweep_g0_actions(
    int max_carrier,
    const std::function<void(const PartialAction&, const MXPartition&,
                             RewriteSystem&, SweepStats&)>& visit,
    SweepStats& stats) {
  const auto monoids = g0_monoids_up_to_c2();
  const auto carriers = carriers_up_to(max_carrier);
  for (const auto& monoid : monoids) {
    for (const auto& carrier : carriers) {
      enumerate_partial_actions(monoid, carrier, {},
                                [&](const PartialAction& a) {
                                  ++stats.valid_actions;
                                  const auto p = classes_generic(a);
                                  RewriteSystem rs(a, p);
                                  visit(a, p, rs, stats);
                                  return true;
                                });
    }
  }
}

// ---- criterion 4 ----
void criterion_4(std::string& detail) {
  SweepStats stats;
  sweep_g0_actions(
      3,
      [](const PartialAction& a, const MXPartition&, RewriteSystem& rs,
         SweepStats& s) {
        if (!check_ideal_hypotheses(a).all_ideal()) return;
        ++s.with_ideal_hypotheses;
        const auto d = decide_g0(a);
        EXPECT(d.locally_confluent != Verdict::kNotApplicable,
               "decide_g0 must apply under the ideal hypotheses");
        const bool by_conditions = d.locally_confluent == Verdict::kPass;
        const bool by_rewriting = is_locally_confluent(rs).locally_confluent();
        const bool by_oracle = oracle_local_confluence(rs, 4);
        EXPECT(by_conditions == by_rewriting,
               "(LC1&LC2&LC3) must equal the 2/3-letter verdict");
        EXPECT(by_rewriting == by_oracle,
               "the 2/3-letter verdict must equal the direct oracle");
        if (by_rewriting) ++s.confluent;
      },
      stats);
  std::ostringstream oss;
  oss << "zero disagreements over " << stats.with_ideal_hypotheses
      << " ideal-hypothesis actions (of " << stats.valid_actions
      << " valid ones)";
  detail = oss.str();
}

// ---- criterion 5 ----
void criterion_5(std::string& detail) {
  SweepStats stats;
  sweep_g0_actions(
      3,
      [](const PartialAction&, const MXPartition&, RewriteSystem& rs,
         SweepStats&) {
        EXPECT(is_locally_confluent(rs).locally_confluent() ==
                   oracle_local_confluence(rs, 4),
               "2/3-letter reduction must match the length-4 definition");
      },
      stats);
  std::ostringstream oss;
  oss << "zero disagreements over " << stats.valid_actions
      << " enumerated actions";
  detail = oss.str();
}

// ---- criterion 6 ----
void criterion_6(std::string& detail) {
  const auto carriers = carriers_up_to(3);
  const auto m01 = monoid_01();
  std::uint64_t tested = 0;
  for (const auto& carrier : carriers) {
    enumerate_partial_actions(m01, carrier, {}, [&](const PartialAction& a) {
      const auto hyp = check_ideal_hypotheses(a);
      if (!hyp.dom0_im0_ideal(1)) return true;
      ++tested;
      const auto h = check_h(a);
      const auto p = classes_generic(a);
      RewriteSystem rs(a, p);
      const bool confluent = is_locally_confluent(rs).locally_confluent();
      const auto g0 = decide_g0(a);
      EXPECT(g0.globalizable != Verdict::kNotApplicable,
             "decide_g0 must apply for {0,1} with ideal hypotheses");
      EXPECT(h.passed() == confluent, "(H) must match local confluence");
      EXPECT(confluent == (g0.globalizable == Verdict::kPass),
             "local confluence must match globalizability");
      // decide_01 performs the same three-way comparison internally and
      // throws on disagreement
      const auto d01 = decide_01(a);
      EXPECT(d01.verdict != Verdict::kNotApplicable, "decide_01 must apply");
      return true;
    });
  }
  std::ostringstream oss;
  oss << "three-way agreement on " << tested << " {0,1}-instances";
  detail = oss.str();
}

// ---- criterion 7 ----
void criterion_7(std::string& detail) {
  std::vector<FiniteMonoid> monoids;
  for (int n = 1; n <= 3; ++n) {
    enumerate_monoids(n,
                      [&](const FiniteMonoid& m) { monoids.push_back(m); });
  }
  std::uint64_t left_zero_tested = 0, null_tested = 0;
  for (const auto& monoid : monoids) {
    for (int n = 1; n <= 3; ++n) {
      enumerate_partial_actions(
          monoid, left_zero(n), {}, [&](const PartialAction& a) {
            ++left_zero_tested;
            const auto p = classes_generic(a);
            RewriteSystem rs(a, p);
            const auto condition = check_left_zero_condition(a, p);
            EXPECT(condition.verdict != Verdict::kNotApplicable,
                   "left-zero condition must apply");
            EXPECT(condition.passed() ==
                       is_locally_confluent(rs).locally_confluent(),
                   "left-zero condition must match local confluence");
            const auto g = left_zero_globalization(a);
            EXPECT(verify_globalization(a, g.beta, g.iota, &g.carrier).ok,
                   "left-zero globalization must verify");
            return true;
          });
      enumerate_partial_actions(
          monoid, null_semigroup(n), {}, [&](const PartialAction& a) {
            ++null_tested;
            const auto p = classes_generic(a);
            RewriteSystem rs(a, p);
            EXPECT(is_locally_confluent(rs).locally_confluent(),
                   "null-semigroup actions must be locally confluent");
            EXPECT(verify_globalization(a, set_globalization(p), p.iota).ok,
                   "set-level globalization must verify");
            return true;
          });
    }
  }
  std::ostringstream oss;
  oss << left_zero_tested << " left-zero and " << null_tested
      << " null-semigroup instances, zero failures (monoids up to order 3)";
  detail = oss.str();
}

// ---- criterion 8 ----
void criterion_8(std::string& detail) {
  SweepStats stats;
  sweep_g0_actions(
      3,
      [](const PartialAction& a, const MXPartition& generic, RewriteSystem&,
         SweepStats&) {
        const auto closed = classes_g0_closed_form(a);
        EXPECT(generic.class_of == closed.class_of,
               "generic and closed-form partitions must agree");
        EXPECT(generic.beta == closed.beta, "beta tables must agree");
        EXPECT(generic.iota == closed.iota, "iota tables must agree");
      },
      stats);
  std::ostringstream oss;
  oss << "partitions agree on " << stats.valid_actions
      << " enumerated actions";
  detail = oss.str();
}

// ---- criterion 9 ----
void criterion_9(std::string& detail) {
  std::vector<FiniteMonoid> monoids;
  for (int n = 1; n <= 4; ++n) {
    enumerate_monoids(n,
                      [&](const FiniteMonoid& m) { monoids.push_back(m); });
  }
  std::uint64_t actions = 0;
  for (int size = 1; size <= 4; ++size) {
    enumerate_semigroups(size, [&](const FiniteSemigroup& carrier) {
      for (const auto& monoid : monoids) {
        enumerate_global_actions(monoid, carrier,
                                 [&](const PartialAction& g) {
                                   ++actions;
                                   const auto p = classes_generic(g);
                                   RewriteSystem rs(g, p);
                                   EXPECT(is_locally_confluent(rs)
                                              .locally_confluent(),
                                          "global actions must be locally "
                                          "confluent");
                                   return true;
                                 });
      }
    });
  }
  std::ostringstream oss;
  oss << actions << " global actions (|M| <= 4, |X| <= 4), all locally "
                    "confluent";
  detail = oss.str();
}

// ---- criterion 10 ----
void check_reflection_laws(const PartialAction& a, const MXPartition& p,
                           RewriteSystem& rs) {
  const ReflectionSemigroup refl(rs);
  const auto words = refl.enumerate(3);
  // action laws
  for (const auto& w : words) {
    EXPECT(refl.act(a.monoid.identity, w) == w,
           "act(e, w) must fix normal forms");
    for (int m = 0; m < a.monoid.size(); ++m) {
      for (int n = 0; n < a.monoid.size(); ++n) {
        EXPECT(refl.act(n, refl.act(m, w)) ==
                   refl.act(a.monoid.mul(n, m), w),
               "act must compose along the monoid product");
      }
    }
  }
  // iota is a morphism of actions and a semigroup homomorphism
  for (int x = 0; x < a.carrier.size(); ++x) {
    for (int m = 0; m < a.monoid.size(); ++m) {
      if (!a.defined(m, x)) continue;
      EXPECT(refl.act(m, refl.iota_word(x)) ==
                 refl.iota_word(a.apply(m, x)),
             "act(m, iota(x)) must equal iota(alpha_m(x))");
    }
    for (int y = 0; y < a.carrier.size(); ++y) {
      EXPECT(refl.equal(refl.multiply(refl.iota_word(x), refl.iota_word(y)),
                        refl.iota_word(a.carrier.mul(x, y))),
             "iota must be a semigroup homomorphism");
    }
  }
  // associativity over the first triples in lexicographic order
  constexpr std::uint64_t kTripleCap = 20'000;
  std::uint64_t seen = 0;
  for (size_t i = 0; i < words.size() && seen < kTripleCap; ++i) {
    for (size_t j = 0; j < words.size() && seen < kTripleCap; ++j) {
      for (size_t k = 0; k < words.size() && seen < kTripleCap; ++k) {
        ++seen;
        EXPECT(refl.multiply(refl.multiply(words[i], words[j]), words[k]) ==
                   refl.multiply(words[i], refl.multiply(words[j], words[k])),
               "multiplication must be associative");
      }
    }
  }
}

void criterion_10(std::string& detail) {
  SweepStats stats;
  sweep_g0_actions(
      3,
      [](const PartialAction& a, const MXPartition& p, RewriteSystem& rs,
         SweepStats& s) {
        if (!is_locally_confluent(rs).locally_confluent()) return;
        ++s.confluent;
        check_reflection_laws(a, p, rs);
      },
      stats);

  // the left-zero counterexample: [0,a][1,b] stays distinct from [0,a]
  const auto lz = fixture("LZ-01");
  const auto p = classes_generic(lz);
  RewriteSystem rs(lz, p);
  const ReflectionSemigroup refl(rs);
  const Word w0a{p.class_id(1, 0)};
  const Word w1b{p.class_id(0, 1)};
  EXPECT(!refl.equal(refl.multiply(w0a, w1b), w0a),
         "[0,a][1,b] must differ from [0,a] in the reflection");

  std::ostringstream oss;
  oss << "reflection laws hold for " << stats.confluent
      << " locally confluent actions (associativity capped at 20000 triples "
         "per action); [0,a][1,b] != [0,a] on the left-zero counterexample";
  detail = oss.str();
}

struct Criterion {
  int number;
  void (*run)(std::string&);
  double time_limit_seconds;  // 0 = no stated limit
};

const Criterion kCriteria[] = {
    {1, criterion_1, 5.0},   {2, criterion_2, 30.0}, {3, criterion_3, 5.0},
    {4, criterion_4, 600.0}, {5, criterion_5, 0.0},  {6, criterion_6, 0.0},
    {7, criterion_7, 0.0},   {8, criterion_8, 0.0},  {9, criterion_9, 0.0},
    {10, criterion_10, 0.0},
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  if (argc > 1) only = std::atoi(argv[1]);
  bool all_passed = true;
  for (const auto& criterion : kCriteria) {
    if (only != 0 && criterion.number != only) continue;
    const auto start = Clock::now();
    std::string detail;
    bool passed = true;
    try {
      criterion.run(detail);
    } catch (const Failure& f) {
      passed = false;
      detail = f.what;
    } catch (const std::exception& e) {
      passed = false;
      detail = std::string("exception: ") + e.what();
    }
    const auto seconds =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                              start)
            .count() /
        1000.0;
    if (passed && criterion.time_limit_seconds > 0 &&
        seconds > criterion.time_limit_seconds) {
      passed = false;
      detail += " [exceeded the " +
                std::to_string(criterion.time_limit_seconds) + "s limit]";
    }
    std::cout << (passed ? "[PASS]" : "[FAIL]") << " criterion "
              << criterion.number << " (" << seconds << "s): " << detail
              << std::endl;
    all_passed &= passed;
  }
  return all_passed ? 0 : 1;
}
