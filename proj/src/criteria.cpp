#include "parwb/criteria.hpp"

#include <algorithm>

namespace parwb {

namespace {

// Iteration range for X^1: the formal identity (-1) first, then X.
std::vector<int> x1_range(int n) {
  std::vector<int> out;
  out.reserve(n + 1);
  out.push_back(-1);
  for (int i = 0; i < n; ++i) out.push_back(i);
  return out;
}

std::string x1_name(const FiniteSemigroup& s, int x) {
  return x < 0 ? "1" : s.name(x);
}

ConditionResult not_applicable(std::string reason) {
  ConditionResult r;
  r.verdict = Verdict::kNotApplicable;
  r.reason = std::move(reason);
  return r;
}

ConditionResult pass() {
  ConditionResult r;
  r.verdict = Verdict::kPass;
  return r;
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kPass: return "pass";
    case Verdict::kFail: return "fail";
    case Verdict::kNotApplicable: return "not-applicable";
  }
  return "?";
}

ConditionResult check_lc1(const PartialAction& a) {
  auto view = as_g0(a.monoid);
  if (!view) return not_applicable("monoid is not of the form G^0");
  for (int gi = 0; gi < view->group.size(); ++gi) {
    if (!is_ideal(a.carrier, a.domain(view->group_to_monoid[gi]))) {
      return not_applicable("dom alpha_" +
                            a.monoid.name(view->group_to_monoid[gi]) +
                            " is not an ideal; LC1' applies instead");
    }
  }
  const auto& x = a.carrier;
  for (int gi = 0; gi < view->group.size(); ++gi) {
    const int g = view->group_to_monoid[gi];
    const int ginv = view->group_to_monoid[view->group.inv(gi)];
    for (int xe = 0; xe < x.size(); ++xe) {
      for (int y = 0; y < x.size(); ++y) {
        if (!a.defined(g, y)) continue;
        const int xy = x.mul(xe, y);
        // dom alpha_g is an ideal, so xy stays inside it
        if (!a.defined(g, xy)) {
          throw InternalError("LC1 sweep: ideal domain lost xy");
        }
        const int ay = a.apply(g, y);
        const int axy = a.apply(g, xy);
        for (int z = 0; z < x.size(); ++z) {
          const int lhs_arg = x.mul(axy, z);
          const int rhs_arg = x.mul(ay, z);
          if (!a.defined(ginv, lhs_arg) || !a.defined(ginv, rhs_arg)) {
            throw InternalError("LC1 sweep: image escaped dom alpha_{g^-1}");
          }
          const int lhs = a.apply(ginv, lhs_arg);
          const int rhs = x.mul(xe, a.apply(ginv, rhs_arg));
          if (lhs != rhs) {
            ConditionResult r;
            r.verdict = Verdict::kFail;
            r.witness = {g, xe, y, z};
            r.witness_text = "(g=" + a.monoid.name(g) + ", x=" + x.name(xe) +
                             ", y=" + x.name(y) + ", z=" + x.name(z) +
                             "): alpha_{g^-1}(alpha_g(xy)z) = " + x.name(lhs) +
                             " but x alpha_{g^-1}(alpha_g(y)z) = " + x.name(rhs);
            return r;
          }
        }
      }
    }
  }
  return pass();
}

ConditionResult check_lc1_prime(const PartialAction& a) {
  auto view = as_g0(a.monoid);
  if (!view) return not_applicable("monoid is not of the form G^0");
  const auto& x = a.carrier;
  for (int gi = 0; gi < view->group.size(); ++gi) {
    const int g = view->group_to_monoid[gi];
    const int ginv = view->group_to_monoid[view->group.inv(gi)];
    for (int xe = 0; xe < x.size(); ++xe) {
      for (int y = 0; y < x.size(); ++y) {
        if (!a.defined(g, y)) continue;
        const int xy = x.mul(xe, y);
        if (!a.defined(g, xy)) continue;
        const int ay = a.apply(g, y);
        const int axy = a.apply(g, xy);
        for (int z = 0; z < x.size(); ++z) {
          const int lhs_arg = x.mul(axy, z);
          const int rhs_arg = x.mul(ay, z);
          if (!a.defined(ginv, lhs_arg) || !a.defined(ginv, rhs_arg)) continue;
          const int lhs = a.apply(ginv, lhs_arg);
          const int rhs = x.mul(xe, a.apply(ginv, rhs_arg));
          if (lhs != rhs) {
            ConditionResult r;
            r.verdict = Verdict::kFail;
            r.witness = {g, xe, y, z};
            r.witness_text = "(g=" + a.monoid.name(g) + ", x=" + x.name(xe) +
                             ", y=" + x.name(y) + ", z=" + x.name(z) + ")";
            return r;
          }
        }
      }
    }
  }
  return pass();
}

Lc2PointEval eval_lc2_at(const PartialAction& a, int zero, int m, int x, int y,
                         int z) {
  const auto& s = a.carrier;
  Lc2PointEval e;
  e.xyz = s.mul1(s.mul1(x, y), z);
  e.triggered = a.defined(zero, e.xyz);
  if (!e.triggered) return e;
  e.x_amy_z = s.mul1(s.mul1(x, a.apply(m, y)), z);
  e.rhs_in_dom0 = a.defined(zero, e.x_amy_z);
  e.alpha0_lhs = a.apply(zero, e.xyz);
  if (!e.rhs_in_dom0) {
    e.holds = false;
    return e;
  }
  e.alpha0_rhs = a.apply(zero, e.x_amy_z);
  e.holds = e.alpha0_lhs == e.alpha0_rhs;
  return e;
}

ConditionResult check_lc2(const PartialAction& a) {
  auto view = as_g0(a.monoid);
  if (!view) return not_applicable("monoid is not of the form G^0");
  const int zero = view->zero;
  const auto& s = a.carrier;
  const auto x1 = x1_range(s.size());
  for (int m = 0; m < a.monoid.size(); ++m) {
    for (int x : x1) {
      for (int y = 0; y < s.size(); ++y) {
        if (!a.defined(m, y)) continue;
        for (int z : x1) {
          const auto e = eval_lc2_at(a, zero, m, x, y, z);
          if (!e.holds) {
            ConditionResult r;
            r.verdict = Verdict::kFail;
            r.witness = {m, x, y, z};
            r.witness_text =
                "(m=" + a.monoid.name(m) + ", x=" + x1_name(s, x) +
                ", y=" + s.name(y) + ", z=" + x1_name(s, z) + "): xyz=" +
                s.name(e.xyz) + " is in dom alpha_0 but " +
                (e.rhs_in_dom0
                     ? "alpha_0(xyz)=" + s.name(e.alpha0_lhs) +
                           " != alpha_0(x alpha_m(y)z)=" + s.name(e.alpha0_rhs)
                     : "x alpha_m(y)z=" + s.name(e.x_amy_z) + " is not");
            return r;
          }
        }
      }
    }
  }
  return pass();
}

ConditionResult check_lc2_prime(const PartialAction& a) {
  auto view = as_g0(a.monoid);
  if (!view) return not_applicable("monoid is not of the form G^0");
  const int zero = view->zero;
  const auto& s = a.carrier;
  const auto x1 = x1_range(s.size());
  for (int gi = 0; gi < view->group.size(); ++gi) {
    const int g = view->group_to_monoid[gi];
    for (int x : x1) {
      for (int y = 0; y < s.size(); ++y) {
        if (!a.defined(g, y)) continue;
        for (int z : x1) {
          const int xyz = s.mul1(s.mul1(x, y), z);
          if (!a.defined(zero, xyz)) continue;
          const int rhs = s.mul1(s.mul1(x, a.apply(g, y)), z);
          if (!a.defined(zero, rhs)) {
            ConditionResult r;
            r.verdict = Verdict::kFail;
            r.witness = {g, x, y, z};
            r.witness_text = "(g=" + a.monoid.name(g) + ", x=" + x1_name(s, x) +
                             ", y=" + s.name(y) + ", z=" + x1_name(s, z) +
                             "): xyz=" + s.name(xyz) +
                             " in dom alpha_0 but x alpha_g(y)z=" + s.name(rhs) +
                             " is not";
            return r;
          }
        }
      }
    }
  }
  return pass();
}

Lc3PointEval eval_lc3_at(const PartialAction& a, int zero, int g, int h, int x,
                         int y, int z) {
  const auto& s = a.carrier;
  Lc3PointEval e;
  e.xyz = s.mul1(s.mul1(x, y), z);
  e.triggered = !a.defined(zero, e.xyz);
  if (!e.triggered) return e;
  e.rhs = s.mul1(s.mul1(a.apply(g, x), a.apply(h, y)), z);
  for (int k = 0; k < a.monoid.size(); ++k) {
    if (k == zero) continue;
    if (a.defined(k, e.xyz) && a.apply(k, e.xyz) == e.rhs) {
      e.k = k;
      break;
    }
  }
  e.holds = e.k.has_value();
  return e;
}

ConditionResult check_lc3(const PartialAction& a) {
  auto view = as_g0(a.monoid);
  if (!view) return not_applicable("monoid is not of the form G^0");
  const int zero = view->zero;
  const auto& s = a.carrier;
  const auto x1 = x1_range(s.size());
  for (int gi = 0; gi < view->group.size(); ++gi) {
    const int g = view->group_to_monoid[gi];
    for (int hi = 0; hi < view->group.size(); ++hi) {
      const int h = view->group_to_monoid[hi];
      for (int x = 0; x < s.size(); ++x) {
        if (!a.defined(g, x)) continue;
        for (int y = 0; y < s.size(); ++y) {
          if (!a.defined(h, y)) continue;
          for (int z : x1) {
            const auto e = eval_lc3_at(a, zero, g, h, x, y, z);
            if (!e.holds) {
              ConditionResult r;
              r.verdict = Verdict::kFail;
              r.witness = {g, h, x, y, z};
              r.witness_text =
                  "(g=" + a.monoid.name(g) + ", h=" + a.monoid.name(h) +
                  ", x=" + s.name(x) + ", y=" + s.name(y) +
                  ", z=" + x1_name(s, z) + "): no k in G maps xyz=" +
                  s.name(e.xyz) + " to alpha_g(x)alpha_h(y)z=" + s.name(e.rhs);
              return r;
            }
          }
        }
      }
    }
  }
  return pass();
}

HPointEval eval_h_at(const PartialAction& a, int zero, int x, int y, int z) {
  const auto& s = a.carrier;
  HPointEval e;
  e.xyz = s.mul1(s.mul1(x, y), z);
  e.lhs_defined = a.defined(zero, e.xyz);
  e.rhs = s.mul1(s.mul1(x, a.apply(zero, y)), z);
  if (!e.lhs_defined) {
    e.holds = false;
    return e;
  }
  e.alpha0_xyz = a.apply(zero, e.xyz);
  e.holds = e.alpha0_xyz == e.rhs;
  return e;
}

ConditionResult check_h(const PartialAction& a) {
  auto view = as_g0(a.monoid);
  if (!view || view->group.size() != 1) {
    return not_applicable("monoid is not {0,1}");
  }
  const int zero = view->zero;
  const auto& s = a.carrier;
  const auto x1 = x1_range(s.size());
  for (int x : x1) {
    for (int y = 0; y < s.size(); ++y) {
      if (!a.defined(zero, y)) continue;
      for (int z : x1) {
        const auto e = eval_h_at(a, zero, x, y, z);
        if (!e.holds) {
          ConditionResult r;
          r.verdict = Verdict::kFail;
          r.witness = {x, y, z};
          r.witness_text =
              "(x=" + x1_name(s, x) + ", y=" + s.name(y) + ", z=" +
              x1_name(s, z) + "): " +
              (e.lhs_defined
                   ? "alpha_0(xyz)=" + s.name(e.alpha0_xyz) +
                         " != x alpha_0(y)z=" + s.name(e.rhs)
                   : "xyz=" + s.name(e.xyz) + " is not in dom alpha_0");
          return r;
        }
      }
    }
  }
  return pass();
}

ConditionResult check_left_zero_condition(const PartialAction& a,
                                          const MXPartition& p) {
  if (!a.carrier.is_left_zero() && !a.carrier.is_right_zero()) {
    throw InputError(
        "check_left_zero_condition: carrier is not a left or right zero "
        "semigroup");
  }
  const int nm = a.monoid.size();
  if (nm > 64) throw SizeCapError("check_left_zero_condition: |M| > 64");

  // occurs[c] = bitmask of those m with c in [m,X]
  std::vector<std::uint64_t> occurs(p.num_classes(), 0);
  std::vector<std::vector<int>> m_classes(nm);
  for (int m = 0; m < nm; ++m) {
    for (int x = 0; x < p.carrier_size; ++x) {
      const int c = p.class_id(m, x);
      if (!(occurs[c] >> m & 1)) {
        occurs[c] |= std::uint64_t{1} << m;
        m_classes[m].push_back(c);
      }
    }
  }
  for (int m = 0; m < nm; ++m) {
    for (int n = 0; n < nm; ++n) {
      const bool intersect = std::any_of(
          m_classes[m].begin(), m_classes[m].end(),
          [&](int c) { return occurs[c] >> n & 1; });
      if (!intersect) continue;
      for (int u : m_classes[m]) {
        for (int v : m_classes[n]) {
          if ((occurs[u] & occurs[v]) == 0) {
            ConditionResult r;
            r.verdict = Verdict::kFail;
            r.witness = {m, n, u, v};
            r.witness_text = "(m=" + a.monoid.name(m) + ", n=" +
                             a.monoid.name(n) + "): u=" +
                             class_to_string(a, p, u) + " and v=" +
                             class_to_string(a, p, v) +
                             " share no [k,X]";
            return r;
          }
        }
      }
    }
  }
  return pass();
}

G0Decision decide_g0(const PartialAction& a) {
  G0Decision d;
  auto view = as_g0(a.monoid);
  if (!view) {
    d.reason = "monoid is not of the form G^0";
    return d;
  }
  const auto hypotheses = check_ideal_hypotheses(a);
  if (!hypotheses.all_ideal()) {
    for (int m = 0; m < a.monoid.size(); ++m) {
      const auto& h = hypotheses.per_element[m];
      if (!h.dom_ideal || !h.im_ideal) {
        d.reason = std::string(!h.dom_ideal ? "dom" : "im") + " alpha_" +
                   a.monoid.name(m) + " is not an ideal";
        break;
      }
    }
    return d;
  }
  d.lc1 = check_lc1(a);
  d.lc2 = check_lc2(a);
  d.lc3 = check_lc3(a);
  d.globalizable = (d.lc1.passed() && d.lc2.passed()) ? Verdict::kPass
                                                      : Verdict::kFail;
  d.locally_confluent =
      (d.lc1.passed() && d.lc2.passed() && d.lc3.passed()) ? Verdict::kPass
                                                           : Verdict::kFail;
  if (d.globalizable == Verdict::kFail) {
    d.reason = d.lc1.failed() ? "LC1 fails" : "LC2 fails";
  } else if (d.locally_confluent == Verdict::kFail) {
    d.reason = "LC3 fails";
  }
  return d;
}

Decision01 decide_01(const PartialAction& a,
                     std::uint64_t confluence_word_cap) {
  Decision01 d;
  auto view = as_g0(a.monoid);
  if (!view || view->group.size() != 1) {
    d.reason = "monoid is not {0,1}";
    return d;
  }
  const auto hypotheses = check_ideal_hypotheses(a);
  if (!hypotheses.dom0_im0_ideal(view->zero)) {
    d.reason = "dom alpha_0 or im alpha_0 is not an ideal";
    return d;
  }
  d.h = check_h(a);
  d.g0 = decide_g0(a);
  const auto partition = classes_generic(a);
  RewriteSystem rs(a, partition);
  const auto confluence = is_locally_confluent(rs, confluence_word_cap);
  if (confluence.status == ConfluenceVerdict::Status::kTooLarge) {
    throw SizeCapError("decide_01: confluence sweep exceeds the word cap");
  }
  d.rewriting_confluent = confluence.locally_confluent();

  const bool h_yes = d.h.passed();
  const bool glob_yes = d.g0.globalizable == Verdict::kPass;
  if (h_yes != *d.rewriting_confluent || h_yes != glob_yes) {
    throw InternalError(
        "decide_01: (H), local confluence and globalizability disagree "
        "((H)=" + to_string(d.h.verdict) +
        ", confluent=" + (*d.rewriting_confluent ? "yes" : "no") +
        ", globalizable=" + to_string(d.g0.globalizable) + ")");
  }
  d.verdict = h_yes ? Verdict::kPass : Verdict::kFail;
  return d;
}

CriteriaReport run_criteria(const PartialAction& a,
                            const CriteriaOptions& options) {
  CriteriaReport report;
  const auto validation = validate_partial_action(a);
  report.action_valid = validation.ok();
  for (const auto& f : validation.failures) {
    report.axiom_failures.push_back(to_string(f.axiom) + ": " + f.detail);
  }
  if (!report.action_valid) {
    report.globalizable_reason = "action is not a strong partial action";
    report.locally_confluent_reason = report.globalizable_reason;
    report.confluence.status = "not-applicable";
    const auto na = not_applicable(report.globalizable_reason);
    report.lc1 = report.lc1_prime = report.lc2 = report.lc2_prime = na;
    report.lc3 = report.h = report.left_zero = na;
    return report;
  }

  const auto hypotheses = check_ideal_hypotheses(a);
  for (int m = 0; m < a.monoid.size(); ++m) {
    const auto& h = hypotheses.per_element[m];
    report.hypotheses.push_back(IdealHypothesisEntry{
        a.monoid.name(m), h.dom_ideal, h.im_ideal,
        h.dom_ideal && h.dom_unit.has_value(),
        h.im_ideal && h.im_unit.has_value()});
  }

  report.lc1 = check_lc1(a);
  report.lc1_prime = check_lc1_prime(a);
  report.lc2 = check_lc2(a);
  report.lc2_prime = check_lc2_prime(a);
  report.lc3 = check_lc3(a);
  report.h = check_h(a);

  const auto partition = classes_generic(a);
  if (a.carrier.is_left_zero() || a.carrier.is_right_zero()) {
    report.left_zero = check_left_zero_condition(a, partition);
  } else {
    report.left_zero = not_applicable("carrier is not a left or right zero "
                                      "semigroup");
  }

  RewriteSystem rs(a, partition);
  const auto confluence = is_locally_confluent(rs, options.confluence_word_cap);
  switch (confluence.status) {
    case ConfluenceVerdict::Status::kConfluent:
      report.confluence.status = "confluent";
      break;
    case ConfluenceVerdict::Status::kNotConfluent: {
      report.confluence.status = "not-confluent";
      auto print_word = [&](const Word& w) {
        std::string out;
        for (size_t i = 0; i < w.size(); ++i) {
          if (i) out += " ";
          out += class_to_string(a, partition, w[i]);
        }
        return out;
      };
      report.confluence.witness = {print_word(confluence.witness->word),
                                   print_word(confluence.witness->reduct_a),
                                   print_word(confluence.witness->reduct_b)};
      break;
    }
    case ConfluenceVerdict::Status::kTooLarge:
      report.confluence.status = "too-large";
      break;
  }

  const auto g0 = decide_g0(a);
  auto verdict_string = [](Verdict v) {
    return v == Verdict::kPass ? "yes"
           : v == Verdict::kFail ? "no"
                                 : "not-applicable";
  };
  report.globalizable = verdict_string(g0.globalizable);
  report.locally_confluent = verdict_string(g0.locally_confluent);
  report.globalizable_reason =
      g0.globalizable == Verdict::kNotApplicable ? g0.reason : "";
  if (g0.globalizable == Verdict::kFail ||
      g0.locally_confluent == Verdict::kFail) {
    report.locally_confluent_reason = g0.reason;
  } else if (g0.locally_confluent == Verdict::kNotApplicable) {
    report.locally_confluent_reason = g0.reason;
  }
  return report;
}

}  // namespace parwb
