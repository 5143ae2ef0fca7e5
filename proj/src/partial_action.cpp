#include "parwb/partial_action.hpp"

#include <algorithm>

namespace parwb {

Subset PartialAction::domain(int m) const {
  Subset d(carrier.size());
  for (int x = 0; x < carrier.size(); ++x)
    if (defined(m, x)) d.add(x);
  return d;
}

Subset PartialAction::image(int m) const {
  Subset im(carrier.size());
  for (int x = 0; x < carrier.size(); ++x)
    if (defined(m, x)) im.add(apply(m, x));
  return im;
}

bool PartialAction::is_global() const {
  for (int m = 0; m < monoid.size(); ++m)
    for (int x = 0; x < carrier.size(); ++x)
      if (!defined(m, x)) return false;
  return true;
}

std::optional<ActionLawViolation> action_law_violation(
    const FiniteMonoid& monoid, const GlobalActionOnSet& beta) {
  const int nm = monoid.size();
  if (static_cast<int>(beta.maps.size()) != nm) {
    return ActionLawViolation{-1, -1, -1, "wrong number of maps"};
  }
  for (int m = 0; m < nm; ++m) {
    if (static_cast<int>(beta.maps[m].size()) != beta.set_size) {
      return ActionLawViolation{m, -1, -1, "map is not total"};
    }
    for (int i = 0; i < beta.set_size; ++i) {
      const int v = beta.maps[m][i];
      if (v < 0 || v >= beta.set_size) {
        return ActionLawViolation{m, -1, i, "value out of range"};
      }
    }
  }
  const int e = monoid.identity;
  for (int i = 0; i < beta.set_size; ++i) {
    if (beta.maps[e][i] != i) {
      return ActionLawViolation{e, -1, i, "beta_e is not the identity"};
    }
  }
  for (int m = 0; m < nm; ++m) {
    for (int n = 0; n < nm; ++n) {
      const int nm_prod = monoid.mul(n, m);
      for (int i = 0; i < beta.set_size; ++i) {
        if (beta.maps[n][beta.maps[m][i]] != beta.maps[nm_prod][i]) {
          return ActionLawViolation{m, n, i,
                                    "beta_n . beta_m differs from beta_{nm}"};
        }
      }
    }
  }
  return std::nullopt;
}

std::string to_string(Axiom axiom) {
  switch (axiom) {
    case Axiom::kPA1: return "PA1";
    case Axiom::kPA2Strong: return "PA2-strong";
    case Axiom::kPA3: return "PA3";
    case Axiom::kDomainSubsemigroup: return "domain-subsemigroup";
    case Axiom::kMapHomomorphism: return "map-homomorphism";
  }
  return "?";
}

ActionValidation validate_partial_action(const PartialAction& a) {
  const int nm = a.monoid.size();
  const int nx = a.carrier.size();
  if (static_cast<int>(a.maps.size()) != nm) {
    throw InputError("maps must be indexed by all " + std::to_string(nm) +
                     " monoid elements, got " + std::to_string(a.maps.size()));
  }
  for (int m = 0; m < nm; ++m) {
    if (static_cast<int>(a.maps[m].size()) != nx) {
      throw InputError("map for monoid element " + std::to_string(m) +
                       " has wrong length");
    }
    for (int x = 0; x < nx; ++x) {
      const int v = a.maps[m][x];
      if (v != PartialAction::kUndefined && (v < 0 || v >= nx)) {
        throw InputError("map value out of range at (m=" + std::to_string(m) +
                         ", x=" + std::to_string(x) + ")");
      }
    }
  }

  ActionValidation out;
  const int e = a.monoid.identity;

  // PA1
  for (int x = 0; x < nx; ++x) {
    if (a.apply(e, x) != x) {
      out.failures.push_back(
          {Axiom::kPA1, {x},
           "alpha_e must be the identity; fails at x=" + a.carrier.name(x)});
      break;
    }
  }

  // PA2 strong: alpha_m^{-1}(dom alpha_n) = dom alpha_{nm} /\ dom alpha_m
  {
    bool found = false;
    for (int m = 0; m < nm && !found; ++m) {
      for (int n = 0; n < nm && !found; ++n) {
        const int nm_prod = a.monoid.mul(n, m);
        for (int x = 0; x < nx && !found; ++x) {
          const bool lhs = a.defined(m, x) && a.defined(n, a.apply(m, x));
          const bool rhs = a.defined(nm_prod, x) && a.defined(m, x);
          if (lhs != rhs) {
            out.failures.push_back(
                {Axiom::kPA2Strong, {m, n, x},
                 "at (m=" + a.monoid.name(m) + ", n=" + a.monoid.name(n) +
                     ", x=" + a.carrier.name(x) + ")"});
            found = true;
          }
        }
      }
    }
  }

  // PA3: alpha_n(alpha_m(x)) = alpha_{nm}(x) where both sides are defined
  {
    bool found = false;
    for (int m = 0; m < nm && !found; ++m) {
      for (int n = 0; n < nm && !found; ++n) {
        const int nm_prod = a.monoid.mul(n, m);
        for (int x = 0; x < nx && !found; ++x) {
          if (!a.defined(m, x) || !a.defined(n, a.apply(m, x))) continue;
          if (!a.defined(nm_prod, x)) continue;  // reported by PA2
          if (a.apply(n, a.apply(m, x)) != a.apply(nm_prod, x)) {
            out.failures.push_back(
                {Axiom::kPA3, {m, n, x},
                 "alpha_n(alpha_m(x)) != alpha_{nm}(x) at (m=" +
                     a.monoid.name(m) + ", n=" + a.monoid.name(n) +
                     ", x=" + a.carrier.name(x) + ")"});
            found = true;
          }
        }
      }
    }
  }

  // each domain a subsemigroup, each map a homomorphism on it
  {
    bool dom_found = false, hom_found = false;
    for (int m = 0; m < nm; ++m) {
      for (int x = 0; x < nx; ++x) {
        if (!a.defined(m, x)) continue;
        for (int y = 0; y < nx; ++y) {
          if (!a.defined(m, y)) continue;
          const int xy = a.carrier.mul(x, y);
          if (!a.defined(m, xy)) {
            if (!dom_found) {
              out.failures.push_back(
                  {Axiom::kDomainSubsemigroup, {m, x, y},
                   "x*y escapes dom alpha_m at (m=" + a.monoid.name(m) +
                       ", x=" + a.carrier.name(x) + ", y=" + a.carrier.name(y) +
                       ")"});
              dom_found = true;
            }
          } else if (a.carrier.mul(a.apply(m, x), a.apply(m, y)) !=
                     a.apply(m, xy)) {
            if (!hom_found) {
              out.failures.push_back(
                  {Axiom::kMapHomomorphism, {m, x, y},
                   "alpha_m(x)alpha_m(y) != alpha_m(xy) at (m=" +
                       a.monoid.name(m) + ", x=" + a.carrier.name(x) +
                       ", y=" + a.carrier.name(y) + ")"});
              hom_found = true;
            }
          }
          if (dom_found && hom_found) break;
        }
        if (dom_found && hom_found) break;
      }
      if (dom_found && hom_found) break;
    }
  }

  return out;
}

bool IdealReport::all_ideal() const {
  return std::all_of(per_element.begin(), per_element.end(),
                     [](const PerElement& p) { return p.dom_ideal && p.im_ideal; });
}

bool IdealReport::all_unital() const {
  return std::all_of(per_element.begin(), per_element.end(),
                     [](const PerElement& p) {
                       return p.dom_ideal && p.im_ideal &&
                              p.dom_unit.has_value() && p.im_unit.has_value();
                     });
}

bool IdealReport::dom0_im0_ideal(int zero) const {
  return per_element[zero].dom_ideal && per_element[zero].im_ideal;
}

IdealReport check_ideal_hypotheses(const PartialAction& a) {
  IdealReport report;
  report.per_element.resize(a.monoid.size());
  for (int m = 0; m < a.monoid.size(); ++m) {
    const Subset dom = a.domain(m);
    const Subset im = a.image(m);
    auto& p = report.per_element[m];
    p.dom_ideal = is_ideal(a.carrier, dom);
    p.im_ideal = is_ideal(a.carrier, im);
    p.dom_unit = inner_identity(a.carrier, dom);
    p.im_unit = inner_identity(a.carrier, im);
  }
  return report;
}

PartialAction restrict_global(const PartialAction& global, const Subset& y) {
  if (!global.is_global()) {
    throw InputError("restrict_global: the action to restrict must be global");
  }
  if (y.carrier_size() != global.carrier.size()) {
    throw InputError("restrict_global: subset is over a different carrier");
  }
  if (!is_subsemigroup(global.carrier, y)) {
    throw InputError("restrict_global: Y is not a subsemigroup");
  }
  const auto members = y.members();
  const int k = static_cast<int>(members.size());
  if (k == 0) throw InputError("restrict_global: Y is empty");

  std::vector<int> to_sub(global.carrier.size(), -1);
  std::vector<std::string> names(k);
  for (int i = 0; i < k; ++i) {
    to_sub[members[i]] = i;
    names[i] = global.carrier.name(members[i]);
  }
  std::vector<std::vector<int>> table(k, std::vector<int>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      table[i][j] = to_sub[global.carrier.mul(members[i], members[j])];
  FiniteSemigroup sub(names, table);

  PartialAction out;
  out.monoid = global.monoid;
  out.carrier = std::move(sub);
  out.maps.assign(global.monoid.size(),
                  std::vector<int>(k, PartialAction::kUndefined));
  for (int m = 0; m < global.monoid.size(); ++m) {
    for (int i = 0; i < k; ++i) {
      const int img = global.apply(m, members[i]);
      if (y.contains(img)) out.maps[m][i] = to_sub[img];
    }
  }
  return out;
}

PartialAction induced_group_action(const PartialAction& a) {
  auto view = as_g0(a.monoid);
  if (!view) {
    throw InputError("induced_group_action: monoid is not of the form G^0");
  }
  PartialAction out;
  out.monoid = view->group.monoid;
  out.carrier = a.carrier;
  out.maps.resize(view->group.size());
  for (int gi = 0; gi < view->group.size(); ++gi) {
    out.maps[gi] = a.maps[view->group_to_monoid[gi]];
  }
  return out;
}

}  // namespace parwb
