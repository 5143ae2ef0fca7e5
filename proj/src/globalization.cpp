#include "parwb/globalization.hpp"

#include <algorithm>

namespace parwb {

GlobalActionOnSet set_globalization(const MXPartition& partition) {
  GlobalActionOnSet beta;
  beta.set_size = partition.num_classes();
  beta.maps = partition.beta;
  return beta;
}

GlobalizationCheck verify_globalization(const PartialAction& alpha,
                                        const GlobalActionOnSet& beta,
                                        const std::vector<int>& iota,
                                        const FiniteSemigroup* beta_carrier) {
  GlobalizationCheck check;
  if (static_cast<int>(iota.size()) != alpha.carrier.size()) {
    check.ok = false;
    check.what = "iota is not total on the carrier";
    return check;
  }
  for (int v : iota) {
    if (v < 0 || v >= beta.set_size) {
      check.ok = false;
      check.what = "iota value out of range";
      return check;
    }
  }
  if (auto violation = action_law_violation(alpha.monoid, beta)) {
    check.ok = false;
    check.what = "beta is not a global action: " + violation->detail;
    check.counterexample = {violation->m, violation->n, violation->i};
    return check;
  }
  if (beta_carrier != nullptr) {
    if (beta_carrier->size() != beta.set_size) {
      check.ok = false;
      check.what = "beta carrier size mismatch";
      return check;
    }
    for (int m = 0; m < alpha.monoid.size(); ++m) {
      for (int u = 0; u < beta.set_size; ++u) {
        for (int v = 0; v < beta.set_size; ++v) {
          if (beta.maps[m][beta_carrier->mul(u, v)] !=
              beta_carrier->mul(beta.maps[m][u], beta.maps[m][v])) {
            check.ok = false;
            check.what = "beta_m is not a semigroup homomorphism";
            check.counterexample = {m, u, v};
            return check;
          }
        }
      }
    }
    for (int x = 0; x < alpha.carrier.size(); ++x) {
      for (int y = 0; y < alpha.carrier.size(); ++y) {
        if (iota[alpha.carrier.mul(x, y)] !=
            beta_carrier->mul(iota[x], iota[y])) {
          check.ok = false;
          check.what = "iota is not a semigroup homomorphism";
          check.counterexample = {x, y};
          return check;
        }
      }
    }
  }
  // morphism property on the domains
  for (int m = 0; m < alpha.monoid.size(); ++m) {
    for (int x = 0; x < alpha.carrier.size(); ++x) {
      if (!alpha.defined(m, x)) continue;
      if (beta.maps[m][iota[x]] != iota[alpha.apply(m, x)]) {
        check.ok = false;
        check.what = "iota is not a morphism of partial actions";
        check.counterexample = {m, x, alpha.apply(m, x)};
        return check;
      }
    }
  }
  // globalization pullback
  for (int m = 0; m < alpha.monoid.size(); ++m) {
    for (int x = 0; x < alpha.carrier.size(); ++x) {
      const int image = beta.maps[m][iota[x]];
      for (int y = 0; y < alpha.carrier.size(); ++y) {
        if (iota[y] != image) continue;
        if (!alpha.defined(m, x) || alpha.apply(m, x) != y) {
          check.ok = false;
          check.what = "globalization pullback fails";
          check.counterexample = {m, x, y};
          return check;
        }
      }
    }
  }
  return check;
}

std::variant<InducedMorphism, IllDefinedMorphism> induced_morphism(
    const PartialAction& alpha, const MXPartition& partition,
    const GlobalActionOnSet& gamma, const std::vector<int>& kappa) {
  if (static_cast<int>(kappa.size()) != alpha.carrier.size()) {
    throw InputError("induced_morphism: kappa is not total on the carrier");
  }
  if (auto violation = action_law_violation(alpha.monoid, gamma)) {
    throw InputError("induced_morphism: gamma is not a global action: " +
                     violation->detail);
  }
  for (int m = 0; m < alpha.monoid.size(); ++m) {
    for (int x = 0; x < alpha.carrier.size(); ++x) {
      if (!alpha.defined(m, x)) continue;
      if (gamma.maps[m][kappa[x]] != kappa[alpha.apply(m, x)]) {
        throw InputError(
            "induced_morphism: kappa is not a morphism from alpha to gamma");
      }
    }
  }

  InducedMorphism out;
  out.kappa_prime.assign(partition.num_classes(), -1);
  std::vector<int> first_member(partition.num_classes(), -1);
  for (int c = 0; c < partition.num_classes(); ++c) {
    for (int member : partition.members[c]) {
      const int m = partition.pair_m(member);
      const int x = partition.pair_x(member);
      const int value = gamma.maps[m][kappa[x]];
      if (out.kappa_prime[c] < 0) {
        out.kappa_prime[c] = value;
        first_member[c] = member;
      } else if (out.kappa_prime[c] != value) {
        return IllDefinedMorphism{first_member[c], member};
      }
    }
  }
  // kappa' . iota = kappa
  for (int x = 0; x < alpha.carrier.size(); ++x) {
    if (out.kappa_prime[partition.iota[x]] != kappa[x]) {
      throw InternalError("induced_morphism: kappa' . iota differs from kappa");
    }
  }
  // equivariance
  for (int m = 0; m < alpha.monoid.size(); ++m) {
    for (int c = 0; c < partition.num_classes(); ++c) {
      if (out.kappa_prime[partition.beta[m][c]] !=
          gamma.maps[m][out.kappa_prime[c]]) {
        throw InternalError("induced_morphism: kappa' is not equivariant");
      }
    }
  }
  return out;
}

ReflectionSemigroup::ReflectionSemigroup(const RewriteSystem& rs,
                                         std::uint64_t confluence_word_cap)
    : rs_(&rs) {
  const auto verdict = is_locally_confluent(rs, confluence_word_cap);
  if (verdict.status == ConfluenceVerdict::Status::kTooLarge) {
    throw InputError(
        "reflection: confluence sweep exceeds the word cap, equality would "
        "be undecided");
  }
  if (verdict.status == ConfluenceVerdict::Status::kNotConfluent) {
    throw InputError(
        "reflection: the rewriting system is not locally confluent, so "
        "normal forms do not decide equality");
  }
}

Word ReflectionSemigroup::multiply(const Word& a, const Word& b) const {
  Word concat = a;
  concat.insert(concat.end(), b.begin(), b.end());
  return rs_->normalize(std::move(concat));
}

bool ReflectionSemigroup::equal(const Word& a, const Word& b) const {
  return rs_->normalize(a) == rs_->normalize(b);
}

Word ReflectionSemigroup::act(int m, const Word& w) const {
  const auto& beta = rs_->partition().beta[m];
  Word moved;
  moved.reserve(w.size());
  for (int c : w) moved.push_back(beta[c]);
  return rs_->normalize(std::move(moved));
}

Word ReflectionSemigroup::iota_word(int x) const {
  return Word{rs_->partition().iota[x]};
}

std::vector<Word> ReflectionSemigroup::enumerate(int max_len) const {
  // a word is in normal form iff every adjacent pair has no reducts, so
  // extend normal forms letter by letter
  std::vector<Word> out;
  std::vector<Word> frontier;
  const int k = rs_->alphabet_size();
  for (int c = 0; c < k; ++c) frontier.push_back(Word{c});
  for (int len = 1; len <= max_len && !frontier.empty(); ++len) {
    std::vector<Word> next;
    for (const Word& w : frontier) {
      out.push_back(w);
      if (len == max_len) continue;
      for (int c = 0; c < k; ++c) {
        if (rs_->pair_reducts(w.back(), c).empty()) {
          Word extended = w;
          extended.push_back(c);
          next.push_back(std::move(extended));
        }
      }
    }
    frontier = std::move(next);
  }
  return out;
}

LeftZeroGlobalization left_zero_globalization(const PartialAction& alpha) {
  if (!alpha.carrier.is_left_zero()) {
    throw InputError("left_zero_globalization: carrier is not left-zero");
  }
  LeftZeroGlobalization out;
  out.partition = classes_generic(alpha);
  const int k = out.partition.num_classes();
  std::vector<std::string> names(k);
  for (int c = 0; c < k; ++c) {
    names[c] = pair_to_string(alpha, out.partition.members[c].front());
  }
  std::vector<std::vector<int>> table(k, std::vector<int>(k));
  for (int u = 0; u < k; ++u) std::fill(table[u].begin(), table[u].end(), u);
  out.carrier = FiniteSemigroup(std::move(names), table);
  out.beta = set_globalization(out.partition);
  out.iota = out.partition.iota;
  return out;
}

}  // namespace parwb
