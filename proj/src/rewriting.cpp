#include "parwb/rewriting.hpp"

#include <algorithm>
#include <deque>

namespace parwb {

RewriteSystem::RewriteSystem(const PartialAction& action,
                             const MXPartition& partition)
    : action_(&action), partition_(&partition) {
  pair_cache_.assign(partition.num_classes(), {});
  for (auto& row : pair_cache_) row.assign(partition.num_classes(), std::nullopt);
}

const std::vector<int>& RewriteSystem::pair_reducts(int c1, int c2) const {
  auto& slot = pair_cache_[c1][c2];
  if (!slot) {
    std::vector<int> out;
    const auto& p = *partition_;
    // members are sorted by pair index, i.e. grouped by m; walk both lists
    for (int left : p.members[c1]) {
      const int m = p.pair_m(left);
      const int x = p.pair_x(left);
      for (int right : p.members[c2]) {
        if (p.pair_m(right) != m) continue;
        const int y = p.pair_x(right);
        out.push_back(p.class_id(m, action_->carrier.mul(x, y)));
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    slot = std::move(out);
  }
  return *slot;
}

const std::vector<std::pair<int, int>>& RewriteSystem::expansion_pairs(
    int c) const {
  if (!expansions_) {
    const int k = partition_->num_classes();
    std::vector<std::vector<std::pair<int, int>>> table(k);
    for (int a = 0; a < k; ++a) {
      for (int b = 0; b < k; ++b) {
        for (int r : pair_reducts(a, b)) table[r].push_back({a, b});
      }
    }
    expansions_ = std::move(table);
  }
  return (*expansions_)[c];
}

std::set<Word> RewriteSystem::one_step_reducts(const Word& w) const {
  std::set<Word> out;
  for (size_t i = 0; i + 1 < w.size(); ++i) {
    for (int r : pair_reducts(w[i], w[i + 1])) {
      Word next;
      next.reserve(w.size() - 1);
      next.insert(next.end(), w.begin(), w.begin() + i);
      next.push_back(r);
      next.insert(next.end(), w.begin() + i + 2, w.end());
      out.insert(std::move(next));
    }
  }
  return out;
}

bool RewriteSystem::is_normal_form(const Word& w) const {
  for (size_t i = 0; i + 1 < w.size(); ++i) {
    if (!pair_reducts(w[i], w[i + 1]).empty()) return false;
  }
  return true;
}

const std::set<Word>& RewriteSystem::all_reducts(const Word& w) const {
  auto it = reducts_cache_.find(w);
  if (it != reducts_cache_.end()) return it->second;
  std::set<Word> out;
  out.insert(w);
  for (const Word& next : one_step_reducts(w)) {
    const auto& sub = all_reducts(next);
    out.insert(sub.begin(), sub.end());
  }
  return reducts_cache_.emplace(w, std::move(out)).first->second;
}

std::set<Word> RewriteSystem::normal_forms(const Word& w) const {
  std::set<Word> out;
  for (const Word& r : all_reducts(w)) {
    if (is_normal_form(r)) out.insert(r);
  }
  return out;
}

bool RewriteSystem::joinable(const Word& w1, const Word& w2) const {
  const auto& a = all_reducts(w1);
  const auto& b = all_reducts(w2);
  // both sets are ordered; intersect by merge
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      return true;
    }
  }
  return false;
}

Word RewriteSystem::normalize(Word w) const {
  for (size_t i = 0; i + 1 < w.size();) {
    const auto& reducts = pair_reducts(w[i], w[i + 1]);
    if (reducts.empty()) {
      ++i;
      continue;
    }
    w[i] = reducts.front();
    w.erase(w.begin() + i + 1);
    i = i > 0 ? i - 1 : 0;  // the new letter may form a redex with its left
  }
  return w;
}

namespace {

// Peak check shared by the 2/3-letter sweep: all one-step reducts of w must
// be pairwise joinable. Returns the first offending pair in order.
std::optional<ConfluenceWitness> peak_violation(const RewriteSystem& rs,
                                                const Word& w) {
  std::set<Word> reducts = rs.one_step_reducts(w);
  if (reducts.size() < 2) return std::nullopt;
  std::vector<Word> list(reducts.begin(), reducts.end());
  for (size_t i = 0; i < list.size(); ++i) {
    for (size_t j = i + 1; j < list.size(); ++j) {
      if (!rs.joinable(list[i], list[j])) {
        return ConfluenceWitness{w, list[i], list[j]};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

ConfluenceVerdict is_locally_confluent(const RewriteSystem& rs,
                                       std::uint64_t word_cap) {
  const std::uint64_t k = rs.alphabet_size();
  ConfluenceVerdict verdict;
  if (k * k + k * k * k > word_cap) {
    verdict.status = ConfluenceVerdict::Status::kTooLarge;
    return verdict;
  }
  const int n = static_cast<int>(k);
  for (int c1 = 0; c1 < n; ++c1) {
    for (int c2 = 0; c2 < n; ++c2) {
      ++verdict.words_checked;
      if (auto w = peak_violation(rs, Word{c1, c2})) {
        verdict.status = ConfluenceVerdict::Status::kNotConfluent;
        verdict.witness = std::move(w);
        return verdict;
      }
    }
  }
  for (int c1 = 0; c1 < n; ++c1) {
    for (int c2 = 0; c2 < n; ++c2) {
      for (int c3 = 0; c3 < n; ++c3) {
        ++verdict.words_checked;
        if (auto w = peak_violation(rs, Word{c1, c2, c3})) {
          verdict.status = ConfluenceVerdict::Status::kNotConfluent;
          verdict.witness = std::move(w);
          return verdict;
        }
      }
    }
  }
  verdict.status = ConfluenceVerdict::Status::kConfluent;
  return verdict;
}

namespace {

std::vector<Word> neighbors(const RewriteSystem& rs, const Word& w,
                            int max_len) {
  std::vector<Word> out;
  for (const Word& r : rs.one_step_reducts(w)) out.push_back(r);
  if (static_cast<int>(w.size()) < max_len) {
    for (size_t i = 0; i < w.size(); ++i) {
      for (const auto& [a, b] : rs.expansion_pairs(w[i])) {
        Word next;
        next.reserve(w.size() + 1);
        next.insert(next.end(), w.begin(), w.begin() + i);
        next.push_back(a);
        next.push_back(b);
        next.insert(next.end(), w.begin() + i + 1, w.end());
        out.push_back(std::move(next));
      }
    }
  }
  return out;
}

std::vector<Word> chain_from_parents(
    const std::unordered_map<Word, Word, WordHash>& parent, Word last) {
  std::vector<Word> chain{last};
  auto it = parent.find(last);
  while (it != parent.end() && !it->second.empty()) {
    chain.push_back(it->second);
    it = parent.find(it->second);
  }
  std::reverse(chain.begin(), chain.end());
  return chain;
}

}  // namespace

EquivalenceSearch equivalent_bounded(const RewriteSystem& rs, const Word& w1,
                                     const Word& w2, int max_len,
                                     std::uint64_t max_visited) {
  EquivalenceSearch result;
  if (w1 == w2) {
    result.status = EquivalenceSearch::Status::kEquivalent;
    result.chain = {w1};
    return result;
  }
  std::unordered_map<Word, Word, WordHash> parent;
  parent.emplace(w1, Word{});
  std::deque<Word> queue{w1};
  while (!queue.empty() && result.visited < max_visited) {
    Word current = std::move(queue.front());
    queue.pop_front();
    ++result.visited;
    for (Word& next : neighbors(rs, current, max_len)) {
      if (parent.contains(next)) continue;
      parent.emplace(next, current);
      if (next == w2) {
        result.status = EquivalenceSearch::Status::kEquivalent;
        result.chain = chain_from_parents(parent, next);
        return result;
      }
      queue.push_back(std::move(next));
    }
  }
  return result;
}

UniqueNfResult unique_nf_condition(const RewriteSystem& rs,
                                   const UniqueNfBounds& bounds) {
  UniqueNfResult result;
  const auto confluence = is_locally_confluent(rs, bounds.confluence_word_cap);
  if (confluence.locally_confluent()) {
    result.status = UniqueNfResult::Status::kHolds;
    return result;
  }
  // Not (or not provably) locally confluent: look for a violating chain from
  // every class; a hit needs two distinct single-letter words, at least one
  // of which is an iota class [e,y].
  const auto& p = rs.partition();
  std::vector<bool> is_iota(p.num_classes(), false);
  for (int c : p.iota) is_iota[c] = true;

  std::uint64_t budget = bounds.max_visited;
  for (int c = 0; c < p.num_classes() && budget > 0; ++c) {
    std::unordered_map<Word, Word, WordHash> parent;
    const Word start{c};
    parent.emplace(start, Word{});
    std::deque<Word> queue{start};
    std::uint64_t visited = 0;
    while (!queue.empty()) {
      if (visited >= budget) break;
      Word current = std::move(queue.front());
      queue.pop_front();
      ++visited;
      for (Word& next : neighbors(rs, current, bounds.max_len)) {
        if (parent.contains(next)) continue;
        parent.emplace(next, current);
        if (next.size() == 1 && next[0] != c && (is_iota[next[0]] || is_iota[c])) {
          result.status = UniqueNfResult::Status::kViolated;
          UniqueNfViolation v;
          v.class_mx = is_iota[next[0]] ? c : next[0];
          v.class_iota = is_iota[next[0]] ? next[0] : c;
          v.chain = chain_from_parents(parent, next);
          result.violation = std::move(v);
          return result;
        }
        queue.push_back(std::move(next));
      }
    }
    budget -= std::min<std::uint64_t>(budget, visited);
  }
  result.status = UniqueNfResult::Status::kInconclusive;
  return result;
}

}  // namespace parwb
