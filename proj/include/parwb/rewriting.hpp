#ifndef PARWB_REWRITING_HPP_
#define PARWB_REWRITING_HPP_

#include <cstdint>
#include <optional>
#include <set>
#include <unordered_map>
#include <vector>

#include "parwb/mx_quotient.hpp"

namespace parwb {

// A word over X_M: a nonempty sequence of class ids of a bound partition.
using Word = std::vector<int>;

struct WordHash {
  size_t operator()(const Word& w) const {
    size_t h = 1469598103934665603ull;
    for (int c : w) {
      h ^= static_cast<size_t>(c) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

// The abstract rewriting system on words over X_M with the single scheme
//   u [m,x][m,y] v -> u [m,xy] v.
// One-step reducts of an adjacent pair are computed from *all* class members
// sharing the same monoid component, never from a chosen representative;
// different representatives genuinely yield different reducts. Reduct sets
// are memoized per class pair and per word.
class RewriteSystem {
 public:
  RewriteSystem(const PartialAction& action, const MXPartition& partition);

  const PartialAction& action() const { return *action_; }
  const MXPartition& partition() const { return *partition_; }
  int alphabet_size() const { return partition_->num_classes(); }

  // Sorted class ids of [m, xy] over all (m,x) in c1, (m,y) in c2 with a
  // shared m.
  const std::vector<int>& pair_reducts(int c1, int c2) const;
  // All (a, b) with c among pair_reducts(a, b), in lexicographic order.
  const std::vector<std::pair<int, int>>& expansion_pairs(int c) const;

  std::set<Word> one_step_reducts(const Word& w) const;
  bool is_normal_form(const Word& w) const;

  // Reflexive-transitive closure of one-step reduction; contains w.
  const std::set<Word>& all_reducts(const Word& w) const;
  std::set<Word> normal_forms(const Word& w) const;
  bool joinable(const Word& w1, const Word& w2) const;

  // Leftmost-innermost reduction, smallest reduct class first. Under local
  // confluence the result does not depend on this choice.
  Word normalize(Word w) const;

 private:
  const PartialAction* action_;
  const MXPartition* partition_;
  mutable std::vector<std::vector<std::optional<std::vector<int>>>> pair_cache_;
  mutable std::optional<std::vector<std::vector<std::pair<int, int>>>> expansions_;
  mutable std::unordered_map<Word, std::set<Word>, WordHash> reducts_cache_;
};

struct ConfluenceWitness {
  Word word;      // length 2 or 3
  Word reduct_a;  // two one-step reducts of word with no common reduct
  Word reduct_b;
};

struct ConfluenceVerdict {
  enum class Status { kConfluent, kNotConfluent, kTooLarge };
  Status status = Status::kConfluent;
  std::optional<ConfluenceWitness> witness;  // set iff kNotConfluent
  std::uint64_t words_checked = 0;

  bool locally_confluent() const { return status == Status::kConfluent; }
};

// Sweeps every word of length 2 and 3 in lexicographic order and checks all
// peaks for joinability; local confluence of those words decides local
// confluence of the whole system. The witness, when present, is the first
// violation in (length, word, reduct pair) order, hence deterministic.
// If the number of candidate words exceeds word_cap the verdict is kTooLarge,
// never a guess.
ConfluenceVerdict is_locally_confluent(const RewriteSystem& rs,
                                       std::uint64_t word_cap = 1'000'000);

struct EquivalenceSearch {
  enum class Status { kEquivalent, kNotWithinBounds };
  Status status = Status::kNotWithinBounds;
  std::vector<Word> chain;  // consecutive words one step apart, w1 ... w2
  std::uint64_t visited = 0;
};

// Breadth-first search over the symmetric closure of one-step reduction
// (contractions and expansions), restricted to words of length <= max_len
// and at most max_visited dequeued words. Three-valued by design: a miss is
// "not within bounds", never "inequivalent".
EquivalenceSearch equivalent_bounded(const RewriteSystem& rs, const Word& w1,
                                     const Word& w2, int max_len = 6,
                                     std::uint64_t max_visited = 100'000);

struct UniqueNfBounds {
  std::uint64_t confluence_word_cap = 1'000'000;
  int max_len = 6;
  std::uint64_t max_visited = 100'000;  // total across the whole sweep
};

struct UniqueNfViolation {
  int class_mx = -1;    // some class [m,x]
  int class_iota = -1;  // a class [e,y], distinct from class_mx
  std::vector<Word> chain;
};

struct UniqueNfResult {
  enum class Status { kHolds, kViolated, kInconclusive };
  Status status = Status::kInconclusive;
  std::optional<UniqueNfViolation> violation;
};

// The unique-normal-form condition: [m,x] equivalent to [e,y] forces
// [m,x] = [e,y]. Local confluence settles it positively (length-1 words are
// normal forms and normal forms are then unique per equivalence class);
// otherwise a bounded search over the symmetric closure looks for a
// violating chain and reports "inconclusive" when the bounds run out.
UniqueNfResult unique_nf_condition(const RewriteSystem& rs,
                                   const UniqueNfBounds& bounds = {});

}  // namespace parwb

#endif  // PARWB_REWRITING_HPP_
