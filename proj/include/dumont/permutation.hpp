#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dumont {

// A permutation of {1..n} in one-line notation. Values and positions are
// 1-based throughout; n = 0 (the empty permutation) is allowed.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> word);

  static Permutation identity(int n);

  // Accepts comma- or space-separated values, or a contiguous digit string
  // when every value is a single digit ("2143").
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(word_.size()); }
  bool empty() const { return word_.empty(); }

  // Value at 1-based position i.
  int operator()(int i) const { return word_[i - 1]; }
  const std::vector<int>& word() const { return word_; }

  // Position of value v (1-based).
  int position_of(int v) const;

  std::string str() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> word_;
};

enum class Symmetry { reverse, complement, reverse_complement, inverse };

Permutation apply_symmetry(const Permutation& p, Symmetry op);
Permutation reverse(const Permutation& p);
Permutation complement(const Permutation& p);
Permutation reverse_complement(const Permutation& p);
Permutation inverse(const Permutation& p);

// Pattern containment: some subsequence of `seq` is order-isomorphic to
// `pattern`. When `anchor_last` is set, only occurrences using the final
// element of `seq` as the last pattern letter are searched; appending one
// element to a pattern-free prefix can only create such occurrences, which
// is what the pruned generators rely on.
bool sequence_contains(std::span<const int> seq, const Permutation& pattern,
                       bool anchor_last = false);

bool contains(const Permutation& perm, const Permutation& pattern);
bool avoids(const Permutation& perm, const Permutation& pattern);
bool avoids_all(const Permutation& perm, const std::vector<Permutation>& patterns);
bool sequence_avoids_all(std::span<const int> seq,
                         const std::vector<Permutation>& patterns,
                         bool anchor_last = false);

struct StatRecord {
  int fix = 0;         // pi(i) = i
  int fix_minus1 = 0;  // pi(i) = i - 1
  int exc = 0;         // pi(i) > i
  int def = 0;         // pi(i) < i
  int lis = 0;
  int lds = 0;
  int rlm = 0;         // right-to-left minima
  int two_cycles = 0;

  bool operator==(const StatRecord&) const = default;
};

StatRecord statistics(const Permutation& p);

int longest_increasing(std::span<const int> seq);
int longest_decreasing(std::span<const int> seq);

// One cycle, written starting from its maximum element.
using Cycle = std::vector<int>;

// Disjoint cycles covering [n], sorted by minimum element; each cycle starts
// at its maximum and follows the permutation.
std::vector<Cycle> cycle_decomposition(const Permutation& p);

// "(12,8,2,1)(6,4,3)" style rendering.
std::string cycles_str(const std::vector<Cycle>& cycles);

std::vector<int> even_subsequence(const Permutation& p);
std::vector<int> odd_subsequence(const Permutation& p);

}  // namespace dumont
